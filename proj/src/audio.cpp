#include "onsetpair/audio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <numeric>

namespace onsetpair {

namespace {

constexpr uint16_t kFormatPcm = 0x0001;
constexpr uint16_t kFormatFloat = 0x0003;
constexpr uint16_t kFormatExtensible = 0xFFFE;

uint32_t read_u32(const unsigned char* p) {
    return static_cast<uint32_t>(p[0]) | static_cast<uint32_t>(p[1]) << 8 |
           static_cast<uint32_t>(p[2]) << 16 | static_cast<uint32_t>(p[3]) << 24;
}

uint16_t read_u16(const unsigned char* p) {
    return static_cast<uint16_t>(p[0] | p[1] << 8);
}

[[noreturn]] void malformed(const std::string& what) {
    throw WavError(WavError::Kind::malformed, "malformed WAV file: " + what);
}

}  // namespace

AudioBuffer load_wav(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw WavError(WavError::Kind::unreadable, "cannot open " + path.string());
    }
    std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                     std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw WavError(WavError::Kind::unreadable, "read failure on " + path.string());
    }
    if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
        std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
        malformed("missing RIFF/WAVE header");
    }

    uint16_t format = 0;
    uint16_t n_channels = 0;
    uint16_t bits = 0;
    uint32_t rate = 0;
    bool have_fmt = false;
    const unsigned char* data = nullptr;
    size_t data_len = 0;

    size_t pos = 12;
    while (pos + 8 <= bytes.size()) {
        const unsigned char* chunk = bytes.data() + pos;
        const uint32_t chunk_len = read_u32(chunk + 4);
        const unsigned char* body = chunk + 8;
        if (pos + 8 + chunk_len > bytes.size()) {
            malformed("truncated chunk");
        }
        if (std::memcmp(chunk, "fmt ", 4) == 0) {
            if (chunk_len < 16) malformed("short fmt chunk");
            format = read_u16(body);
            n_channels = read_u16(body + 2);
            rate = read_u32(body + 4);
            bits = read_u16(body + 14);
            if (format == kFormatExtensible) {
                if (chunk_len < 40) malformed("short extensible fmt chunk");
                format = read_u16(body + 24);  // first word of the subformat GUID
            }
            have_fmt = true;
        } else if (std::memcmp(chunk, "data", 4) == 0) {
            data = body;
            data_len = chunk_len;
        }
        pos += 8 + chunk_len + (chunk_len & 1);  // chunks are word aligned
    }

    if (!have_fmt || data == nullptr) malformed("missing fmt or data chunk");
    if (rate == 0 || n_channels == 0) malformed("zero rate or channel count");

    const bool pcm16 = format == kFormatPcm && bits == 16;
    const bool pcm24 = format == kFormatPcm && bits == 24;
    const bool f32 = format == kFormatFloat && bits == 32;
    if (!pcm16 && !pcm24 && !f32) {
        throw WavError(WavError::Kind::unsupported_codec,
                       "unsupported WAV encoding (format tag " + std::to_string(format) + ", " +
                           std::to_string(bits) + " bits); expected 16/24-bit PCM or 32-bit float");
    }

    const size_t bytes_per_sample = bits / 8;
    const size_t frame_bytes = bytes_per_sample * n_channels;
    const size_t n_frames = data_len / frame_bytes;
    if (n_frames == 0) {
        throw WavError(WavError::Kind::empty_audio, "WAV file holds no audio samples");
    }

    AudioBuffer buf;
    buf.sample_rate = static_cast<int>(rate);
    buf.samples.resize(n_frames);
    const double inv_channels = 1.0 / n_channels;
    for (size_t i = 0; i < n_frames; ++i) {
        const unsigned char* frame = data + i * frame_bytes;
        double acc = 0.0;
        for (size_t c = 0; c < n_channels; ++c) {
            const unsigned char* s = frame + c * bytes_per_sample;
            if (pcm16) {
                const auto v = static_cast<int16_t>(s[0] | s[1] << 8);
                acc += v / 32768.0;
            } else if (pcm24) {
                int32_t v = s[0] | s[1] << 8 | s[2] << 16;
                if (v & 0x800000) v -= 0x1000000;
                acc += v / 8388608.0;
            } else {
                float v;
                std::memcpy(&v, s, 4);
                acc += v;
            }
        }
        buf.samples[i] = acc * inv_channels;
    }
    for (double v : buf.samples) {
        if (!std::isfinite(v)) malformed("non-finite sample value");
    }
    return buf;
}

void save_wav(const AudioBuffer& buf, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw WavError(WavError::Kind::unreadable, "cannot open " + path.string() + " for writing");
    }
    const uint32_t n = static_cast<uint32_t>(buf.samples.size());
    const uint32_t data_len = n * 2;
    const uint32_t rate = static_cast<uint32_t>(buf.sample_rate);

    auto put_u32 = [&](uint32_t v) {
        char b[4] = {static_cast<char>(v), static_cast<char>(v >> 8), static_cast<char>(v >> 16),
                     static_cast<char>(v >> 24)};
        out.write(b, 4);
    };
    auto put_u16 = [&](uint16_t v) {
        char b[2] = {static_cast<char>(v), static_cast<char>(v >> 8)};
        out.write(b, 2);
    };

    out.write("RIFF", 4);
    put_u32(36 + data_len);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    put_u32(16);
    put_u16(kFormatPcm);
    put_u16(1);
    put_u32(rate);
    put_u32(rate * 2);
    put_u16(2);
    put_u16(16);
    out.write("data", 4);
    put_u32(data_len);
    for (uint32_t i = 0; i < n; ++i) {
        const double clamped = std::clamp(buf.samples[i], -1.0, 1.0);
        put_u16(static_cast<uint16_t>(static_cast<int16_t>(std::lround(clamped * 32767.0))));
    }
    if (!out) {
        throw WavError(WavError::Kind::unreadable, "write failure on " + path.string());
    }
}

namespace {

double bessel_i0(double x) {
    // Series expansion; converges quickly for the beta values used here.
    double sum = 1.0;
    double term = 1.0;
    const double half = x / 2.0;
    for (int k = 1; k < 64; ++k) {
        term *= (half / k) * (half / k);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum;
}

double sinc(double x) {
    if (x == 0.0) return 1.0;
    const double px = std::numbers::pi * x;
    return std::sin(px) / px;
}

}  // namespace

AudioBuffer resample(const AudioBuffer& buf, int target_rate) {
    if (target_rate <= 0) {
        throw std::invalid_argument("resample: target_rate must be positive");
    }
    if (buf.sample_rate <= 0) {
        throw std::invalid_argument("resample: source sample rate must be positive");
    }
    if (target_rate == buf.sample_rate) {
        return buf;
    }

    const int64_t g = std::gcd(buf.sample_rate, target_rate);
    const int64_t up = target_rate / g;          // L
    const int64_t down = buf.sample_rate / g;    // M
    const double fs_up = static_cast<double>(buf.sample_rate) * static_cast<double>(up);
    const double narrow_rate = std::min(buf.sample_rate, target_rate);

    // Kaiser lowpass with passband edge 0.45 and stopband edge 0.5 of the
    // narrower rate: 70 dB stopband keeps folded aliases (and images when
    // upsampling) at least 60 dB down with margin.
    const double atten_db = 70.0;
    const double beta = 0.1102 * (atten_db - 8.7);
    const double cutoff = 0.475 * narrow_rate / fs_up;  // cycles per upsampled sample
    const double delta_omega = 2.0 * std::numbers::pi * 0.05 * narrow_rate / fs_up;
    int64_t taps = static_cast<int64_t>(std::ceil((atten_db - 7.95) / (2.285 * delta_omega))) + 1;
    if (taps % 2 == 0) ++taps;
    const int64_t center = (taps - 1) / 2;

    std::vector<double> h(taps);
    const double i0_beta = bessel_i0(beta);
    for (int64_t i = 0; i < taps; ++i) {
        const double m = static_cast<double>(i - center);
        const double w = bessel_i0(beta * std::sqrt(std::max(
                             0.0, 1.0 - (m / center) * (m / center)))) /
                         i0_beta;
        h[i] = 2.0 * cutoff * sinc(2.0 * cutoff * m) * w;
    }
    // Unit DC gain per polyphase branch: a constant input maps to the same
    // constant output away from the edges.
    for (int64_t p = 0; p < up; ++p) {
        double s = 0.0;
        for (int64_t i = p; i < taps; i += up) s += h[i];
        if (s != 0.0) {
            for (int64_t i = p; i < taps; i += up) h[i] /= s;
        }
    }

    const int64_t n_in = static_cast<int64_t>(buf.samples.size());
    const int64_t n_out = static_cast<int64_t>(std::llround(
        static_cast<double>(n_in) * target_rate / buf.sample_rate));

    AudioBuffer out;
    out.sample_rate = target_rate;
    out.samples.resize(n_out);
    const double* x = buf.samples.data();
    for (int64_t k = 0; k < n_out; ++k) {
        const int64_t pos = k * down + center;  // on the upsampled grid
        double acc = 0.0;
        for (int64_t i = pos % up; i < taps; i += up) {
            const int64_t n = (pos - i) / up;
            if (n >= 0 && n < n_in) acc += h[i] * x[n];
        }
        out.samples[k] = acc;
    }
    return out;
}

}  // namespace onsetpair
