#include "onsetpair/filterbank.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"

namespace onsetpair {

void validate(const FilterbankSpec& spec) {
    if (spec.n_channels < 1) {
        throw std::invalid_argument("filterbank: n_channels must be at least 1");
    }
    if (!(spec.f_lo > 0.0) || !(spec.f_lo < spec.f_hi) ||
        !(spec.f_hi < spec.sample_rate / 2.0)) {
        throw std::invalid_argument(
            "filterbank: need 0 < f_lo < f_hi < sample_rate / 2");
    }
}

double erb_rate(double freq_hz) {
    return 21.4 * std::log10(0.00437 * freq_hz + 1.0);
}

double erb_rate_inverse(double erb) {
    return (std::pow(10.0, erb / 21.4) - 1.0) / 0.00437;
}

double erb_bandwidth(double freq_hz) {
    return 24.7 * (0.00437 * freq_hz + 1.0);
}

std::vector<double> erb_space(const FilterbankSpec& spec) {
    validate(spec);
    const int n = spec.n_channels;
    if (n == 1) return {spec.f_lo};
    std::vector<double> freqs(n);
    const double e_lo = erb_rate(spec.f_lo);
    const double e_hi = erb_rate(spec.f_hi);
    const double step = (e_hi - e_lo) / (n - 1);
    freqs.front() = spec.f_lo;
    freqs.back() = spec.f_hi;
    for (int i = 1; i + 1 < n; ++i) {
        freqs[i] = erb_rate_inverse(e_lo + step * i);
    }
    return freqs;
}

Cochleagram apply_filterbank(const AudioBuffer& buf, const FilterbankSpec& spec, int n_threads) {
    validate(spec);
    if (buf.sample_rate != spec.sample_rate) {
        throw std::invalid_argument("apply_filterbank: buffer rate does not match the spec");
    }
    if (buf.samples.empty()) {
        throw std::invalid_argument("apply_filterbank: empty buffer");
    }

    Cochleagram coch;
    coch.sample_rate = spec.sample_rate;
    coch.center_freqs = erb_space(spec);
    coch.channels.resize(spec.n_channels);

    const double fs = spec.sample_rate;
    const std::size_t n = buf.samples.size();
    const double* x = buf.samples.data();

    detail::parallel_for(spec.n_channels, n_threads, [&](int64_t c) {
        const double fc = coch.center_freqs[static_cast<std::size_t>(c)];
        // Order-4 gammatone bandwidth correction on the Glasberg-Moore ERB.
        const double bw = 1.019 * erb_bandwidth(fc);
        const double r = std::exp(-2.0 * std::numbers::pi * bw / fs);
        const std::complex<double> pole = std::polar(r, 2.0 * std::numbers::pi * fc / fs);
        const double gain = 2.0 * std::pow(1.0 - r, 4);  // unit response at fc

        auto& y = coch.channels[static_cast<std::size_t>(c)];
        y.resize(n);
        std::complex<double> s0{}, s1{}, s2{}, s3{};
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> v(x[i], 0.0);
            v += pole * s0;
            s0 = v;
            v += pole * s1;
            s1 = v;
            v += pole * s2;
            s2 = v;
            v += pole * s3;
            s3 = v;
            y[i] = gain * v.real();
        }
    });
    return coch;
}

}  // namespace onsetpair
