#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace onsetpair {

// Uniformly sampled mono signal, nominal full scale +/-1.
struct AudioBuffer {
    std::vector<double> samples;
    int sample_rate = 0;

    double duration_seconds() const {
        return sample_rate > 0 ? static_cast<double>(samples.size()) / sample_rate : 0.0;
    }
};

class WavError : public std::runtime_error {
  public:
    enum class Kind { unreadable, malformed, unsupported_codec, empty_audio };

    WavError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

// Decodes a RIFF/WAVE file (16/24-bit PCM or 32-bit IEEE float), mixes all
// channels to mono by arithmetic mean and scales to [-1, 1].
AudioBuffer load_wav(const std::filesystem::path& path);

// Writes a mono 16-bit PCM WAV file.
void save_wav(const AudioBuffer& buf, const std::filesystem::path& path);

// Band-limited resampling at a rational ratio (polyphase Kaiser-windowed
// sinc, aliasing suppressed by at least 60 dB). Output length is
// round(n * target_rate / source_rate). Returns the input unchanged when
// the rates already match.
AudioBuffer resample(const AudioBuffer& buf, int target_rate);

}  // namespace onsetpair
