#pragma once

#include <vector>

#include "onsetpair/audio.hpp"

namespace onsetpair {

struct FilterbankSpec {
    int n_channels = 64;
    double f_lo = 80.0;
    double f_hi = 4000.0;
    int sample_rate = 11025;
};

void validate(const FilterbankSpec& spec);

// Parallel gammatone filter outputs, one row per channel, all rows the
// length of the input. Center frequencies are strictly increasing.
struct Cochleagram {
    std::vector<std::vector<double>> channels;
    std::vector<double> center_freqs;
    int sample_rate = 0;

    std::size_t n_channels() const { return channels.size(); }
    std::size_t n_samples() const { return channels.empty() ? 0 : channels.front().size(); }
};

// Glasberg-Moore ERB-rate scale: 21.4 * log10(0.00437 f + 1).
double erb_rate(double freq_hz);
double erb_rate_inverse(double erb);

// Equivalent rectangular bandwidth at freq_hz: 24.7 * (0.00437 f + 1).
double erb_bandwidth(double freq_hz);

// n_channels center frequencies uniformly spaced on the ERB-rate scale,
// endpoints exactly at f_lo and f_hi.
std::vector<double> erb_space(const FilterbankSpec& spec);

// 4th-order gammatone filterbank: per channel a cascade of four complex
// one-pole resonators with the order-4 bandwidth correction 1.019, unit
// magnitude response at the center frequency. Output is the raw filtered
// waveform. Channels may be filtered in parallel; the result is
// bit-identical for any thread count.
Cochleagram apply_filterbank(const AudioBuffer& buf, const FilterbankSpec& spec,
                             int n_threads = 0);

}  // namespace onsetpair
