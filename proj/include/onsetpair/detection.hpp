#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "onsetpair/events.hpp"
#include "onsetpair/filterbank.hpp"

namespace onsetpair {

// Frame geometry of the correntropy analysis. A frame starting at sample t
// reads samples t .. t + window_size + max_lag - 1, so the last frame is the
// largest hop multiple with t + window_size + max_lag <= signal length.
struct CorrentropyParams {
    int window_size = 137;  // N, defaults to sample_rate / 80
    int max_lag = 137;      // tau_max, same default
    int hop = 55;           // frame step, defaults to 5 ms

    static CorrentropyParams defaults(int sample_rate, double hop_ms = 5.0);
};

void validate(const CorrentropyParams& params);

// Pooled correntropy frames W_t(tau), tau = 1..max_lag, on the hop grid.
struct CorrentropySeries {
    std::vector<std::vector<double>> frames;  // one vector of length max_lag per frame
    std::vector<double> frame_times;          // seconds of each frame start
    std::vector<double> sigma_track;          // kernel bandwidth used per frame
    int hop = 0;
    int sample_rate = 0;
};

// Hop-grid difference of consecutive pooled frames. values[k] is the sum
// over tau of frame k+1 minus the sum over tau of frame k; the sign is
// kept (onsets show as negative excursions, offsets as positive ones).
struct DetectionFunction {
    std::vector<double> values;
    double hop_seconds = 0.0;
    double origin_seconds = 0.0;  // time of values[0]

    double time_at(std::size_t i) const {
        return origin_seconds + static_cast<double>(i) * hop_seconds;
    }
};

// Gaussian Parzen kernel, 1/(sqrt(2 pi) sigma) exp(-(p-q)^2 / (2 sigma^2)).
double gaussian_parzen(double p, double q, double sigma);

// Start samples of every complete frame in a signal of n_samples.
std::vector<int64_t> frame_starts(int64_t n_samples, const CorrentropyParams& params);

// Correntropy of one channel over one frame: entry tau-1 holds the sample
// mean of the Gaussian kernel between the N-sample window at t and its
// tau-lagged copy, for tau = 1..max_lag.
std::vector<double> correntropy_channel_frame(std::span<const double> x, int64_t t,
                                              const CorrentropyParams& params, double sigma);

// Element-wise sum across channels.
std::vector<double> pool_channels(const std::vector<std::vector<double>>& per_channel);

// Full correntropy series over all frames with channels pooled.
// sigma_per_frame supplies one kernel bandwidth per frame. Frames are
// distributed over worker threads (n_threads = 0 picks the hardware
// count); the result is bit-identical for any thread count.
CorrentropySeries correntropy_series(const Cochleagram& coch, const CorrentropyParams& params,
                                     std::span<const double> sigma_per_frame, int n_threads = 0);

DetectionFunction detection_function(const CorrentropySeries& series);

// Sign-change event estimator: an onset opens at the first value below
// -threshold, the matching offset closes at the first later value above
// +threshold; a trailing unclosed onset is closed at the final index.
EventList naive_events(const DetectionFunction& df, double threshold = 0.0);

}  // namespace onsetpair
