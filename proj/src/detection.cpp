#include "onsetpair/detection.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "parallel.hpp"

namespace onsetpair {

CorrentropyParams CorrentropyParams::defaults(int sample_rate, double hop_ms) {
    if (sample_rate <= 0) {
        throw std::invalid_argument("CorrentropyParams: sample rate must be positive");
    }
    CorrentropyParams p;
    p.window_size = sample_rate / 80;
    p.max_lag = sample_rate / 80;
    p.hop = static_cast<int>(std::lround(hop_ms / 1000.0 * sample_rate));
    validate(p);
    return p;
}

void validate(const CorrentropyParams& params) {
    if (params.window_size < 1 || params.max_lag < 1 || params.hop < 1) {
        throw std::invalid_argument("CorrentropyParams: window, lag and hop must be at least 1");
    }
}

double gaussian_parzen(double p, double q, double sigma) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("gaussian_parzen: sigma must be positive");
    }
    const double c = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma);
    const double d = p - q;
    return c * std::exp(-(d * d) / (2.0 * sigma * sigma));
}

std::vector<int64_t> frame_starts(int64_t n_samples, const CorrentropyParams& params) {
    validate(params);
    std::vector<int64_t> starts;
    const int64_t need = static_cast<int64_t>(params.window_size) + params.max_lag;
    for (int64_t t = 0; t + need <= n_samples; t += params.hop) {
        starts.push_back(t);
    }
    return starts;
}

namespace {

// Adds one channel's frame correntropy into the pooled accumulator. The
// term order (lags ascending, window samples ascending) and the arithmetic
// match gaussian_parzen exactly: a literal transcription of the estimator
// summed over channels reproduces the output bit for bit.
void accumulate_channel_frame(const double* x, int64_t t, const CorrentropyParams& params,
                              double sigma, double* pooled) {
    const double c = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma);
    const double two_s2 = 2.0 * sigma * sigma;
    const int n = params.window_size;
    const double* base = x + t;
    for (int tau = 1; tau <= params.max_lag; ++tau) {
        const double* lagged = base + tau;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = base[i] - lagged[i];
            acc += c * std::exp(-(d * d) / two_s2);
        }
        pooled[tau - 1] += acc / n;
    }
}

}  // namespace

std::vector<double> correntropy_channel_frame(std::span<const double> x, int64_t t,
                                              const CorrentropyParams& params, double sigma) {
    validate(params);
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("correntropy_channel_frame: sigma must be positive");
    }
    const int64_t need = static_cast<int64_t>(params.window_size) + params.max_lag;
    if (t < 0 || t + need > static_cast<int64_t>(x.size())) {
        throw std::out_of_range("correntropy_channel_frame: frame exceeds the signal");
    }
    std::vector<double> out(static_cast<std::size_t>(params.max_lag), 0.0);
    accumulate_channel_frame(x.data(), t, params, sigma, out.data());
    return out;
}

std::vector<double> pool_channels(const std::vector<std::vector<double>>& per_channel) {
    if (per_channel.empty()) {
        throw std::invalid_argument("pool_channels: no channels");
    }
    const std::size_t len = per_channel.front().size();
    std::vector<double> pooled(len, 0.0);
    for (const auto& channel : per_channel) {
        if (channel.size() != len) {
            throw std::invalid_argument("pool_channels: channel length mismatch");
        }
        for (std::size_t i = 0; i < len; ++i) pooled[i] += channel[i];
    }
    return pooled;
}

CorrentropySeries correntropy_series(const Cochleagram& coch, const CorrentropyParams& params,
                                     std::span<const double> sigma_per_frame, int n_threads) {
    validate(params);
    if (coch.n_channels() == 0 || coch.n_samples() == 0) {
        throw std::invalid_argument("correntropy_series: empty cochleagram");
    }
    const auto starts = frame_starts(static_cast<int64_t>(coch.n_samples()), params);
    if (sigma_per_frame.size() != starts.size()) {
        throw std::invalid_argument("correntropy_series: one sigma per frame required");
    }
    for (double s : sigma_per_frame) {
        if (!(s > 0.0)) {
            throw std::invalid_argument("correntropy_series: sigma must be positive");
        }
    }

    CorrentropySeries series;
    series.hop = params.hop;
    series.sample_rate = coch.sample_rate;
    series.sigma_track.assign(sigma_per_frame.begin(), sigma_per_frame.end());
    series.frame_times.resize(starts.size());
    series.frames.assign(starts.size(),
                         std::vector<double>(static_cast<std::size_t>(params.max_lag), 0.0));
    for (std::size_t f = 0; f < starts.size(); ++f) {
        series.frame_times[f] = static_cast<double>(starts[f]) / coch.sample_rate;
    }

    const std::size_t n_channels = coch.n_channels();
    detail::parallel_for(static_cast<int64_t>(starts.size()), n_threads, [&](int64_t f) {
        double* pooled = series.frames[static_cast<std::size_t>(f)].data();
        const double sigma = sigma_per_frame[static_cast<std::size_t>(f)];
        for (std::size_t c = 0; c < n_channels; ++c) {
            accumulate_channel_frame(coch.channels[c].data(), starts[static_cast<std::size_t>(f)],
                                     params, sigma, pooled);
        }
    });
    return series;
}

DetectionFunction detection_function(const CorrentropySeries& series) {
    if (series.frames.size() < 2) {
        throw std::invalid_argument("detection_function: need at least 2 frames");
    }
    const std::size_t n = series.frames.size();
    std::vector<double> sums(n, 0.0);
    for (std::size_t f = 0; f < n; ++f) {
        double s = 0.0;
        for (double v : series.frames[f]) s += v;
        sums[f] = s;
    }
    DetectionFunction df;
    df.hop_seconds = static_cast<double>(series.hop) / series.sample_rate;
    df.origin_seconds = series.frame_times.front() + df.hop_seconds;
    df.values.resize(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        df.values[k] = sums[k + 1] - sums[k];
    }
    return df;
}

EventList naive_events(const DetectionFunction& df, double threshold) {
    EventList list;
    const auto& v = df.values;
    std::size_t i = 0;
    while (i < v.size()) {
        // onset: first drop below -threshold
        while (i < v.size() && !(v[i] < -threshold)) ++i;
        if (i >= v.size()) break;
        const std::size_t onset = i;
        ++i;
        while (i < v.size() && !(v[i] > threshold)) ++i;
        const std::size_t offset = i < v.size() ? i : v.size() - 1;
        list.events.push_back({df.time_at(onset), df.time_at(offset)});
        ++i;
    }
    return list;
}

}  // namespace onsetpair
