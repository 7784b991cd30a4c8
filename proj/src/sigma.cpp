#include "onsetpair/sigma.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace onsetpair {

void validate(const SilvermanParams& params) {
    if (!(params.b > 0.0) || !(params.obs_window_s > 0.0) || !(params.sigma_floor > 0.0)) {
        throw std::invalid_argument("SilvermanParams: b, obs_window_s and sigma_floor must be positive");
    }
}

double silverman_sigma(std::span<const double> window, const SilvermanParams& params) {
    validate(params);
    const std::size_t n = window.size();
    if (n < 2) {
        throw std::invalid_argument("silverman_sigma: window must hold at least 2 samples");
    }
    double mean = 0.0;
    for (double v : window) mean += v;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double v : window) {
        const double d = v - mean;
        ss += d * d;
    }
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    const double sigma = params.b * sd * std::pow(static_cast<double>(n), -0.2);
    return std::max(sigma, params.sigma_floor);
}

std::vector<double> sigma_track(const AudioBuffer& buf, const SilvermanParams& sparams,
                                const CorrentropyParams& cparams) {
    validate(sparams);
    if (buf.samples.empty()) {
        throw std::invalid_argument("sigma_track: empty buffer");
    }
    if (buf.samples.size() < 2) {
        throw std::invalid_argument("sigma_track: need at least 2 samples");
    }
    const int64_t len = static_cast<int64_t>(buf.samples.size());
    const int64_t win = std::max<int64_t>(
        2, static_cast<int64_t>(std::llround(sparams.obs_window_s * buf.sample_rate)));
    const int64_t half = win / 2;

    const auto starts = frame_starts(len, cparams);
    std::vector<double> track;
    track.reserve(starts.size());
    for (int64_t t : starts) {
        // Observation window centered at the frame start, clipped at the
        // signal bounds (not shifted).
        int64_t lo = std::max<int64_t>(0, t - half);
        int64_t hi = std::min<int64_t>(len, t - half + win);
        if (hi - lo < 2) {  // degenerate clip near the edges of very short signals
            lo = std::max<int64_t>(0, hi - 2);
            hi = std::min<int64_t>(len, lo + 2);
        }
        track.push_back(silverman_sigma(
            std::span<const double>(buf.samples.data() + lo, static_cast<std::size_t>(hi - lo)),
            sparams));
    }
    return track;
}

}  // namespace onsetpair
