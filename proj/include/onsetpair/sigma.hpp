#pragma once

#include <span>
#include <vector>

#include "onsetpair/audio.hpp"
#include "onsetpair/detection.hpp"

namespace onsetpair {

struct SilvermanParams {
    double b = 0.9;            // constant scale factor
    double obs_window_s = 7.0; // observation window for the localized track
    double sigma_floor = 1e-6; // lower clamp, guards silence regions
};

void validate(const SilvermanParams& params);

// Silverman's rule of thumb: max(b * stddev * n^(-1/5), sigma_floor) with
// the sample standard deviation (divisor n - 1). Requires n >= 2.
double silverman_sigma(std::span<const double> window, const SilvermanParams& params);

// One bandwidth per correntropy frame, each computed over the observation
// window centered at the frame start and clipped to the signal bounds.
// Operates on the resampled mono signal, before the filterbank.
std::vector<double> sigma_track(const AudioBuffer& buf, const SilvermanParams& sparams,
                                const CorrentropyParams& cparams);

}  // namespace onsetpair
