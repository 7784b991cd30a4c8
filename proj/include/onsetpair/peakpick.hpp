#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "onsetpair/detection.hpp"
#include "onsetpair/events.hpp"

namespace onsetpair {

struct PickParams {
    double alpha = 0.15;        // kernel sharpness factor
    double k = 1.0;             // closeness weighting exponent
    int omega_min = 4;          // shortest window, hop-grid samples
    int omega_max = 500;        // longest window, hop-grid samples
    double z_clip = 1.0 - 1e-5; // kernel argument clip, avoids the pole
};

void validate(const PickParams& params);

// Inverse hyperbolic kernel z / (1 + alpha - |z|), odd and strictly
// increasing on the clipped range |z| <= 1 - 1e-5.
double lambda_kernel(double z, double alpha);

// Pre-computed kernel vectors, one per window length omega. Each vector
// samples the kernel on omega uniformly spaced points spanning
// [-z_clip, +z_clip] inclusive, then is normalized to unit maximum
// absolute value. Vectors are strictly increasing and antisymmetric.
// Window lengths below 2 cannot span the z range and are not stored.
struct KernelBank {
    int omega_lo = 0;
    int omega_hi = 0;
    std::vector<std::vector<double>> rows;  // rows[w - omega_lo] has length w

    bool contains(int omega) const { return omega >= omega_lo && omega <= omega_hi; }
    const std::vector<double>& vec(int omega) const { return rows[omega - omega_lo]; }
};

KernelBank build_kernel_bank(const PickParams& params);

// Negated lack-of-fit between a kernel vector and a windowed stretch of the
// detection function, both normalized to unit maximum absolute value:
//     -omega^(-k) * sum_i (kernel_i / max|kernel| - window_i / max|window|)^2.
// Returns -infinity when the window is identically zero (no event
// evidence). Higher is better; a perfect fit scores 0.
double goodness(std::span<const double> kernel, std::span<const double> window, double k);

// Alternating pairwise search over the detection function, marks in hop
// indices. From cursor t the candidate window for mark t' covers hop
// indices (t, t'] (right edge at the mark); the onset mark maximizes the
// fit to the falling template (negated kernel), the following offset mark
// the fit to the rising template. Ties break toward the smallest t'. A
// final onset with no room for an offset is closed at the last index.
std::vector<std::pair<int64_t, int64_t>> pairwise_pick_marks(std::span<const double> values,
                                                             const PickParams& params);

// Same search with marks converted to seconds via the detection function's
// hop grid.
EventList pairwise_pick(const DetectionFunction& df, const PickParams& params);

}  // namespace onsetpair
