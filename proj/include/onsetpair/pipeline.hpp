#pragma once

#include <filesystem>

#include "onsetpair/audio.hpp"
#include "onsetpair/detection.hpp"
#include "onsetpair/events.hpp"
#include "onsetpair/filterbank.hpp"
#include "onsetpair/peakpick.hpp"
#include "onsetpair/sigma.hpp"

namespace onsetpair {

// Every tunable of the detection pipeline with its default value:
// 11,025 Hz pipeline rate, 64 gammatone channels on 80-4000 Hz, correntropy
// window and maximum lag of sample_rate/80 samples, 5 ms hop, 7 s Silverman
// observation window with b = 0.9, kernel sharpness 0.15, closeness
// exponent 1, window range 4..500 hops, 50/100 ms match tolerances.
struct PipelineConfig {
    int sample_rate = 11025;
    int n_channels = 64;
    double f_lo = 80.0;
    double f_hi = 4000.0;
    double hop_ms = 5.0;
    double sigma_window_s = 7.0;
    double sigma_b = 0.9;
    double sigma_floor = 1e-6;
    double alpha = 0.15;
    double k = 1.0;
    int omega_min = 4;
    int omega_max = 500;
    double onset_tol_ms = 50.0;
    double offset_tol_ms = 100.0;
    int n_threads = 0;  // 0 = hardware concurrency

    FilterbankSpec filterbank() const;
    CorrentropyParams correntropy() const;  // window = lag = sample_rate/80, hop from hop_ms
    SilvermanParams silverman() const;
    PickParams pick() const;
};

void validate(const PipelineConfig& config);

struct DetectionResult {
    EventList events;
    DetectionFunction df;
    CorrentropySeries series;
};

// Full pipeline: resample to the pipeline rate if needed, compute the
// localized sigma track, filter, pool correntropy, difference, pick.
DetectionResult run_detection(const AudioBuffer& input, const PipelineConfig& config);

// CSV exports for offline plotting / diagnostics.
void write_detection_function_csv(const DetectionFunction& df, const std::filesystem::path& path);
void write_sigma_track_csv(const CorrentropySeries& series, const std::filesystem::path& path);
void write_correntropy_csv(const CorrentropySeries& series, const std::filesystem::path& path);

}  // namespace onsetpair
