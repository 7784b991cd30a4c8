#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "onsetpair/events.hpp"

namespace onsetpair {

struct MatchCounts {
    long tp = 0;
    long fp = 0;
    long fn = 0;
};

struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
};

// Greedy chronological one-to-one matching: walking both sorted lists, a
// detection within +/-tolerance of the earliest unmatched ground-truth
// event consumes it. Leftover detections are false positives, leftover
// ground-truth events false negatives.
MatchCounts match_events(std::span<const double> detections, std::span<const double> ground_truth,
                         double tolerance);

// P = TP/(TP+FP), R = TP/(TP+FN), F = 2PR/(P+R); zero denominators give 0.
Metrics prf(const MatchCounts& counts);

struct EvalSide {
    MatchCounts counts;
    Metrics metrics;
};

// Onsets and offsets are scored independently, each list matched on its
// own tolerance. Offset metrics are absent when the ground truth carries
// no offset annotations.
struct EvalReport {
    EvalSide onsets;
    std::optional<EvalSide> offsets;
};

EvalReport evaluate(const EventList& detected, const std::vector<Annotation>& truth,
                    double onset_tol = 0.05, double offset_tol = 0.10);

// Micro-average: counts summed across reports, metrics recomputed.
EvalReport aggregate(std::span<const EvalReport> reports);

}  // namespace onsetpair
