#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "onsetpair/audio.hpp"
#include "onsetpair/events.hpp"

namespace onsetpair {

// One synthetic note. Vibrato modulates f0 geometrically in cents; attack
// and release are linear amplitude ramps inside the note duration.
struct NoteSpec {
    double onset = 0.0;        // seconds
    double duration = 1.0;     // seconds, must exceed attack + release
    double f0 = 220.0;         // Hz
    int n_harmonics = 6;
    double attack = 0.05;      // seconds
    double release = 0.05;     // seconds
    double vibrato_rate = 0.0; // Hz
    double vibrato_depth = 0.0;// cents
};

struct SynthScene {
    std::vector<NoteSpec> notes;      // sorted by onset, pairwise disjoint
    std::optional<double> snr_db;     // pink-noise level; absent = noiseless
    int sample_rate = 11025;
    std::optional<double> duration_s; // total length; default last offset + 15 ms
    uint32_t seed = 0;                // noise seed
};

void validate(const SynthScene& scene);

struct SynthResult {
    AudioBuffer audio;
    EventList truth;  // exact note boundaries: onset = ramp start, offset = release end
};

// Additive harmonic synthesis of the scene plus pink noise mixed so that
// the note-region signal power over the noise power matches snr_db.
// Deterministic for a fixed scene and seed.
SynthResult synthesize(const SynthScene& scene);

// Plain-text scene description, key = value lines with [note] sections.
SynthScene parse_scene_file(const std::filesystem::path& path);
SynthScene parse_scene_text(const std::string& text);

}  // namespace onsetpair
