#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "gaitpart/dataio.hpp"

namespace gaitpart {

// Articulated synthetic walker: a full-width static torso band over two
// oscillating leg wedges, so static rows have zero row entropy and the leg
// band carries all the motion by construction. Subjects differ in torso
// extent, stride amplitude, base stance and phase; views are horizontal
// shears of the leg rows; "clothing" extends the torso upward to a common
// row, "carrying" attaches a static blob above the torso line.
struct SyntheticConfig {
    int n_subjects = 10;
    int n_validation_subjects = 4;   // extra subjects reserved for part selection
    int n_cycles_per_subject = 4;    // sequences per subject and condition
    int train_cycles = 3;            // leading normal-condition sequences used for training
    int frames_per_cycle = 20;       // T
    int height = 64;                 // N
    int width = 64;                  // M
    double noise_flip_prob = 0.0;
    std::vector<int> view_angles = {90};
    std::vector<Condition> conditions = {Condition::Normal, Condition::CarryingBag,
                                         Condition::Clothing};
    std::uint64_t seed = 0;
};

struct SyntheticGroundTruth {
    int leg_first_row = 0;    // 1-based first oscillating row (top of the thigh zone)
    int shank_first_row = 0;  // 1-based first high-amplitude row
    int last_row = 0;         // = height
};

SyntheticGroundTruth synthetic_ground_truth(const SyntheticConfig& cfg);

// Writes PGM sequences plus a manifest.txt under out_dir; returns the manifest.
DatasetManifest generate(const SyntheticConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace gaitpart
