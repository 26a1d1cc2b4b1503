#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "gaitpart/image.hpp"

namespace gaitpart {

enum class Condition { Normal, CarryingBag, Clothing };
enum class Role { Train, Validation, TestNormal, TestCarrying, TestClothing };

// CASIA-B camera angles, degrees.
inline constexpr std::array<int, 11> kViewAngles{0, 18, 36, 54, 72, 90, 108, 126, 144, 162, 180};
bool is_valid_view_angle(int angle_deg);

std::string to_string(Condition c);
std::string to_string(Role r);
Condition condition_from_string(const std::string& s);
Role role_from_string(const std::string& s);

// One walking pass: ordered frames of equal dimensions plus metadata.
struct SilhouetteSequence {
    std::vector<SilhouetteFrame> frames;
    std::string subject_id;
    Condition condition = Condition::Normal;
    int view_angle_deg = 90;
};

struct ManifestEntry {
    std::string sequence_path;  // relative paths resolve against the manifest directory
    std::string subject_id;
    Condition condition = Condition::Normal;
    int view_angle_deg = 90;
    Role role = Role::Train;
};

struct DatasetManifest {
    std::vector<ManifestEntry> entries;
    std::filesystem::path base_dir;

    std::filesystem::path resolve(const ManifestEntry& e) const;
};

// Loads all .pgm frames in the directory, lexicographic filename order.
SilhouetteSequence load_sequence(const std::filesystem::path& dir);
// Writes frames as zero-padded numbered PGM files.
void save_sequence(const SilhouetteSequence& seq, const std::filesystem::path& dir);

// Manifest lines are `path,subject,condition,angle,role`; `#` starts a comment.
DatasetManifest load_manifest(const std::filesystem::path& file);
void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& file);
// Every subject appearing in a test role must also appear in the train role.
void validate_manifest(const DatasetManifest& manifest);

// Crops to the foreground bounding box, scales (aspect preserved) so the box
// height equals out_h, centers horizontally on the foreground centroid and
// pads/crops to out_w. Throws on an empty foreground.
SilhouetteFrame normalize_frame(const SilhouetteFrame& frame, int out_h, int out_w);

struct CycleDetection {
    std::vector<std::pair<int, int>> cycles;  // [start, end] frame indices, inclusive
    int period = 0;
    bool fallback = false;  // whole sequence used because no periodicity was found
};

// Period = argmax of the autocorrelation of the per-frame foreground-count
// signal over lags [min_period, length/2].
CycleDetection detect_gait_cycle(const SilhouetteSequence& seq, int min_period = 10);

}  // namespace gaitpart
