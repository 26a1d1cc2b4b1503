#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <vector>

#include "gaitpart/image.hpp"

namespace gaitpart {

enum class TemplateKind { GEI, GEnI, GPPE };

std::string to_string(TemplateKind k);
TemplateKind template_kind_from_string(const std::string& s);

struct GaitTemplate {
    TemplateKind kind = TemplateKind::GEI;
    Eigen::MatrixXd values;  // height x width

    int height() const { return static_cast<int>(values.rows()); }
    int width() const { return static_cast<int>(values.cols()); }
};

// Gait Energy Image: per-pixel mean of the binary frames scaled to [0, 255].
GaitTemplate compute_gei(const std::vector<SilhouetteFrame>& frames);

// Gait Entropy Image: per-pixel Shannon entropy (bits) of the binary value
// stream across the cycle, with 0 log 0 = 0.
GaitTemplate compute_geni(const std::vector<SilhouetteFrame>& frames);

// Gait Pal and Pal Entropy image: per pixel, sum over observed values k of
// p_k * exp(1 - p_k).
GaitTemplate compute_gppe(const std::vector<SilhouetteFrame>& frames);

GaitTemplate compute_template(TemplateKind kind, const std::vector<SilhouetteFrame>& frames);

// CSV is the authoritative serialization: row-major, full precision, no header.
void write_template_csv(const GaitTemplate& tpl, const std::filesystem::path& file);
GaitTemplate read_template_csv(const std::filesystem::path& file, TemplateKind kind = TemplateKind::GEI);

// Rounded 8-bit dump for visual inspection only.
void write_template_pgm(const GaitTemplate& tpl, const std::filesystem::path& file);

}  // namespace gaitpart
