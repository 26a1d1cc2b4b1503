#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

#include "gaitpart/dataio.hpp"
#include "gaitpart/templates.hpp"

namespace gaitpart {

struct MotionColumnMeta {
    std::string subject_id;
    Condition condition = Condition::Normal;
};

// Columns are the motion based vectors of P GEIs, rows are template rows.
struct MotionMatrix {
    Eigen::MatrixXd values;  // N x P
    std::vector<MotionColumnMeta> columns;
};

// Row-wise Shannon entropy (bits) of a GEI over the 256 gray levels, values
// rounded to the nearest integer level before histogramming.
Eigen::VectorXd motion_vector(const GaitTemplate& gei);

MotionMatrix assemble_motion_matrix(const std::vector<GaitTemplate>& geis,
                                    const std::vector<MotionColumnMeta>& meta = {});

void write_motion_csv(const MotionMatrix& m, const std::filesystem::path& values_file,
                      const std::filesystem::path& meta_file);
MotionMatrix read_motion_csv(const std::filesystem::path& values_file,
                             const std::filesystem::path& meta_file);

}  // namespace gaitpart
