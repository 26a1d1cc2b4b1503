#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "gaitpart/motion.hpp"

namespace gaitpart {

// ||E - V||_F^2 + lambda * sum_i ||v_{i+1,.} - v_{i,.}||_2
double gfl_objective(const Eigen::MatrixXd& E, const Eigen::MatrixXd& V, double lambda);

// N x (N-1) step design: x_{i,j} = 1 for i > j (1-based), else 0.
Eigen::MatrixXd change_point_design(int n_rows);

struct Reformulation {
    Eigen::MatrixXd centered_design;  // N x (N-1), column-centered
    Eigen::MatrixXd centered_target;  // N x P, column-centered
};
Reformulation reformulate(const Eigen::MatrixXd& E);

struct PathStep {
    std::vector<int> boundaries;  // sorted, 1-based; boundary b splits rows b and b+1
    double lambda = 0.0;          // penalty level at which the newest boundary entered
};

struct ChangePointPath {
    std::vector<PathStep> steps;  // nested sets of sizes 1..k
    bool degenerate = false;      // all group correlations were ~0 (constant input)
};

// Group LARS on the centered design with columns normalized to unit Euclidean
// norm. Adds one boundary per step, largest group correlation first, and
// follows the piecewise-affine path between entries.
ChangePointPath detect_change_points(const Eigen::MatrixXd& E, int k_max);

struct BodyPart {
    int first_row = 1;  // 1-based, inclusive
    int last_row = 1;
    double score = 0.0;  // mean motion value over the part's rows
    bool selected = false;
};

struct BodyPartition {
    std::vector<BodyPart> parts;  // ordered, covering 1..N exactly
    int n_rows = 0;
};

struct BaggingConfig {
    int runs = 5;       // L
    int bag_size = 45;  // P, drawn without replacement
    int k_max = 6;
    std::uint64_t seed = 0;
};

// Runs detect_change_points on `runs` random GEI subsets; boundaries present
// within +-1 row in a majority of runs survive. Scores use all GEIs.
BodyPartition segment_with_bagging(const std::vector<GaitTemplate>& geis, const BaggingConfig& cfg);
BodyPartition segment_motion_matrix(const MotionMatrix& motion, const BaggingConfig& cfg);

struct SelectionRule {
    int top_k = 2;  // select every part scoring >= the top_k-th ranked score
};
BodyPartition select_parts(BodyPartition partition, const SelectionRule& rule = {});

// 1-based template rows of the selected parts, ascending.
std::vector<int> selected_rows(const BodyPartition& partition);

// Text format: one `start,end,score,selected` line per part.
void write_partition(const BodyPartition& partition, const std::filesystem::path& file);
BodyPartition read_partition(const std::filesystem::path& file);

// CSV rows `k,lambda,b_1,...,b_k` for plotting the regularization path.
void write_path_csv(const ChangePointPath& path, const std::filesystem::path& file);

}  // namespace gaitpart
