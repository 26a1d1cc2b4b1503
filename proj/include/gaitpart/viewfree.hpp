#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <map>
#include <vector>

#include "gaitpart/recognition.hpp"

namespace gaitpart {

// Per-angle gallery of raw selected-part features from training data. Entries
// are kept sorted by angle so nearest-neighbor ties resolve to the smaller one.
struct PoseEstimator {
    std::vector<FeatureVector> gallery;
};

PoseEstimator build_pose_estimator(const std::map<int, std::vector<FeatureVector>>& train_by_angle);

// Angle of the Euclidean-nearest training sample across all angles.
int estimate_view(const PoseEstimator& estimator, const FeatureVector& query);

// estimate_view, then nearest-neighbor classification with the matched-view model.
Prediction recognize_view_free(const PoseEstimator& estimator,
                               const std::map<int, CdaModel>& per_view_models,
                               const FeatureVector& query);

// 11 x 11 row-normalized percentages, real angle x predicted angle.
Eigen::MatrixXd pose_confusion_matrix(const PoseEstimator& estimator,
                                      const std::map<int, std::vector<FeatureVector>>& test_by_angle);

// CSV with a leading header row/column of angles.
void write_confusion_csv(const Eigen::MatrixXd& matrix, const std::filesystem::path& file);

}  // namespace gaitpart
