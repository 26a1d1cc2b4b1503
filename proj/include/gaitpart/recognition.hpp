#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gaitpart/dataio.hpp"
#include "gaitpart/templates.hpp"

namespace gaitpart {

struct FeatureVector {
    Eigen::VectorXd values;
    std::string label;
    Condition condition = Condition::Normal;
    int view_angle_deg = 90;
};

// Row-major flattening of the listed 1-based template rows.
FeatureVector extract_features(const GaitTemplate& tpl, const std::vector<int>& rows,
                               const std::string& label, Condition condition, int view_angle_deg);

struct PcaResult {
    Eigen::VectorXd mean;
    Eigen::MatrixXd basis;               // d x k, orthonormal columns
    Eigen::VectorXd explained_variance;  // descending
};

// Covariance eigenvectors, largest variance first. Uses the n x n Gram matrix
// when n_samples < dim (the under-sample regime).
PcaResult fit_pca(const std::vector<FeatureVector>& train, int n_components);
PcaResult fit_pca(const Eigen::MatrixXd& rows_are_samples, int n_components);

struct LdaResult {
    Eigen::MatrixXd basis;       // q x r
    Eigen::VectorXd eigenvalues; // descending
    bool degenerate = false;     // top eigenvalue ~ 0 (identical class means)
};

// Generalized eigenproblem S_b w = lambda S_w w, within-class scatter
// regularized by 1e-6 * trace/dim. Keeps r = min(c-1, dim) directions.
LdaResult fit_lda(const std::vector<std::pair<Eigen::VectorXd, std::string>>& projected_train);

struct CdaModel {
    Eigen::VectorXd mean;       // d
    Eigen::MatrixXd pca_basis;  // d x q
    Eigen::MatrixXd lda_basis;  // q x r
    Eigen::MatrixXd gallery;    // r x n, projected training samples
    std::vector<std::string> gallery_labels;
    std::vector<int> feature_rows;  // 1-based template rows of the feature layout
    int template_height = 0;
    int template_width = 0;
    int n_classes = 0;
};

struct CdaConfig {
    int pca_components = 0;  // 0 = 2c (clipped to n-1 and to numerical rank)
    int lda_dims = 0;        // 0 = c-1
};

CdaModel fit_cda(const std::vector<FeatureVector>& train, const CdaConfig& cfg = {});

Eigen::VectorXd project(const CdaModel& model, const Eigen::VectorXd& feature);

struct Prediction {
    std::string label;
    double distance = 0.0;
};

// Euclidean nearest neighbor in CDA space; ties break to the lowest gallery index.
Prediction classify_nn(const CdaModel& model, const FeatureVector& query);

double evaluate_ccr(const CdaModel& model, const std::vector<FeatureVector>& test);

// Entry (i, j): CCR of a model trained at kViewAngles[i] tested at kViewAngles[j].
Eigen::MatrixXd cross_view_matrix(const std::map<int, std::vector<FeatureVector>>& train_by_angle,
                                  const std::map<int, std::vector<FeatureVector>>& test_by_angle,
                                  const CdaConfig& cfg = {});

// Versioned binary container, little-endian 64-bit floats.
void save_model(const CdaModel& model, const std::filesystem::path& file);
CdaModel load_model(const std::filesystem::path& file);
// Matrix dumps (mean/pca/lda/gallery) for inspection.
void export_model_csv(const CdaModel& model, const std::filesystem::path& dir);

}  // namespace gaitpart
