#include "gaitpart/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gaitpart/detail/rng.hpp"

namespace gaitpart {

double gfl_objective(const Eigen::MatrixXd& E, const Eigen::MatrixXd& V, double lambda) {
    if (E.rows() != V.rows() || E.cols() != V.cols())
        throw std::invalid_argument("gfl_objective: shape mismatch");
    if (lambda < 0.0) throw std::invalid_argument("gfl_objective: negative lambda");
    double obj = (E - V).squaredNorm();
    for (Eigen::Index i = 0; i + 1 < V.rows(); ++i)
        obj += lambda * (V.row(i + 1) - V.row(i)).norm();
    return obj;
}

Eigen::MatrixXd change_point_design(int n_rows) {
    if (n_rows < 2) throw std::invalid_argument("change_point_design: need at least 2 rows");
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n_rows, n_rows - 1);
    for (int j = 0; j < n_rows - 1; ++j)
        for (int i = j + 1; i < n_rows; ++i) x(i, j) = 1.0;
    return x;
}

Reformulation reformulate(const Eigen::MatrixXd& E) {
    if (E.rows() < 2) throw std::invalid_argument("reformulate: need at least 2 rows");
    Reformulation r;
    r.centered_design = change_point_design(static_cast<int>(E.rows()));
    r.centered_design.rowwise() -= r.centered_design.colwise().mean();
    r.centered_target = E;
    r.centered_target.rowwise() -= r.centered_target.colwise().mean();
    return r;
}

ChangePointPath detect_change_points(const Eigen::MatrixXd& E, int k_max) {
    const int n = static_cast<int>(E.rows());
    if (n < 2) throw std::invalid_argument("detect_change_points: need at least 2 rows");
    if (k_max < 1 || k_max > n - 1)
        throw std::invalid_argument("detect_change_points: k_max out of [1, N-1]");

    Reformulation ref = reformulate(E);
    // normalize design columns to unit norm so the entry criterion matches the
    // between-segment sum of squares (the standard weighting of the
    // change-point reformulation)
    Eigen::MatrixXd x = ref.centered_design;
    for (Eigen::Index j = 0; j < x.cols(); ++j) x.col(j) /= x.col(j).norm();

    const Eigen::MatrixXd gram = x.transpose() * x;
    Eigen::MatrixXd corr = x.transpose() * ref.centered_target;  // (N-1) x P

    const double scale = std::max(ref.centered_target.norm(), 1.0);
    const int d = n - 1;

    ChangePointPath path;
    std::vector<int> active;  // 0-based column order of entry
    std::vector<char> is_active(static_cast<std::size_t>(d), 0);

    auto record_step = [&](double lambda) {
        PathStep step;
        step.boundaries.reserve(active.size());
        for (int u : active) step.boundaries.push_back(u + 1);  // 1-based boundary index
        std::sort(step.boundaries.begin(), step.boundaries.end());
        step.lambda = lambda;
        path.steps.push_back(std::move(step));
    };

    for (int step = 0; step < k_max; ++step) {
        if (active.empty()) {
            int best = -1;
            double best_norm = 1e-12 * scale;  // below this everything is noise
            for (int u = 0; u < d; ++u) {
                const double nu = corr.row(u).norm();
                if (nu > best_norm) {
                    best_norm = nu;
                    best = u;
                }
            }
            if (best < 0) {
                path.degenerate = true;
                return path;
            }
            active.push_back(best);
            is_active[static_cast<std::size_t>(best)] = 1;
            record_step(2.0 * best_norm);
            continue;
        }

        // joint least-squares direction on the active groups
        const auto n_active = static_cast<Eigen::Index>(active.size());
        Eigen::MatrixXd gram_a(n_active, n_active);
        Eigen::MatrixXd corr_a(n_active, corr.cols());
        for (Eigen::Index i = 0; i < n_active; ++i) {
            corr_a.row(i) = corr.row(active[static_cast<std::size_t>(i)]);
            for (Eigen::Index j = 0; j < n_active; ++j)
                gram_a(i, j) = gram(active[static_cast<std::size_t>(i)],
                                    active[static_cast<std::size_t>(j)]);
        }
        const Eigen::MatrixXd dir = gram_a.ldlt().solve(corr_a);
        Eigen::MatrixXd rate(d, corr.cols());  // d/dalpha of every group correlation
        for (int u = 0; u < d; ++u) {
            rate.row(u).setZero();
            for (Eigen::Index i = 0; i < n_active; ++i)
                rate.row(u) += gram(u, active[static_cast<std::size_t>(i)]) * dir.row(i);
        }

        double active_sq = 0.0;
        for (int v : active) active_sq = std::max(active_sq, corr.row(v).squaredNorm());

        // smallest alpha in [0, 1] where an inactive group catches the active
        // correlation (1 - alpha) * C; ties at alpha ~ 0 are genuine entries
        double best_alpha = 1.0;
        int best_u = -1;
        const double eps = 1e-10;
        const double coeff_tol = 1e-14 * std::max(active_sq, 1.0);
        for (int u = 0; u < d; ++u) {
            if (is_active[static_cast<std::size_t>(u)]) continue;
            const double a2 = rate.row(u).squaredNorm() - active_sq;
            const double a1 = -2.0 * (corr.row(u).dot(rate.row(u)) - active_sq);
            const double a0 = corr.row(u).squaredNorm() - active_sq;
            double candidate = std::numeric_limits<double>::infinity();
            auto consider = [&](double root) {
                if (root >= -eps && root <= 1.0 + eps)
                    candidate = std::min(candidate, std::clamp(root, 0.0, 1.0));
            };
            if (std::abs(a2) < coeff_tol) {
                if (std::abs(a1) > coeff_tol) consider(-a0 / a1);
            } else {
                const double disc = a1 * a1 - 4.0 * a2 * a0;
                if (disc >= 0.0) {
                    const double sq = std::sqrt(disc);
                    consider((-a1 - sq) / (2.0 * a2));
                    consider((-a1 + sq) / (2.0 * a2));
                }
            }
            if (candidate < best_alpha - 1e-14) {
                best_alpha = candidate;
                best_u = u;
            }
        }
        if (best_u < 0) break;  // no further crossings: path ends at the active-set fit

        corr -= best_alpha * rate;
        active.push_back(best_u);
        is_active[static_cast<std::size_t>(best_u)] = 1;
        record_step(2.0 * corr.row(best_u).norm());
    }
    return path;
}

namespace {

BodyPartition partition_from_boundaries(const std::vector<int>& boundaries,
                                        const Eigen::MatrixXd& motion_values) {
    const int n = static_cast<int>(motion_values.rows());
    BodyPartition partition;
    partition.n_rows = n;
    int prev = 0;  // last row of the previous part, 1-based
    std::vector<int> sorted = boundaries;
    std::sort(sorted.begin(), sorted.end());
    sorted.push_back(n);
    for (int b : sorted) {
        if (b <= prev) continue;
        BodyPart part;
        part.first_row = prev + 1;
        part.last_row = b;
        part.score = motion_values.middleRows(part.first_row - 1, b - prev).mean();
        partition.parts.push_back(part);
        prev = b;
    }
    return partition;
}

}  // namespace

BodyPartition segment_motion_matrix(const MotionMatrix& motion, const BaggingConfig& cfg) {
    const int p = static_cast<int>(motion.values.cols());
    const int n = static_cast<int>(motion.values.rows());
    if (cfg.runs < 1) throw std::invalid_argument("segment: need at least one bagging run");
    if (cfg.bag_size < 1 || cfg.bag_size > p)
        throw std::invalid_argument("segment: bag_size must be in [1, #GEIs]");

    std::vector<std::vector<int>> run_boundaries;
    for (int run = 0; run < cfg.runs; ++run) {
        detail::SplitMix64 rng(detail::mix_keys(cfg.seed, 0x1000u + static_cast<std::uint64_t>(run)));
        const std::vector<int> subset = detail::sample_without_replacement(rng, p, cfg.bag_size);
        Eigen::MatrixXd bag(n, cfg.bag_size);
        for (int k = 0; k < cfg.bag_size; ++k) bag.col(k) = motion.values.col(subset[k]);
        const ChangePointPath path = detect_change_points(bag, std::min(cfg.k_max, n - 1));
        run_boundaries.push_back(path.steps.empty() ? std::vector<int>{}
                                                    : path.steps.back().boundaries);
    }

    // majority consensus: a row survives when most runs place a boundary
    // within one row of it; candidates ranked by support, then by exact hits
    const int majority = cfg.runs / 2 + 1;
    std::vector<int> support(static_cast<std::size_t>(n), 0);
    std::vector<int> exact(static_cast<std::size_t>(n), 0);
    for (const auto& bounds : run_boundaries) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        for (int b : bounds) {
            exact[static_cast<std::size_t>(b)] += 1;
            for (int v = std::max(1, b - 1); v <= std::min(n - 1, b + 1); ++v) {
                if (!seen[static_cast<std::size_t>(v)]) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    support[static_cast<std::size_t>(v)] += 1;
                }
            }
        }
    }
    std::vector<int> order;
    for (int v = 1; v <= n - 1; ++v)
        if (support[static_cast<std::size_t>(v)] >= majority) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (support[static_cast<std::size_t>(a)] != support[static_cast<std::size_t>(b)])
            return support[static_cast<std::size_t>(a)] > support[static_cast<std::size_t>(b)];
        if (exact[static_cast<std::size_t>(a)] != exact[static_cast<std::size_t>(b)])
            return exact[static_cast<std::size_t>(a)] > exact[static_cast<std::size_t>(b)];
        return a < b;
    });
    std::vector<int> consensus;
    for (int v : order) {
        bool clashes = false;
        for (int c : consensus)
            if (std::abs(c - v) <= 1) clashes = true;
        if (!clashes) consensus.push_back(v);
    }

    return partition_from_boundaries(consensus, motion.values);
}

BodyPartition segment_with_bagging(const std::vector<GaitTemplate>& geis, const BaggingConfig& cfg) {
    return segment_motion_matrix(assemble_motion_matrix(geis), cfg);
}

BodyPartition select_parts(BodyPartition partition, const SelectionRule& rule) {
    if (partition.parts.empty()) throw std::invalid_argument("select_parts: empty partition");
    for (const auto& part : partition.parts)
        if (!std::isfinite(part.score)) throw std::invalid_argument("select_parts: non-finite score");
    if (rule.top_k < 1) throw std::invalid_argument("select_parts: top_k must be >= 1");

    std::vector<double> scores;
    scores.reserve(partition.parts.size());
    for (const auto& part : partition.parts) scores.push_back(part.score);
    std::sort(scores.begin(), scores.end(), std::greater<>());
    const std::size_t cut_rank = std::min<std::size_t>(rule.top_k, scores.size()) - 1;
    const double cut = scores[cut_rank];
    for (auto& part : partition.parts) part.selected = part.score >= cut;
    return partition;
}

std::vector<int> selected_rows(const BodyPartition& partition) {
    std::vector<int> rows;
    for (const auto& part : partition.parts)
        if (part.selected)
            for (int r = part.first_row; r <= part.last_row; ++r) rows.push_back(r);
    std::sort(rows.begin(), rows.end());
    return rows;
}

void write_partition(const BodyPartition& partition, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write partition file: " + file.string());
    out.precision(std::numeric_limits<double>::max_digits10);
    out << "# start,end,score,selected\n";
    for (const auto& part : partition.parts)
        out << part.first_row << ',' << part.last_row << ',' << part.score << ','
            << (part.selected ? 1 : 0) << '\n';
}

BodyPartition read_partition(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open partition file: " + file.string());
    BodyPartition partition;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string a, b, s, sel;
        std::getline(ss, a, ',');
        std::getline(ss, b, ',');
        std::getline(ss, s, ',');
        std::getline(ss, sel, ',');
        BodyPart part;
        part.first_row = std::stoi(a);
        part.last_row = std::stoi(b);
        part.score = std::stod(s);
        part.selected = std::stoi(sel) != 0;
        partition.parts.push_back(part);
    }
    if (partition.parts.empty()) throw std::runtime_error("empty partition file: " + file.string());
    partition.n_rows = partition.parts.back().last_row;
    return partition;
}

void write_path_csv(const ChangePointPath& path, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write path CSV: " + file.string());
    out.precision(std::numeric_limits<double>::max_digits10);
    for (const auto& step : path.steps) {
        out << step.boundaries.size() << ',' << step.lambda;
        for (int b : step.boundaries) out << ',' << b;
        out << '\n';
    }
}

}  // namespace gaitpart
