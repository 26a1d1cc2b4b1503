#include "gaitpart/motion.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gaitpart {

Eigen::VectorXd motion_vector(const GaitTemplate& gei) {
    if (gei.kind != TemplateKind::GEI)
        throw std::invalid_argument("motion_vector expects a GEI template");
    const int n = gei.height();
    const int m = gei.width();
    Eigen::VectorXd e(n);
    std::array<int, 256> hist{};
    for (int r = 0; r < n; ++r) {
        hist.fill(0);
        for (int c = 0; c < m; ++c) {
            const long level = std::lround(gei.values(r, c));
            if (level < 0 || level > 255)
                throw std::invalid_argument("GEI value outside [0, 255]");
            ++hist[static_cast<std::size_t>(level)];
        }
        double entropy = 0.0;
        for (int k = 0; k < 256; ++k) {
            if (hist[k] == 0) continue;
            const double p = static_cast<double>(hist[k]) / m;
            entropy -= p * std::log2(p);
        }
        e(r) = entropy;
    }
    return e;
}

MotionMatrix assemble_motion_matrix(const std::vector<GaitTemplate>& geis,
                                    const std::vector<MotionColumnMeta>& meta) {
    if (geis.empty()) throw std::invalid_argument("assemble_motion_matrix: no templates");
    if (!meta.empty() && meta.size() != geis.size())
        throw std::invalid_argument("assemble_motion_matrix: metadata size mismatch");
    const int n = geis.front().height();
    MotionMatrix m;
    m.values.resize(n, static_cast<Eigen::Index>(geis.size()));
    for (std::size_t k = 0; k < geis.size(); ++k) {
        if (geis[k].height() != n)
            throw std::invalid_argument("assemble_motion_matrix: template height mismatch");
        m.values.col(static_cast<Eigen::Index>(k)) = motion_vector(geis[k]);
    }
    m.columns = meta.empty() ? std::vector<MotionColumnMeta>(geis.size()) : meta;
    return m;
}

void write_motion_csv(const MotionMatrix& m, const std::filesystem::path& values_file,
                      const std::filesystem::path& meta_file) {
    std::ofstream out(values_file);
    if (!out) throw std::runtime_error("cannot write motion CSV: " + values_file.string());
    out.precision(std::numeric_limits<double>::max_digits10);
    for (Eigen::Index r = 0; r < m.values.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.values.cols(); ++c) {
            if (c) out << ',';
            out << m.values(r, c);
        }
        out << '\n';
    }
    std::ofstream meta(meta_file);
    if (!meta) throw std::runtime_error("cannot write motion metadata: " + meta_file.string());
    meta << "column,subject,condition\n";
    for (std::size_t k = 0; k < m.columns.size(); ++k)
        meta << k << ',' << m.columns[k].subject_id << ',' << to_string(m.columns[k].condition)
             << '\n';
}

MotionMatrix read_motion_csv(const std::filesystem::path& values_file,
                             const std::filesystem::path& meta_file) {
    std::ifstream in(values_file);
    if (!in) throw std::runtime_error("cannot open motion CSV: " + values_file.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) row.push_back(std::stod(field));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("ragged motion CSV: " + values_file.string());
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty motion CSV: " + values_file.string());

    MotionMatrix m;
    m.values.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];

    std::ifstream meta(meta_file);
    if (!meta) throw std::runtime_error("cannot open motion metadata: " + meta_file.string());
    std::getline(meta, line);  // header
    while (std::getline(meta, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string idx, subject, cond;
        std::getline(ss, idx, ',');
        std::getline(ss, subject, ',');
        std::getline(ss, cond, ',');
        m.columns.push_back({subject, condition_from_string(cond)});
    }
    if (m.columns.size() != static_cast<std::size_t>(m.values.cols()))
        throw std::runtime_error("motion metadata does not match column count");
    return m;
}

}  // namespace gaitpart
