#include "gaitpart/templates.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gaitpart {

std::string to_string(TemplateKind k) {
    switch (k) {
        case TemplateKind::GEI: return "gei";
        case TemplateKind::GEnI: return "geni";
        case TemplateKind::GPPE: return "gppe";
    }
    throw std::logic_error("bad template kind");
}

TemplateKind template_kind_from_string(const std::string& s) {
    if (s == "gei") return TemplateKind::GEI;
    if (s == "geni") return TemplateKind::GEnI;
    if (s == "gppe") return TemplateKind::GPPE;
    throw std::invalid_argument("unknown template kind '" + s + "'");
}

namespace {

// per-pixel foreground frequencies over the cycle
Eigen::MatrixXd foreground_probability(const std::vector<SilhouetteFrame>& frames) {
    if (frames.empty()) throw std::invalid_argument("empty frame list");
    const int h = frames.front().height;
    const int w = frames.front().width;
    Eigen::MatrixXd p = Eigen::MatrixXd::Zero(h, w);
    for (const auto& f : frames) {
        if (f.height != h || f.width != w) throw std::invalid_argument("frame dimension mismatch");
        for (int r = 0; r < h; ++r)
            for (int c = 0; c < w; ++c) p(r, c) += f.at(r, c);
    }
    p /= static_cast<double>(frames.size());
    return p;
}

}  // namespace

GaitTemplate compute_gei(const std::vector<SilhouetteFrame>& frames) {
    GaitTemplate tpl;
    tpl.kind = TemplateKind::GEI;
    tpl.values = 255.0 * foreground_probability(frames);
    return tpl;
}

GaitTemplate compute_geni(const std::vector<SilhouetteFrame>& frames) {
    const Eigen::MatrixXd p = foreground_probability(frames);
    GaitTemplate tpl;
    tpl.kind = TemplateKind::GEnI;
    tpl.values = p.unaryExpr([](double q) {
        double e = 0.0;
        if (q > 0.0) e -= q * std::log2(q);
        if (q < 1.0) e -= (1.0 - q) * std::log2(1.0 - q);
        return e;
    });
    return tpl;
}

GaitTemplate compute_gppe(const std::vector<SilhouetteFrame>& frames) {
    const Eigen::MatrixXd p = foreground_probability(frames);
    GaitTemplate tpl;
    tpl.kind = TemplateKind::GPPE;
    tpl.values = p.unaryExpr([](double q) {
        double e = 0.0;
        if (q > 0.0) e += q * std::exp(1.0 - q);
        if (q < 1.0) e += (1.0 - q) * std::exp(q);
        return e;
    });
    return tpl;
}

GaitTemplate compute_template(TemplateKind kind, const std::vector<SilhouetteFrame>& frames) {
    switch (kind) {
        case TemplateKind::GEI: return compute_gei(frames);
        case TemplateKind::GEnI: return compute_geni(frames);
        case TemplateKind::GPPE: return compute_gppe(frames);
    }
    throw std::logic_error("bad template kind");
}

void write_template_csv(const GaitTemplate& tpl, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write template CSV: " + file.string());
    out.precision(std::numeric_limits<double>::max_digits10);
    for (int r = 0; r < tpl.height(); ++r) {
        for (int c = 0; c < tpl.width(); ++c) {
            if (c) out << ',';
            out << tpl.values(r, c);
        }
        out << '\n';
    }
}

GaitTemplate read_template_csv(const std::filesystem::path& file, TemplateKind kind) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open template CSV: " + file.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) row.push_back(std::stod(field));
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error("ragged template CSV: " + file.string());
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("empty template CSV: " + file.string());
    GaitTemplate tpl;
    tpl.kind = kind;
    tpl.values.resize(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(rows.front().size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            tpl.values(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    return tpl;
}

void write_template_pgm(const GaitTemplate& tpl, const std::filesystem::path& file) {
    // GEnI/GPPE live in [0, ~1.65]; stretch non-GEI kinds to use the 8-bit range
    const double scale = tpl.kind == TemplateKind::GEI ? 1.0
                                                       : 255.0 / std::max(tpl.values.maxCoeff(), 1e-12);
    std::vector<std::uint8_t> gray(static_cast<std::size_t>(tpl.height()) * tpl.width());
    std::size_t i = 0;
    for (int r = 0; r < tpl.height(); ++r)
        for (int c = 0; c < tpl.width(); ++c) {
            const double v = std::clamp(tpl.values(r, c) * scale, 0.0, 255.0);
            gray[i++] = static_cast<std::uint8_t>(std::lround(v));
        }
    write_pgm_gray(gray, tpl.height(), tpl.width(), file);
}

}  // namespace gaitpart
