#include "gaitpart/dataio.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gaitpart {

bool is_valid_view_angle(int angle_deg) {
    return std::find(kViewAngles.begin(), kViewAngles.end(), angle_deg) != kViewAngles.end();
}

std::string to_string(Condition c) {
    switch (c) {
        case Condition::Normal: return "normal";
        case Condition::CarryingBag: return "carrying";
        case Condition::Clothing: return "clothing";
    }
    throw std::logic_error("bad condition");
}

std::string to_string(Role r) {
    switch (r) {
        case Role::Train: return "train";
        case Role::Validation: return "validation";
        case Role::TestNormal: return "test-normal";
        case Role::TestCarrying: return "test-carrying";
        case Role::TestClothing: return "test-clothing";
    }
    throw std::logic_error("bad role");
}

Condition condition_from_string(const std::string& s) {
    if (s == "normal") return Condition::Normal;
    if (s == "carrying") return Condition::CarryingBag;
    if (s == "clothing") return Condition::Clothing;
    throw std::invalid_argument("unknown condition '" + s + "'");
}

Role role_from_string(const std::string& s) {
    if (s == "train") return Role::Train;
    if (s == "validation") return Role::Validation;
    if (s == "test-normal") return Role::TestNormal;
    if (s == "test-carrying") return Role::TestCarrying;
    if (s == "test-clothing") return Role::TestClothing;
    throw std::invalid_argument("unknown role '" + s + "'");
}

std::filesystem::path DatasetManifest::resolve(const ManifestEntry& e) const {
    std::filesystem::path p(e.sequence_path);
    if (p.is_absolute()) return p;
    return base_dir / p;
}

SilhouetteSequence load_sequence(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw std::runtime_error("missing sequence directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".pgm")
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
    if (files.empty())
        throw std::runtime_error("no readable .pgm frames in: " + dir.string());

    SilhouetteSequence seq;
    seq.frames.reserve(files.size());
    for (const auto& f : files) {
        SilhouetteFrame frame = read_pgm(f);
        if (!seq.frames.empty() &&
            (frame.width != seq.frames.front().width || frame.height != seq.frames.front().height))
            throw std::runtime_error("mixed frame dimensions in: " + dir.string());
        seq.frames.push_back(std::move(frame));
    }
    return seq;
}

void save_sequence(const SilhouetteSequence& seq, const std::filesystem::path& dir) {
    if (seq.frames.empty()) throw std::invalid_argument("cannot save an empty sequence");
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < seq.frames.size(); ++i) {
        std::ostringstream name;
        name << "frame_";
        name.width(5);
        name.fill('0');
        name << i;
        write_pgm(seq.frames[i], dir / (name.str() + ".pgm"));
    }
}

DatasetManifest load_manifest(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open manifest: " + file.string());
    DatasetManifest m;
    m.base_dir = file.has_parent_path() ? file.parent_path() : std::filesystem::path(".");
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 5)
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": expected 5 comma-separated fields");
        ManifestEntry e;
        e.sequence_path = fields[0];
        e.subject_id = fields[1];
        e.condition = condition_from_string(fields[2]);
        e.view_angle_deg = std::stoi(fields[3]);
        if (!is_valid_view_angle(e.view_angle_deg))
            throw std::runtime_error("manifest line " + std::to_string(line_no) +
                                     ": view angle " + fields[3] + " is not a CASIA angle");
        e.role = role_from_string(fields[4]);
        m.entries.push_back(std::move(e));
    }
    return m;
}

void save_manifest(const DatasetManifest& manifest, const std::filesystem::path& file) {
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write manifest: " + file.string());
    out << "# path,subject,condition,angle,role\n";
    for (const auto& e : manifest.entries) {
        out << e.sequence_path << ',' << e.subject_id << ',' << to_string(e.condition) << ','
            << e.view_angle_deg << ',' << to_string(e.role) << '\n';
    }
}

void validate_manifest(const DatasetManifest& manifest) {
    std::set<std::string> train, test;
    for (const auto& e : manifest.entries) {
        if (e.role == Role::Train) train.insert(e.subject_id);
        if (e.role == Role::TestNormal || e.role == Role::TestCarrying || e.role == Role::TestClothing)
            test.insert(e.subject_id);
    }
    for (const auto& s : test) {
        if (!train.count(s))
            throw std::runtime_error("manifest: test subject '" + s + "' has no train sequences");
    }
}

SilhouetteFrame normalize_frame(const SilhouetteFrame& frame, int out_h, int out_w) {
    if (out_h <= 0 || out_w <= 0) throw std::invalid_argument("normalize_frame: bad output size");
    int r0 = frame.height, r1 = -1, c0 = frame.width, c1 = -1;
    for (int r = 0; r < frame.height; ++r) {
        for (int c = 0; c < frame.width; ++c) {
            if (frame.at(r, c)) {
                r0 = std::min(r0, r);
                r1 = std::max(r1, r);
                c0 = std::min(c0, c);
                c1 = std::max(c1, c);
            }
        }
    }
    if (r1 < 0) throw std::runtime_error("normalize_frame: empty foreground");

    const int bb_h = r1 - r0 + 1;
    const int bb_w = c1 - c0 + 1;
    const double scale = static_cast<double>(out_h) / bb_h;
    const int scaled_w = std::max(1, static_cast<int>(std::lround(bb_w * scale)));

    // nearest-neighbor resample of the bounding box to out_h x scaled_w
    SilhouetteFrame scaled = make_frame(out_h, scaled_w);
    for (int r = 0; r < out_h; ++r) {
        int sr = r0 + static_cast<int>(std::floor((r + 0.5) * bb_h / out_h));
        sr = std::min(sr, r1);
        for (int c = 0; c < scaled_w; ++c) {
            int sc = c0 + static_cast<int>(std::floor((c + 0.5) * bb_w / scaled_w));
            sc = std::min(sc, c1);
            scaled.at(r, c) = frame.at(sr, sc);
        }
    }

    // center horizontally on the foreground centroid
    double col_sum = 0;
    long count = 0;
    for (int r = 0; r < out_h; ++r)
        for (int c = 0; c < scaled_w; ++c)
            if (scaled.at(r, c)) {
                col_sum += c;
                ++count;
            }
    const double centroid = col_sum / std::max<long>(count, 1);
    const double target = (out_w - 1) / 2.0;
    const int offset = static_cast<int>(std::floor(target - centroid + 0.5));

    SilhouetteFrame out = make_frame(out_h, out_w);
    for (int r = 0; r < out_h; ++r) {
        for (int c = 0; c < scaled_w; ++c) {
            const int oc = c + offset;
            if (oc >= 0 && oc < out_w) out.at(r, oc) = scaled.at(r, c);
        }
    }
    return out;
}

CycleDetection detect_gait_cycle(const SilhouetteSequence& seq, int min_period) {
    if (min_period < 2) throw std::invalid_argument("detect_gait_cycle: min_period must be >= 2");
    const int n = static_cast<int>(seq.frames.size());
    if (n < 2 * min_period)
        throw std::invalid_argument("detect_gait_cycle: sequence shorter than twice the minimum period");

    std::vector<double> f(n);
    for (int t = 0; t < n; ++t) f[t] = static_cast<double>(seq.frames[t].foreground_count());
    double mean = 0;
    for (double v : f) mean += v;
    mean /= n;
    double var = 0;
    for (double v : f) var += (v - mean) * (v - mean);
    var /= n;

    CycleDetection det;
    const int max_lag = n / 2;
    double best = 0.0;
    int best_lag = 0;
    if (var > 1e-12 * std::max(1.0, mean * mean)) {
        for (int lag = min_period; lag <= max_lag; ++lag) {
            double acc = 0;
            for (int t = 0; t + lag < n; ++t) acc += (f[t] - mean) * (f[t + lag] - mean);
            acc /= (n - lag);
            if (acc > best) {
                best = acc;
                best_lag = lag;
            }
        }
    }
    if (best_lag == 0 || best <= 0.0) {
        det.cycles.emplace_back(0, n - 1);
        det.period = n;
        det.fallback = true;
        return det;
    }
    det.period = best_lag;
    const int k = n / best_lag;
    for (int i = 0; i < k; ++i) det.cycles.emplace_back(i * best_lag, (i + 1) * best_lag - 1);
    return det;
}

}  // namespace gaitpart
