#include "gaitpart/image.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>
#include <string>

namespace gaitpart {

long SilhouetteFrame::foreground_count() const {
    long n = 0;
    for (auto p : pixels) n += p;
    return n;
}

SilhouetteFrame make_frame(int height, int width, std::uint8_t fill) {
    if (height <= 0 || width <= 0) throw std::invalid_argument("frame dimensions must be positive");
    SilhouetteFrame f;
    f.height = height;
    f.width = width;
    f.pixels.assign(static_cast<std::size_t>(height) * width, fill);
    return f;
}

namespace {

// reads the next whitespace/comment-delimited token of a PGM header
int next_header_int(std::istream& in, const std::filesystem::path& file) {
    int ch = in.get();
    while (ch != EOF) {
        if (ch == '#') {
            while (ch != EOF && ch != '\n') ch = in.get();
        } else if (!std::isspace(ch)) {
            break;
        }
        ch = in.get();
    }
    if (ch == EOF) throw std::runtime_error("truncated PGM header: " + file.string());
    std::string tok;
    while (ch != EOF && !std::isspace(ch)) {
        tok.push_back(static_cast<char>(ch));
        ch = in.get();
    }
    try {
        return std::stoi(tok);
    } catch (const std::exception&) {
        throw std::runtime_error("bad PGM header token '" + tok + "': " + file.string());
    }
}

}  // namespace

SilhouetteFrame read_pgm(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open PGM file: " + file.string());
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5')
        throw std::runtime_error("not a P5 PGM file: " + file.string());
    const int width = next_header_int(in, file);
    const int height = next_header_int(in, file);
    const int maxval = next_header_int(in, file);
    if (width <= 0 || height <= 0)
        throw std::runtime_error("bad PGM dimensions: " + file.string());
    if (maxval <= 0 || maxval > 255)
        throw std::runtime_error("unsupported PGM maxval (want <= 255): " + file.string());

    std::vector<std::uint8_t> raw(static_cast<std::size_t>(width) * height);
    in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size()));
    if (in.gcount() != static_cast<std::streamsize>(raw.size()))
        throw std::runtime_error("truncated PGM raster: " + file.string());

    SilhouetteFrame f;
    f.height = height;
    f.width = width;
    f.pixels.resize(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) f.pixels[i] = raw[i] > 127 ? 1 : 0;
    return f;
}

void write_pgm(const SilhouetteFrame& frame, const std::filesystem::path& file) {
    std::vector<std::uint8_t> raw(frame.pixels.size());
    for (std::size_t i = 0; i < raw.size(); ++i) raw[i] = frame.pixels[i] ? 255 : 0;
    write_pgm_gray(raw, frame.height, frame.width, file);
}

void write_pgm_gray(const std::vector<std::uint8_t>& gray, int height, int width,
                    const std::filesystem::path& file) {
    if (static_cast<std::size_t>(height) * width != gray.size())
        throw std::invalid_argument("gray buffer size does not match dimensions");
    std::ofstream out(file, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write PGM file: " + file.string());
    out << "P5\n" << width << " " << height << "\n255\n";
    out.write(reinterpret_cast<const char*>(gray.data()), static_cast<std::streamsize>(gray.size()));
    if (!out) throw std::runtime_error("short write: " + file.string());
}

}  // namespace gaitpart
