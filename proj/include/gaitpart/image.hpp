#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace gaitpart {

// Binary silhouette frame, row-major. Pixels are 0 (background) or 1
// (foreground).
struct SilhouetteFrame {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t& at(int row, int col) { return pixels[static_cast<std::size_t>(row) * width + col]; }
    std::uint8_t at(int row, int col) const { return pixels[static_cast<std::size_t>(row) * width + col]; }
    long foreground_count() const;

    bool operator==(const SilhouetteFrame&) const = default;
};

SilhouetteFrame make_frame(int height, int width, std::uint8_t fill = 0);

// PGM P5, maxval 255. On read, values > 127 binarize to foreground;
// on write, foreground maps to 255.
SilhouetteFrame read_pgm(const std::filesystem::path& file);
void write_pgm(const SilhouetteFrame& frame, const std::filesystem::path& file);

// Grayscale P5 writer for template inspection dumps.
void write_pgm_gray(const std::vector<std::uint8_t>& gray, int height, int width,
                    const std::filesystem::path& file);

}  // namespace gaitpart
