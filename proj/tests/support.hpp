#pragma once

// Shared test utilities: tiny image builders and seeded random rasters.

#include <random>
#include <string>
#include <vector>

#include "lipiseg/image.hpp"

namespace testutil {

// Rows of '.', '#'; '#' is ink. All rows must share one width.
inline lipiseg::BinaryImage image_from_strings(const std::vector<std::string>& rows) {
    lipiseg::BinaryImage img(static_cast<int>(rows.at(0).size()), static_cast<int>(rows.size()));
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            img.set(x, y, rows[static_cast<std::size_t>(y)].at(static_cast<std::size_t>(x)) == '#');
    return img;
}

inline lipiseg::BinaryImage random_binary(std::mt19937& rng, int w, int h, double density) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    lipiseg::BinaryImage img(w, h);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) img.set(x, y, unit(rng) < density);
    return img;
}

inline lipiseg::GrayImage random_gray(std::mt19937& rng, int w, int h) {
    std::uniform_int_distribution<int> level(0, 255);
    std::vector<std::uint8_t> samples(static_cast<std::size_t>(w) * h);
    for (std::uint8_t& s : samples) s = static_cast<std::uint8_t>(level(rng));
    return lipiseg::GrayImage(w, h, std::move(samples));
}

// White border of the given thickness on all four sides.
inline lipiseg::BinaryImage pad_image(const lipiseg::BinaryImage& img, int border) {
    lipiseg::BinaryImage out(img.width() + 2 * border, img.height() + 2 * border);
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            if (img.at(x, y)) out.set(x + border, y + border, true);
    return out;
}

} // namespace testutil
