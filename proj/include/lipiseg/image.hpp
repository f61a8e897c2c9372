#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipiseg/geometry.hpp"

namespace lipiseg {

namespace detail {

inline void check_dims(int width, int height) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("image dimensions must be positive, got " +
                                    std::to_string(width) + "x" + std::to_string(height));
}

} // namespace detail

// 8-bit grayscale raster, row major.
class GrayImage {
public:
    GrayImage(int width, int height)
        : width_(width), height_(height) {
        detail::check_dims(width, height);
        samples_.assign(static_cast<std::size_t>(width) * height, 255);
    }

    GrayImage(int width, int height, std::vector<std::uint8_t> samples)
        : width_(width), height_(height), samples_(std::move(samples)) {
        detail::check_dims(width, height);
        if (samples_.size() != static_cast<std::size_t>(width) * height)
            throw std::invalid_argument("sample buffer size does not match image dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }

    std::uint8_t at(int x, int y) const { return samples_[index(x, y)]; }
    void set(int x, int y, std::uint8_t v) { samples_[index(x, y)] = v; }

    const std::vector<std::uint8_t>& samples() const { return samples_; }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;

private:
    std::size_t index(int x, int y) const {
        if (x < 0 || x >= width_ || y < 0 || y >= height_)
            throw std::out_of_range("pixel (" + std::to_string(x) + "," + std::to_string(y) +
                                    ") outside " + std::to_string(width_) + "x" + std::to_string(height_));
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> samples_;
};

// Ink mask, row major, true = ink. Treated as immutable once built; every
// operation that changes pixel content returns a new image.
class BinaryImage {
public:
    BinaryImage(int width, int height)
        : width_(width), height_(height) {
        detail::check_dims(width, height);
        ink_.assign(static_cast<std::size_t>(width) * height, 0);
    }

    int width() const { return width_; }
    int height() const { return height_; }

    bool at(int x, int y) const { return ink_[index(x, y)] != 0; }
    void set(int x, int y, bool ink) { ink_[index(x, y)] = ink ? 1 : 0; }

    bool in_bounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

    int ink_count() const {
        int n = 0;
        for (std::uint8_t v : ink_) n += v;
        return n;
    }

    friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

private:
    std::size_t index(int x, int y) const {
        if (!in_bounds(x, y))
            throw std::out_of_range("pixel (" + std::to_string(x) + "," + std::to_string(y) +
                                    ") outside " + std::to_string(width_) + "x" + std::to_string(height_));
        return static_cast<std::size_t>(y) * width_ + x;
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> ink_;
};

// Interleaved 8-bit RGB raster, used for overlay rendering.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb; // 3 bytes per pixel, row major

    RgbImage(int w, int h) : width(w), height(h) {
        detail::check_dims(w, h);
        rgb.assign(static_cast<std::size_t>(w) * h * 3, 255);
    }

    std::size_t index(int x, int y) const {
        if (x < 0 || x >= width || y < 0 || y >= height)
            throw std::out_of_range("pixel outside rgb image");
        return (static_cast<std::size_t>(y) * width + x) * 3;
    }

    void set(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
        std::size_t i = index(x, y);
        rgb[i] = r;
        rgb[i + 1] = g;
        rgb[i + 2] = b;
    }
};

enum class BinarizeKind { otsu, fixed };

struct BinarizeMethod {
    BinarizeKind kind = BinarizeKind::otsu;
    int threshold = 128; // used by fixed only

    static BinarizeMethod otsu() { return {BinarizeKind::otsu, 0}; }
    static BinarizeMethod fixed(int threshold) { return {BinarizeKind::fixed, threshold}; }
};

// Threshold maximizing between-class variance of the 256-bin histogram.
// The ink class is {v : v < t}; among equal maxima the smallest t wins.
inline int otsu_threshold(const GrayImage& img) {
    std::array<long long, 256> hist{};
    for (std::uint8_t v : img.samples()) ++hist[v];

    long long total = static_cast<long long>(img.width()) * img.height();
    double sum_all = 0;
    for (int v = 0; v < 256; ++v) sum_all += static_cast<double>(v) * hist[v];

    double best_var = -1.0;
    int best_t = 0;
    long long w0 = 0;
    double sum0 = 0;
    for (int t = 1; t <= 255; ++t) {
        w0 += hist[t - 1];
        sum0 += static_cast<double>(t - 1) * hist[t - 1];
        long long w1 = total - w0;
        if (w0 == 0) continue;
        if (w1 == 0) break;
        double mu0 = sum0 / w0;
        double mu1 = (sum_all - sum0) / w1;
        double between = static_cast<double>(w0) * static_cast<double>(w1) * (mu0 - mu1) * (mu0 - mu1);
        if (between > best_var) {
            best_var = between;
            best_t = t;
        }
    }
    return best_t;
}

// Dark-on-light convention: a pixel is ink iff its luminance < threshold.
inline BinaryImage binarize(const GrayImage& img, BinarizeMethod method = {}) {
    int t;
    if (method.kind == BinarizeKind::otsu) {
        t = otsu_threshold(img);
    } else {
        if (method.threshold < 0 || method.threshold > 255)
            throw std::invalid_argument("fixed threshold must lie in [0,255]");
        t = method.threshold;
    }
    BinaryImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            out.set(x, y, img.at(x, y) < t);
    return out;
}

// Clears the given pixels; everything else is copied unchanged.
inline BinaryImage erase(const BinaryImage& img, const std::vector<Point>& region) {
    BinaryImage out = img;
    for (const Point& p : region) {
        if (!img.in_bounds(p.x, p.y))
            throw std::out_of_range("erase region pixel (" + std::to_string(p.x) + "," +
                                    std::to_string(p.y) + ") outside image");
        out.set(p.x, p.y, false);
    }
    return out;
}

inline BinaryImage crop(const BinaryImage& img, const Rect& r) {
    if (r.width() < 1 || r.height() < 1 || !img.in_bounds(r.x0, r.y0) || !img.in_bounds(r.x1, r.y1))
        throw std::out_of_range("crop rectangle outside image");
    BinaryImage out(r.width(), r.height());
    for (int y = r.y0; y <= r.y1; ++y)
        for (int x = r.x0; x <= r.x1; ++x)
            out.set(x - r.x0, y - r.y0, img.at(x, y));
    return out;
}

} // namespace lipiseg
