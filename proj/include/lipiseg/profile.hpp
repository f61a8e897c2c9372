#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lipiseg/image.hpp"

namespace lipiseg {

enum class Axis { row, column };

// Ink counts along one axis. counts[i] belongs to row/column origin + i.
struct ProjectionProfile {
    Axis axis = Axis::row;
    int origin = 0;
    std::vector<int> counts;

    long long sum() const {
        long long s = 0;
        for (int c : counts) s += c;
        return s;
    }
};

// Maximal run of ink within a single column.
struct Run {
    int start = 0;  // row of the first ink pixel
    int length = 0;
    friend bool operator==(const Run&, const Run&) = default;
};

namespace detail {

inline Rect full_rect(const BinaryImage& img) {
    return Rect{0, 0, img.width() - 1, img.height() - 1};
}

inline void check_rect(const BinaryImage& img, const Rect& r) {
    if (r.width() < 1 || r.height() < 1 || !img.in_bounds(r.x0, r.y0) || !img.in_bounds(r.x1, r.y1))
        throw std::out_of_range("profile rectangle outside image");
}

} // namespace detail

inline ProjectionProfile horizontal_profile(const BinaryImage& img,
                                            std::optional<Rect> rect = std::nullopt) {
    Rect r = rect.value_or(detail::full_rect(img));
    detail::check_rect(img, r);
    ProjectionProfile p{Axis::row, r.y0, std::vector<int>(static_cast<std::size_t>(r.height()), 0)};
    for (int y = r.y0; y <= r.y1; ++y) {
        int n = 0;
        for (int x = r.x0; x <= r.x1; ++x) n += img.at(x, y);
        p.counts[static_cast<std::size_t>(y - r.y0)] = n;
    }
    return p;
}

inline ProjectionProfile vertical_profile(const BinaryImage& img,
                                          std::optional<Rect> rect = std::nullopt) {
    Rect r = rect.value_or(detail::full_rect(img));
    detail::check_rect(img, r);
    ProjectionProfile p{Axis::column, r.x0, std::vector<int>(static_cast<std::size_t>(r.width()), 0)};
    for (int x = r.x0; x <= r.x1; ++x) {
        int n = 0;
        for (int y = r.y0; y <= r.y1; ++y) n += img.at(x, y);
        p.counts[static_cast<std::size_t>(x - r.x0)] = n;
    }
    return p;
}

// Maximal ink runs of column x restricted to the given rows.
inline std::vector<Run> column_runs(const BinaryImage& img, int x, const RowSpan& rows) {
    if (x < 0 || x >= img.width() || rows.top < 0 || rows.bottom >= img.height() || rows.height() < 1)
        throw std::out_of_range("column run query outside image");
    std::vector<Run> runs;
    int start = -1;
    for (int y = rows.top; y <= rows.bottom + 1; ++y) {
        bool ink = y <= rows.bottom && img.at(x, y);
        if (ink && start < 0) start = y;
        if (!ink && start >= 0) {
            runs.push_back(Run{start, y - start});
            start = -1;
        }
    }
    return runs;
}

} // namespace lipiseg
