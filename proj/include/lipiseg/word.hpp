#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "lipiseg/page.hpp"
#include "lipiseg/profile.hpp"

namespace lipiseg {

// Four horizontal bands of a word: r[0] holds ascendants, the head-line sits
// near the r[0]/r[1] boundary, r[1]..r[2] hold character bodies, r[3] holds
// descendants.
struct RegionBands {
    std::array<RowSpan, 4> r;
    friend bool operator==(const RegionBands&, const RegionBands&) = default;
};

// Splits [top,bottom] into four near-equal bands; leftover rows go to the
// topmost bands. Heights below 4 cannot give four disjoint non-empty bands,
// so there the bands collapse to single rows with the trailing bands sharing
// the last row.
inline RegionBands format_regions(int top, int bottom) {
    const int h = bottom - top + 1;
    if (h < 1) throw std::invalid_argument("word row extent is empty");

    RegionBands bands;
    if (h >= 4) {
        const int q = h / 4;
        const int rem = h % 4;
        int heights[4] = {q + (rem > 0), q + (rem > 1), q + (rem > 2), q};
        int y = top;
        for (int i = 0; i < 4; ++i) {
            bands.r[static_cast<std::size_t>(i)] = RowSpan{y, y + heights[i] - 1};
            y += heights[i];
        }
    } else {
        for (int i = 0; i < 4; ++i) {
            int row = top + std::min(i, h - 1);
            bands.r[static_cast<std::size_t>(i)] = RowSpan{row, row};
        }
    }
    return bands;
}

inline RegionBands format_regions(const WordBox& word) {
    return format_regions(word.top, word.bottom);
}

struct HeadlineBand {
    RowSpan rows;
    int max_row = 0;   // densest row of region-1 U region-2, ties resolved downward
    int max_count = 0;
    double w = 0.7;
    friend bool operator==(const HeadlineBand&, const HeadlineBand&) = default;
};

// Densest row of r1 U r2 extended up and down while the profile stays at or
// above w * max_count. The band may reach at most one row into region-3.
// Returns nothing when r1 U r2 carries no ink.
inline std::optional<HeadlineBand> estimate_headline(const BinaryImage& word,
                                                     const RegionBands& regions,
                                                     double w = 0.7) {
    if (w < 0.0 || w > 1.0) throw std::invalid_argument("w must lie in [0,1]");

    const int search_top = regions.r[0].top;
    const int search_bottom = regions.r[1].bottom;
    const int clamp_bottom = std::max(search_bottom, regions.r[2].top);
    if (search_top < 0 || clamp_bottom >= word.height())
        throw std::out_of_range("region bands outside word image");

    ProjectionProfile prof =
        horizontal_profile(word, Rect{0, search_top, word.width() - 1, clamp_bottom});
    auto count = [&](int row) { return prof.counts[static_cast<std::size_t>(row - search_top)]; };

    int max_row = search_top;
    for (int y = search_top; y <= search_bottom; ++y)
        if (count(y) >= count(max_row)) max_row = y; // >= keeps the bottom-most peak
    const int max_count = count(max_row);
    if (max_count == 0) return std::nullopt;

    const double floor = w * max_count;
    int top = max_row;
    while (top - 1 >= search_top && count(top - 1) >= floor) --top;
    int bottom = max_row;
    while (bottom + 1 <= clamp_bottom && count(bottom + 1) >= floor) ++bottom;

    return HeadlineBand{RowSpan{top, bottom}, max_row, max_count, w};
}

} // namespace lipiseg
