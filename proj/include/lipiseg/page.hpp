#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipiseg/profile.hpp"

namespace lipiseg {

struct LineBand {
    int top = 0;
    int bottom = -1;
    int height() const { return bottom - top + 1; }
    friend bool operator==(const LineBand&, const LineBand&) = default;
};

struct WordBox {
    int line_index = 0;
    int left = 0;
    int right = -1;
    int top = 0;     // tightened to the ink extent inside the line band
    int bottom = -1;
    int width() const { return right - left + 1; }
    int height() const { return bottom - top + 1; }
    friend bool operator==(const WordBox&, const WordBox&) = default;
};

// 0 means "derive from the page / line geometry" for k1 and min_gap.
struct PageParams {
    int k1 = 0;
    int k2 = 1;
    int min_gap = 0;
    int smoothing = 1;
};

struct PageSegmentation {
    std::vector<LineBand> lines;
    std::vector<WordBox> words; // line-major, left to right
    PageParams params;          // as resolved for the call (min_gap 0 = per line)
};

inline int auto_k1(int page_width) { return std::max(1, (page_width + 99) / 100); }
inline int auto_min_gap(int line_height) { return std::max(3, (line_height + 3) / 4); }

// Maximal runs of rows whose (optionally max-smoothed) profile count >= k1.
inline std::vector<LineBand> segment_lines(const BinaryImage& page, int k1, int smoothing = 1) {
    if (k1 < 1) throw std::invalid_argument("k1 must be >= 1, got " + std::to_string(k1));
    if (smoothing < 1) throw std::invalid_argument("smoothing window must be >= 1");

    std::vector<int> counts = horizontal_profile(page).counts;
    if (smoothing > 1) {
        // Centered moving maximum; bridges gaps narrower than the window.
        const int lo = (smoothing - 1) / 2;
        const int hi = smoothing / 2;
        const int n = static_cast<int>(counts.size());
        std::vector<int> smoothed(counts.size());
        for (int i = 0; i < n; ++i) {
            int m = 0;
            for (int j = std::max(0, i - lo); j <= std::min(n - 1, i + hi); ++j)
                m = std::max(m, counts[static_cast<std::size_t>(j)]);
            smoothed[static_cast<std::size_t>(i)] = m;
        }
        counts.swap(smoothed);
    }

    std::vector<LineBand> bands;
    int start = -1;
    const int n = static_cast<int>(counts.size());
    for (int y = 0; y <= n; ++y) {
        bool on = y < n && counts[static_cast<std::size_t>(y)] >= k1;
        if (on && start < 0) start = y;
        if (!on && start >= 0) {
            bands.push_back(LineBand{start, y - 1});
            start = -1;
        }
    }
    return bands;
}

// Above-threshold column runs inside the line band; runs separated by fewer
// than min_gap below-threshold columns belong to the same word.
inline std::vector<WordBox> segment_words(const BinaryImage& page, const LineBand& line,
                                          int k2, int min_gap, int line_index = 0) {
    if (k2 < 1) throw std::invalid_argument("k2 must be >= 1, got " + std::to_string(k2));
    if (min_gap < 1) throw std::invalid_argument("min_gap must be >= 1, got " + std::to_string(min_gap));
    if (line.top < 0 || line.bottom >= page.height() || line.height() < 1)
        throw std::out_of_range("line band outside page");

    Rect band{0, line.top, page.width() - 1, line.bottom};
    std::vector<int> counts = vertical_profile(page, band).counts;

    std::vector<ColSpan> runs;
    int start = -1;
    const int n = static_cast<int>(counts.size());
    for (int x = 0; x <= n; ++x) {
        bool on = x < n && counts[static_cast<std::size_t>(x)] >= k2;
        if (on && start < 0) start = x;
        if (!on && start >= 0) {
            runs.push_back(ColSpan{start, x - 1});
            start = -1;
        }
    }

    std::vector<ColSpan> merged;
    for (const ColSpan& r : runs) {
        if (!merged.empty() && r.left - merged.back().right - 1 < min_gap)
            merged.back().right = r.right;
        else
            merged.push_back(r);
    }

    std::vector<WordBox> words;
    for (const ColSpan& m : merged) {
        int top = line.bottom + 1;
        int bottom = line.top - 1;
        for (int y = line.top; y <= line.bottom; ++y)
            for (int x = m.left; x <= m.right; ++x)
                if (page.at(x, y)) {
                    top = std::min(top, y);
                    bottom = std::max(bottom, y);
                    break; // next row once this one is known to hold ink
                }
        words.push_back(WordBox{line_index, m.left, m.right, top, bottom});
    }
    return words;
}

inline PageSegmentation segment_page(const BinaryImage& page, PageParams params = {}) {
    if (params.k1 == 0) params.k1 = auto_k1(page.width());
    PageSegmentation out;
    out.lines = segment_lines(page, params.k1, params.smoothing);
    for (std::size_t i = 0; i < out.lines.size(); ++i) {
        const LineBand& line = out.lines[i];
        int gap = params.min_gap > 0 ? params.min_gap : auto_min_gap(line.height());
        std::vector<WordBox> words =
            segment_words(page, line, params.k2, gap, static_cast<int>(i));
        out.words.insert(out.words.end(), words.begin(), words.end());
    }
    out.params = params;
    return out;
}

} // namespace lipiseg
