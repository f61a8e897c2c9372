#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lipiseg/word.hpp"

namespace lipiseg {

// Per-column cut evidence, all values in [0,1], higher = more cuttable.
//   f1  no character body below the head-line band
//   f2  no ascendant ink above the band
//   f3  few strokes crossing the body zone
//   f4  band thickness close to the word's typical head-line thickness
//   f5  a single ink run inside the band
//   f6  all ink of the column lies inside the band
struct FeatureMatrix {
    std::vector<std::array<double, 6>> columns;
};

namespace detail {

// [whole] minus [band]; at most two pieces, never adjacent to each other.
inline std::vector<RowSpan> remove_band(const RowSpan& whole, const RowSpan& band) {
    std::vector<RowSpan> out;
    RowSpan above{whole.top, std::min(whole.bottom, band.top - 1)};
    RowSpan below{std::max(whole.top, band.bottom + 1), whole.bottom};
    if (above.height() > 0) out.push_back(above);
    if (below.height() > 0) out.push_back(below);
    return out;
}

inline int rows_in(const std::vector<RowSpan>& spans) {
    int n = 0;
    for (const RowSpan& s : spans) n += s.height();
    return n;
}

inline int ink_in(const BinaryImage& img, int x, const std::vector<RowSpan>& spans) {
    int n = 0;
    for (const RowSpan& s : spans)
        for (int y = s.top; y <= s.bottom; ++y) n += img.at(x, y);
    return n;
}

inline int runs_in(const BinaryImage& img, int x, const std::vector<RowSpan>& spans) {
    int runs = 0;
    for (const RowSpan& s : spans) {
        bool prev = false;
        for (int y = s.top; y <= s.bottom; ++y) {
            bool ink = img.at(x, y);
            if (ink && !prev) ++runs;
            prev = ink;
        }
    }
    return runs;
}

inline int longest_run_in(const BinaryImage& img, int x, const RowSpan& span) {
    int best = 0;
    int cur = 0;
    for (int y = span.top; y <= span.bottom; ++y) {
        cur = img.at(x, y) ? cur + 1 : 0;
        best = std::max(best, cur);
    }
    return best;
}

inline double median(std::vector<int> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

} // namespace detail

inline FeatureMatrix compute_features(const BinaryImage& word, const RegionBands& regions,
                                      const HeadlineBand& headline) {
    const RowSpan band = headline.rows;
    if (band.top < 0 || band.bottom >= word.height() || band.height() < 1)
        throw std::out_of_range("head-line band outside word image");

    const RowSpan body_zone{regions.r[1].top, regions.r[2].bottom};
    const std::vector<RowSpan> body = detail::remove_band(body_zone, band);
    const std::vector<RowSpan> upper = detail::remove_band(regions.r[0], band);
    const int body_rows = detail::rows_in(body);
    const int upper_rows = detail::rows_in(upper);

    const int w = word.width();
    std::vector<int> band_thickness(static_cast<std::size_t>(w), 0);
    std::vector<int> nonzero;
    for (int x = 0; x < w; ++x) {
        band_thickness[static_cast<std::size_t>(x)] = detail::longest_run_in(word, x, band);
        if (band_thickness[static_cast<std::size_t>(x)] > 0)
            nonzero.push_back(band_thickness[static_cast<std::size_t>(x)]);
    }
    const double typical = detail::median(nonzero);

    FeatureMatrix m;
    m.columns.resize(static_cast<std::size_t>(w));
    for (int x = 0; x < w; ++x) {
        std::array<double, 6>& f = m.columns[static_cast<std::size_t>(x)];

        const int d_body = detail::ink_in(word, x, body);
        f[0] = 1.0 - std::min(1.0, static_cast<double>(d_body) / std::max(1, body_rows));

        const int d_upper = detail::ink_in(word, x, upper);
        f[1] = 1.0 - std::min(1.0, static_cast<double>(d_upper) / std::max(1, upper_rows));

        const int body_runs = detail::runs_in(word, x, body);
        f[2] = body_runs == 0 ? 1.0 : 1.0 / (1.0 + body_runs);

        const int t = band_thickness[static_cast<std::size_t>(x)];
        f[3] = 1.0 - std::min(1.0, std::abs(t - typical) / std::max(1.0, typical));

        const int band_runs = detail::runs_in(word, x, {band});
        f[4] = band_runs == 1 ? 1.0 : (band_runs == 0 ? 0.0 : 1.0 / band_runs);

        bool outside = false;
        for (int y = 0; y < word.height() && !outside; ++y)
            if (word.at(x, y) && !band.contains(y)) outside = true;
        f[5] = outside ? 0.0 : 1.0;
    }
    return m;
}

struct WeightProfile {
    std::vector<double> weights;    // one value per column, in [0,1]
    std::array<double, 6> alphas{}; // as used, normalized to sum 1
};

inline std::array<double, 6> default_alphas() {
    return {1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 6};
}

// Convex mix of the six features per column. Alphas are normalized here, so
// callers may pass any non-negative mix that is not all zero.
inline WeightProfile weightage(const FeatureMatrix& features,
                               const std::array<double, 6>& alphas = default_alphas()) {
    double sum = 0;
    for (double a : alphas) {
        if (a < 0) throw std::invalid_argument("alphas must be non-negative");
        sum += a;
    }
    if (sum <= 0) throw std::invalid_argument("alphas must not be all zero");

    WeightProfile out;
    for (std::size_t i = 0; i < 6; ++i) out.alphas[i] = alphas[i] / sum;
    out.weights.reserve(features.columns.size());
    for (const std::array<double, 6>& f : features.columns) {
        double v = 0;
        for (std::size_t i = 0; i < 6; ++i) v += out.alphas[i] * f[i];
        out.weights.push_back(std::clamp(v, 0.0, 1.0));
    }
    return out;
}

struct CutStrip {
    int left = 0;
    int right = -1;
    int peak_col = 0;        // leftmost argmax inside the strip
    double peak_weight = 0;
    int width() const { return right - left + 1; }
    friend bool operator==(const CutStrip&, const CutStrip&) = default;
};

// Maximal runs of columns with weight strictly above delta; runs narrower
// than min_strip are dropped as noise.
inline std::vector<CutStrip> find_cut_strips(const WeightProfile& profile, double delta = 0.6,
                                             int min_strip = 2) {
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("delta must lie in [0,1]");
    if (min_strip < 1) throw std::invalid_argument("min_strip must be >= 1");

    std::vector<CutStrip> strips;
    const int n = static_cast<int>(profile.weights.size());
    int start = -1;
    for (int x = 0; x <= n; ++x) {
        bool on = x < n && profile.weights[static_cast<std::size_t>(x)] > delta;
        if (on && start < 0) start = x;
        if (!on && start >= 0) {
            if (x - start >= min_strip) {
                CutStrip s{start, x - 1, start, profile.weights[static_cast<std::size_t>(start)]};
                for (int c = start; c < x; ++c)
                    if (profile.weights[static_cast<std::size_t>(c)] > s.peak_weight) {
                        s.peak_weight = profile.weights[static_cast<std::size_t>(c)];
                        s.peak_col = c;
                    }
                strips.push_back(s);
            }
            start = -1;
        }
    }
    return strips;
}

// Removes head-line ink under each strip: erased pixels are exactly
// strip columns x band rows. Ink outside the band is never touched.
inline BinaryImage apply_cuts(const BinaryImage& word, const std::vector<CutStrip>& strips,
                              const HeadlineBand& headline) {
    const RowSpan band = headline.rows;
    if (band.top < 0 || band.bottom >= word.height())
        throw std::out_of_range("head-line band outside word image");

    std::vector<Point> region;
    for (const CutStrip& s : strips) {
        if (s.left < 0 || s.right >= word.width() || s.width() < 1)
            throw std::out_of_range("cut strip outside word image");
        for (int x = s.left; x <= s.right; ++x)
            for (int y = band.top; y <= band.bottom; ++y) region.push_back(Point{x, y});
    }
    return erase(word, region);
}

} // namespace lipiseg
