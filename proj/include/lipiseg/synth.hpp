#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipiseg/image.hpp"
#include "lipiseg/page.hpp"

namespace lipiseg {

// Seed-stable generator; the standard distributions are not pinned across
// library implementations, and generated corpora double as golden data.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool chance(double p) { return unit() < p; }
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct SynthParams {
    std::uint64_t seed = 1;
    int count = 10;                        // words or pages, depending on the call

    IntRange strokes_per_word{2, 5};       // hanging stroke groups; junctions = groups - 1
    IntRange stroke_width{3, 5};
    IntRange headline_thickness{2, 4};
    IntRange body_depth{16, 28};           // stroke rows below the head-line
    IntRange junction_gap{3, 7};           // bare head-line columns between groups
    IntRange ascender_height{2, 5};
    IntRange descender_depth{2, 6};
    double ascender_prob = 0.5;
    double descender_prob = 0.35;

    int page_width = 280;
    IntRange lines_per_page{2, 4};
    IntRange line_gap{6, 12};              // blank rows between line bands
    int page_margin = 8;
};

namespace detail {

inline void check_range(const IntRange& r, const char* name) {
    if (r.lo < 1 || r.hi < r.lo)
        throw std::invalid_argument(std::string(name) + " range must satisfy 1 <= lo <= hi");
}

inline void check_prob(double p, const char* name) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument(std::string(name) + " must lie in [0,1]");
}

inline int draw(SplitMix64& rng, const IntRange& r) { return r.lo + rng.below(r.hi - r.lo + 1); }

} // namespace detail

inline void validate(const SynthParams& p) {
    if (p.count < 1) throw std::invalid_argument("count must be >= 1");
    detail::check_range(p.strokes_per_word, "strokes_per_word");
    detail::check_range(p.stroke_width, "stroke_width");
    detail::check_range(p.headline_thickness, "headline_thickness");
    detail::check_range(p.body_depth, "body_depth");
    detail::check_range(p.junction_gap, "junction_gap");
    detail::check_range(p.ascender_height, "ascender_height");
    detail::check_range(p.descender_depth, "descender_depth");
    detail::check_range(p.lines_per_page, "lines_per_page");
    detail::check_range(p.line_gap, "line_gap");
    detail::check_prob(p.ascender_prob, "ascender_prob");
    detail::check_prob(p.descender_prob, "descender_prob");
    if (p.page_margin < 1) throw std::invalid_argument("page_margin must be >= 1");
    if (p.page_width < 4 * p.page_margin)
        throw std::invalid_argument("page_width too small for the margin");
}

// One synthetic word, tightly boxed: a full-width head-line bar, vertical
// stroke groups hanging from it, bare-bar junction gaps between the groups.
// Ascenders extend a stroke above the bar, descenders below the common
// baseline, so every ink row keeps at least stroke_width.lo pixels and every
// junction column holds head-line ink only.
struct SynthWord {
    BinaryImage image;
    RowSpan headline;         // head-line bar rows, image coordinates
    std::vector<int> cut_xs;  // junction gap centers, image columns
};

inline SynthWord synth_word(const SynthParams& p, SplitMix64& rng) {
    validate(p);

    const int groups = detail::draw(rng, p.strokes_per_word);
    const int bar = detail::draw(rng, p.headline_thickness);
    const int depth = detail::draw(rng, p.body_depth);

    struct Group {
        int width = 0;
        int ascender = 0;  // rows above the bar
        int descender = 0; // rows below the common baseline
        int gap_after = 0;
    };
    std::vector<Group> plan(static_cast<std::size_t>(groups));
    int asc_max = 0;
    for (int g = 0; g < groups; ++g) {
        Group& gr = plan[static_cast<std::size_t>(g)];
        gr.width = detail::draw(rng, p.stroke_width);
        if (rng.chance(p.ascender_prob)) gr.ascender = detail::draw(rng, p.ascender_height);
        if (rng.chance(p.descender_prob)) gr.descender = detail::draw(rng, p.descender_depth);
        if (g + 1 < groups) gr.gap_after = detail::draw(rng, p.junction_gap);
        asc_max = std::max(asc_max, gr.ascender);
    }

    // Descenders deeper than a quarter of the word would push the common
    // baseline out of region-3; keep them in region-4.
    const int desc_cap = std::max(1, (asc_max + bar + depth - 3) / 3);
    int desc_max = 0;
    for (Group& gr : plan) {
        gr.descender = std::min(gr.descender, desc_cap);
        desc_max = std::max(desc_max, gr.descender);
    }

    int width = 0;
    for (const Group& gr : plan) width += gr.width + gr.gap_after;
    const int height = asc_max + bar + depth + desc_max;
    const int bar_top = asc_max;
    const int baseline = asc_max + bar + depth - 1;

    SynthWord word{BinaryImage(width, height), RowSpan{bar_top, bar_top + bar - 1}, {}};

    for (int x = 0; x < width; ++x)
        for (int y = bar_top; y < bar_top + bar; ++y) word.image.set(x, y, true);

    int x = 0;
    for (const Group& gr : plan) {
        const int top = bar_top - gr.ascender;
        const int bottom = baseline + gr.descender;
        for (int c = x; c < x + gr.width; ++c)
            for (int y = top; y <= bottom; ++y) word.image.set(c, y, true);
        x += gr.width;
        if (gr.gap_after > 0) {
            word.cut_xs.push_back(x + (gr.gap_after - 1) / 2);
            x += gr.gap_after;
        }
    }
    return word;
}

struct PageWordTruth {
    std::string id;           // L<line>W<word>
    Rect box;                 // page coordinates, tight
    RowSpan headline;         // page coordinates
    std::vector<int> cut_xs;  // columns local to the word box
};

struct SynthPage {
    BinaryImage image;
    std::vector<RowSpan> lines;       // page coordinates, tight
    std::vector<PageWordTruth> words;
};

// Words of one text line share their head-line top row. Inter-word gaps stay
// above the min_gap the segmenter will derive from the line height, and the
// stroke width floor keeps every ink row at or above the derived k1, so a
// default segmentation run recovers the recorded truth exactly.
inline SynthPage synth_page(const SynthParams& p, SplitMix64& rng) {
    validate(p);
    if (p.stroke_width.lo < auto_k1(p.page_width))
        throw std::invalid_argument(
            "stroke_width.lo must be >= ceil(page_width/100) to keep thin rows detectable");

    const int lines = detail::draw(rng, p.lines_per_page);
    const int usable = p.page_width - 2 * p.page_margin;

    struct Placed {
        SynthWord word;
        int x = 0;
        int y = 0;
    };

    std::vector<std::vector<Placed>> rows(static_cast<std::size_t>(lines));
    std::vector<RowSpan> line_spans;
    int y = p.page_margin;

    for (int li = 0; li < lines; ++li) {
        std::vector<Placed>& row = rows[static_cast<std::size_t>(li)];
        std::vector<SynthWord> chosen;
        int asc = 0;
        int below = 0;

        // Grow the line word by word while the layout still fits.
        while (true) {
            SynthWord cand = synth_word(p, rng);
            if (chosen.empty() && cand.image.width() > usable)
                throw std::invalid_argument("page_width too small for a single word");
            int cand_asc = cand.headline.top;
            int cand_below = cand.image.height() - cand.headline.top;
            int new_h = std::max(asc, cand_asc) + std::max(below, cand_below);
            int gap = auto_min_gap(new_h) + 2;
            int used = 0;
            for (const SynthWord& wrd : chosen) used += wrd.image.width();
            used += static_cast<int>(chosen.size()) * gap + cand.image.width();
            if (!chosen.empty() && used > usable) break;
            asc = std::max(asc, cand_asc);
            below = std::max(below, cand_below);
            chosen.push_back(std::move(cand));
            if (static_cast<int>(chosen.size()) >= 8) break;
        }

        const int line_h = asc + below;
        const int gap = auto_min_gap(line_h) + 2;
        int x = p.page_margin;
        for (SynthWord& wrd : chosen) {
            int wx = x;
            int wy = y + (asc - wrd.headline.top);
            x += wrd.image.width() + gap;
            row.push_back(Placed{std::move(wrd), wx, wy});
        }
        line_spans.push_back(RowSpan{y, y + line_h - 1});
        y += line_h + detail::draw(rng, p.line_gap);
    }

    const int page_h = line_spans.back().bottom + 1 + p.page_margin;

    SynthPage page{BinaryImage(p.page_width, page_h), std::move(line_spans), {}};
    for (int li = 0; li < lines; ++li) {
        const std::vector<Placed>& row = rows[static_cast<std::size_t>(li)];
        for (std::size_t wi = 0; wi < row.size(); ++wi) {
            const Placed& pl = row[wi];
            const BinaryImage& img = pl.word.image;
            for (int yy = 0; yy < img.height(); ++yy)
                for (int xx = 0; xx < img.width(); ++xx)
                    if (img.at(xx, yy)) page.image.set(pl.x + xx, pl.y + yy, true);

            PageWordTruth truth;
            truth.id = "L" + std::to_string(li) + "W" + std::to_string(wi);
            truth.box = Rect{pl.x, pl.y, pl.x + img.width() - 1, pl.y + img.height() - 1};
            truth.headline = RowSpan{pl.y + pl.word.headline.top, pl.y + pl.word.headline.bottom};
            truth.cut_xs = pl.word.cut_xs;
            page.words.push_back(std::move(truth));
        }
    }
    return page;
}

} // namespace lipiseg
