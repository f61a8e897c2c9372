#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lipiseg/components.hpp"
#include "lipiseg/features.hpp"

namespace lipiseg {

enum class SegmentClass { main_body, ascendant, descendant, headline_fragment, noise };

inline const char* segment_class_name(SegmentClass c) {
    switch (c) {
        case SegmentClass::main_body: return "main_body";
        case SegmentClass::ascendant: return "ascendant";
        case SegmentClass::descendant: return "descendant";
        case SegmentClass::headline_fragment: return "headline_fragment";
        case SegmentClass::noise: return "noise";
    }
    return "unknown";
}

struct Segment {
    Component component;
    SegmentClass cls = SegmentClass::main_body;
    // Index of the main_body segment this piece most plausibly belongs to.
    // Annotation only; the component itself is never merged.
    std::optional<std::size_t> attached_to;
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct SegmentParams {
    std::array<double, 6> alphas = default_alphas();
    double delta = 0.6;
    int min_strip = 2;
    int noise_area = 0;        // 0 = max(4, ceil(0.0005 * word area))
    double overlap_frac = 0.5;
};

inline int auto_noise_area(int word_width, int word_height) {
    long long area = static_cast<long long>(word_width) * word_height;
    return static_cast<int>(std::max<long long>(4, (area + 1999) / 2000));
}

inline std::vector<Component> label_segments(const BinaryImage& cut_word,
                                             Connectivity conn = Connectivity::eight) {
    return connected_components(cut_word, conn);
}

// Noise wins first, then heavy head-line membership, then the plurality of
// pixels over region-1 / region-2+3 / region-4. Ties favor main_body; an
// exact ascendant/descendant tie resolves upward.
inline SegmentClass classify_segment(const Component& comp, const RegionBands& regions,
                                     const HeadlineBand& headline, int noise_area) {
    if (comp.area < noise_area) return SegmentClass::noise;

    int in_band = 0;
    int upper = 0;
    int body = 0;
    int lower = 0;
    for (const Point& p : comp.pixels) {
        if (headline.rows.contains(p.y)) ++in_band;
        if (regions.r[0].contains(p.y))
            ++upper;
        else if (p.y >= regions.r[1].top && p.y <= regions.r[2].bottom)
            ++body;
        else
            ++lower;
    }
    if (10 * in_band >= 9 * comp.area) return SegmentClass::headline_fragment;
    if (body >= upper && body >= lower) return SegmentClass::main_body;
    return upper >= lower ? SegmentClass::ascendant : SegmentClass::descendant;
}

// Attaches every non-main, non-noise segment to the main_body segment whose
// column span overlaps it by at least overlap_frac of the segment's own
// width. Largest overlap wins; equal overlaps go to the leftmost main.
inline std::vector<Segment> reunify(std::vector<Segment> segments, double overlap_frac = 0.5) {
    if (overlap_frac < 0.0 || overlap_frac > 1.0)
        throw std::invalid_argument("overlap_frac must lie in [0,1]");

    for (Segment& s : segments) {
        s.attached_to.reset();
        if (s.cls == SegmentClass::main_body || s.cls == SegmentClass::noise) continue;

        int best_overlap = 0;
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < segments.size(); ++i) {
            const Segment& m = segments[i];
            if (m.cls != SegmentClass::main_body) continue;
            int overlap = std::min(s.component.bbox.x1, m.component.bbox.x1) -
                          std::max(s.component.bbox.x0, m.component.bbox.x0) + 1;
            if (overlap <= 0) continue;
            bool better = overlap > best_overlap ||
                          (overlap == best_overlap && best &&
                           m.component.bbox.x0 < segments[*best].component.bbox.x0);
            if (better) {
                best_overlap = overlap;
                best = i;
            }
        }
        if (best && best_overlap >= overlap_frac * s.component.bbox.width())
            s.attached_to = best;
    }
    return segments;
}

namespace detail {

inline Component whole_image_component(const BinaryImage& img) {
    Component c;
    c.label = 1;
    c.bbox = Rect{img.width(), img.height(), -1, -1};
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            if (img.at(x, y)) {
                c.bbox.x0 = std::min(c.bbox.x0, x);
                c.bbox.y0 = std::min(c.bbox.y0, y);
                c.bbox.x1 = std::max(c.bbox.x1, x);
                c.bbox.y1 = std::max(c.bbox.y1, y);
                c.area += 1;
                c.pixels.push_back(Point{x, y});
            }
    return c;
}

inline std::vector<Segment> finish_segments(std::vector<Component> comps,
                                            const RegionBands& regions,
                                            const HeadlineBand& headline,
                                            int noise_area, double overlap_frac) {
    std::vector<Segment> segments;
    segments.reserve(comps.size());
    for (Component& c : comps)
        segments.push_back(Segment{std::move(c), SegmentClass::main_body, std::nullopt});
    for (Segment& s : segments) s.cls = classify_segment(s.component, regions, headline, noise_area);
    std::sort(segments.begin(), segments.end(), [](const Segment& a, const Segment& b) {
        if (a.component.bbox.x0 != b.component.bbox.x0) return a.component.bbox.x0 < b.component.bbox.x0;
        if (a.component.bbox.y0 != b.component.bbox.y0) return a.component.bbox.y0 < b.component.bbox.y0;
        return a.component.label < b.component.label;
    });
    return reunify(std::move(segments), overlap_frac);
}

} // namespace detail

// Full word pipeline behind the head-line estimate: weight columns, cut the
// band, label what remains, classify, annotate attachments. Words without a
// usable head-line come back as one whole-word main_body segment.
inline std::vector<Segment> segment_word(const BinaryImage& word, const RegionBands& regions,
                                         const std::optional<HeadlineBand>& headline,
                                         const SegmentParams& params = {}) {
    if (word.ink_count() == 0) return {};

    const int noise_area = params.noise_area > 0
                               ? params.noise_area
                               : auto_noise_area(word.width(), word.height());

    if (!headline) {
        Component whole = detail::whole_image_component(word);
        return {Segment{std::move(whole), SegmentClass::main_body, std::nullopt}};
    }

    FeatureMatrix features = compute_features(word, regions, *headline);
    WeightProfile weights = weightage(features, params.alphas);
    std::vector<CutStrip> strips = find_cut_strips(weights, params.delta, params.min_strip);
    BinaryImage cut = apply_cuts(word, strips, *headline);
    // A cut that consumes every pixel means the word was nothing but head-line;
    // keep the uncut components so the bar itself survives as a segment.
    const BinaryImage& labeled = cut.ink_count() == 0 ? word : cut;
    return detail::finish_segments(label_segments(labeled), regions, *headline, noise_area,
                                   params.overlap_frac);
}

} // namespace lipiseg
