#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lipiseg/page.hpp"
#include "lipiseg/segments.hpp"

namespace lipiseg {

struct PipelineParams {
    PageParams page;
    double w = 0.7;       // head-line band extension factor
    SegmentParams seg;
};

// Everything the pipeline derives for one word. Regions, head-line, strips
// and cut columns are local to the word box; the box places them on the page.
struct WordResult {
    std::string id;
    WordBox box;
    RegionBands regions;
    std::optional<HeadlineBand> headline;
    std::vector<CutStrip> strips;
    std::vector<int> cut_columns;  // strip midpoints
    std::vector<Segment> segments;
};

struct PageResult {
    PageSegmentation page;
    std::vector<WordResult> words;
};

// Line/word discovery followed by the per-word head-line pipeline.
// id_prefix seeds word ids, e.g. "scan07/" gives "scan07/L0W0".
inline PageResult run_page(const BinaryImage& page, const PipelineParams& params = {},
                           const std::string& id_prefix = "") {
    PageResult out;
    out.page = segment_page(page, params.page);

    int line_index = -1;
    int word_in_line = 0;
    for (const WordBox& box : out.page.words) {
        if (box.line_index != line_index) {
            line_index = box.line_index;
            word_in_line = 0;
        }
        WordResult wr;
        wr.id = id_prefix + "L" + std::to_string(line_index) + "W" + std::to_string(word_in_line);
        ++word_in_line;
        wr.box = box;

        BinaryImage word = crop(page, Rect{box.left, box.top, box.right, box.bottom});
        wr.regions = format_regions(0, word.height() - 1);
        wr.headline = estimate_headline(word, wr.regions, params.w);
        if (wr.headline) {
            FeatureMatrix features = compute_features(word, wr.regions, *wr.headline);
            WeightProfile weights = weightage(features, params.seg.alphas);
            wr.strips = find_cut_strips(weights, params.seg.delta, params.seg.min_strip);
            for (const CutStrip& s : wr.strips) wr.cut_columns.push_back((s.left + s.right) / 2);
        }
        wr.segments = segment_word(word, wr.regions, wr.headline, params.seg);
        out.words.push_back(std::move(wr));
    }
    return out;
}

} // namespace lipiseg
