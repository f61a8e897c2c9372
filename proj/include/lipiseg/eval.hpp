#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipiseg/annotation.hpp"

namespace lipiseg {

struct EvalReport {
    int total_gt = 0;
    int matched = 0;
    int spurious = 0;
    double success_rate = 1.0; // matched / total_gt, 1.0 when there is no ground truth
    double precision = 1.0;    // matched / predictions, 1.0 when there are no predictions
    int tolerance = 0;
};

namespace detail {

// Greedy nearest-first matching inside one word: among all remaining
// (gt, prediction) pairs within tolerance, the closest pair matches next;
// distance ties prefer the earlier gt record, then the earlier prediction.
inline int match_word(const std::vector<int>& pred, const std::vector<int>& gt, int tolerance) {
    struct Pair {
        int dist;
        int gi;
        int pi;
    };
    std::vector<Pair> pairs;
    for (int gi = 0; gi < static_cast<int>(gt.size()); ++gi)
        for (int pi = 0; pi < static_cast<int>(pred.size()); ++pi) {
            int dist = std::abs(gt[static_cast<std::size_t>(gi)] - pred[static_cast<std::size_t>(pi)]);
            if (dist <= tolerance) pairs.push_back(Pair{dist, gi, pi});
        }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.dist != b.dist) return a.dist < b.dist;
        if (a.gi != b.gi) return a.gi < b.gi;
        return a.pi < b.pi;
    });
    std::vector<bool> gt_used(gt.size(), false);
    std::vector<bool> pred_used(pred.size(), false);
    int matched = 0;
    for (const Pair& p : pairs) {
        if (gt_used[static_cast<std::size_t>(p.gi)] || pred_used[static_cast<std::size_t>(p.pi)])
            continue;
        gt_used[static_cast<std::size_t>(p.gi)] = true;
        pred_used[static_cast<std::size_t>(p.pi)] = true;
        ++matched;
    }
    return matched;
}

} // namespace detail

// Cuts match only within the same word_id; each ground-truth cut and each
// prediction is used at most once.
inline EvalReport evaluate_cuts(const std::vector<CutAnnotation>& predicted,
                                const std::vector<CutAnnotation>& gt, int tolerance = 3) {
    if (tolerance < 0) throw std::invalid_argument("tolerance must be >= 0");

    std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> by_word;
    for (const CutAnnotation& c : predicted) by_word[c.word_id].first.push_back(c.cut_x);
    for (const CutAnnotation& c : gt) by_word[c.word_id].second.push_back(c.cut_x);

    EvalReport report;
    report.tolerance = tolerance;
    report.total_gt = static_cast<int>(gt.size());
    for (const auto& [id, lists] : by_word)
        report.matched += detail::match_word(lists.first, lists.second, tolerance);
    report.spurious = static_cast<int>(predicted.size()) - report.matched;
    report.success_rate =
        report.total_gt > 0 ? static_cast<double>(report.matched) / report.total_gt : 1.0;
    report.precision =
        !predicted.empty() ? static_cast<double>(report.matched) / static_cast<double>(predicted.size())
                           : 1.0;
    return report;
}

} // namespace lipiseg
