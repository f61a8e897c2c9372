#pragma once

#include <algorithm>
#include <vector>

#include "lipiseg/image.hpp"

namespace lipiseg {

enum class Connectivity { four, eight };

struct Component {
    int label = 0;              // 1-based, raster-scan order of the first pixel
    Rect bbox;
    int area = 0;
    std::vector<Point> pixels;  // raster order
    friend bool operator==(const Component&, const Component&) = default;
};

// Classic two-pass labeling with union-find over provisional labels.
// Final labels are renumbered by the raster position of each component's
// first pixel, which makes the output independent of merge order.
inline std::vector<Component> connected_components(const BinaryImage& img,
                                                   Connectivity conn = Connectivity::eight) {
    const int w = img.width();
    const int h = img.height();
    std::vector<int> label(static_cast<std::size_t>(w) * h, 0);
    std::vector<int> parent(1, 0); // parent[0] unused, labels start at 1

    auto find = [&](int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!img.at(x, y)) continue;
            int neighbors[4];
            int n = 0;
            if (x > 0 && label[static_cast<std::size_t>(y) * w + x - 1])
                neighbors[n++] = label[static_cast<std::size_t>(y) * w + x - 1];
            if (y > 0) {
                const std::size_t up = static_cast<std::size_t>(y - 1) * w + x;
                if (label[up]) neighbors[n++] = label[up];
                if (conn == Connectivity::eight) {
                    if (x > 0 && label[up - 1]) neighbors[n++] = label[up - 1];
                    if (x + 1 < w && label[up + 1]) neighbors[n++] = label[up + 1];
                }
            }
            int assigned;
            if (n == 0) {
                assigned = static_cast<int>(parent.size());
                parent.push_back(assigned);
            } else {
                assigned = find(neighbors[0]);
                for (int i = 1; i < n; ++i) assigned = std::min(assigned, find(neighbors[i]));
                for (int i = 0; i < n; ++i) unite(assigned, neighbors[i]);
            }
            label[static_cast<std::size_t>(y) * w + x] = assigned;
        }
    }

    // Second pass: map union-find roots to dense labels in raster order.
    std::vector<int> dense(parent.size(), 0);
    std::vector<Component> comps;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int l = label[static_cast<std::size_t>(y) * w + x];
            if (!l) continue;
            int root = find(l);
            if (!dense[root]) {
                dense[root] = static_cast<int>(comps.size()) + 1;
                comps.push_back(Component{dense[root], Rect{x, y, x, y}, 0, {}});
            }
            Component& c = comps[static_cast<std::size_t>(dense[root]) - 1];
            c.bbox.x0 = std::min(c.bbox.x0, x);
            c.bbox.y0 = std::min(c.bbox.y0, y);
            c.bbox.x1 = std::max(c.bbox.x1, x);
            c.bbox.y1 = std::max(c.bbox.y1, y);
            c.area += 1;
            c.pixels.push_back(Point{x, y});
        }
    }
    return comps;
}

} // namespace lipiseg
