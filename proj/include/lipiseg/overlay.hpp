#pragma once

#include "lipiseg/pipeline.hpp"

namespace lipiseg {

// Diagnostic rendering: page ink on white, head-line bands tinted blue, cut
// strips tinted red, segment boxes outlined green. Colors are fixed so
// repeated runs produce identical files.
inline RgbImage render_page_overlay(const BinaryImage& page, const PageResult& result) {
    RgbImage out(page.width(), page.height());
    for (int y = 0; y < page.height(); ++y)
        for (int x = 0; x < page.width(); ++x) {
            std::uint8_t v = page.at(x, y) ? 0 : 255;
            out.set(x, y, v, v, v);
        }

    auto blend_blue = [&](int x, int y) {
        std::size_t i = out.index(x, y);
        out.rgb[i] = static_cast<std::uint8_t>(out.rgb[i] / 2);
        out.rgb[i + 1] = static_cast<std::uint8_t>(out.rgb[i + 1] / 2);
        out.rgb[i + 2] = static_cast<std::uint8_t>((out.rgb[i + 2] + 255) / 2);
    };
    auto blend_red = [&](int x, int y) {
        std::size_t i = out.index(x, y);
        out.rgb[i] = static_cast<std::uint8_t>((out.rgb[i] + 255) / 2);
        out.rgb[i + 1] = static_cast<std::uint8_t>(out.rgb[i + 1] / 2);
        out.rgb[i + 2] = static_cast<std::uint8_t>(out.rgb[i + 2] / 2);
    };

    for (const WordResult& wr : result.words) {
        if (wr.headline)
            for (int y = wr.box.top + wr.headline->rows.top;
                 y <= wr.box.top + wr.headline->rows.bottom; ++y)
                for (int x = wr.box.left; x <= wr.box.right; ++x) blend_blue(x, y);
        for (const CutStrip& s : wr.strips)
            for (int x = wr.box.left + s.left; x <= wr.box.left + s.right; ++x)
                for (int y = wr.box.top; y <= wr.box.bottom; ++y) blend_red(x, y);
    }

    const std::uint8_t gr = 0, gg = 200, gb = 0;
    for (const WordResult& wr : result.words)
        for (const Segment& s : wr.segments) {
            Rect b{wr.box.left + s.component.bbox.x0, wr.box.top + s.component.bbox.y0,
                   wr.box.left + s.component.bbox.x1, wr.box.top + s.component.bbox.y1};
            for (int x = b.x0; x <= b.x1; ++x) {
                out.set(x, b.y0, gr, gg, gb);
                out.set(x, b.y1, gr, gg, gb);
            }
            for (int y = b.y0; y <= b.y1; ++y) {
                out.set(b.x0, y, gr, gg, gb);
                out.set(b.x1, y, gr, gg, gb);
            }
        }
    return out;
}

} // namespace lipiseg
