#pragma once

namespace lipiseg {

struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
};

// Inclusive row interval.
struct RowSpan {
    int top = 0;
    int bottom = -1;
    int height() const { return bottom - top + 1; }
    bool contains(int row) const { return row >= top && row <= bottom; }
    friend bool operator==(const RowSpan&, const RowSpan&) = default;
};

// Inclusive column interval.
struct ColSpan {
    int left = 0;
    int right = -1;
    int width() const { return right - left + 1; }
    bool contains(int col) const { return col >= left && col <= right; }
    friend bool operator==(const ColSpan&, const ColSpan&) = default;
};

// Inclusive pixel rectangle.
struct Rect {
    int x0 = 0;
    int y0 = 0;
    int x1 = -1;
    int y1 = -1;
    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }
    bool contains(int x, int y) const { return x >= x0 && x <= x1 && y >= y0 && y <= y1; }
    friend bool operator==(const Rect&, const Rect&) = default;
};

} // namespace lipiseg
