#include <catch2/catch_amalgamated.hpp>

#include "lipiseg/page.hpp"
#include "lipiseg/synth.hpp"
#include "support.hpp"

using namespace lipiseg;

TEST_CASE("two separated ink blocks become two line bands") {
    BinaryImage img = testutil::image_from_strings({
        "....",
        "####",
        "####",
        "....",
        "....",
        "####",
        "....",
    });
    std::vector<LineBand> bands = segment_lines(img, 2);
    REQUIRE(bands.size() == 2);
    CHECK(bands[0] == LineBand{1, 2});
    CHECK(bands[1] == LineBand{5, 5});
}

TEST_CASE("all-white page yields no lines and no words") {
    BinaryImage img(40, 30);
    PageSegmentation seg = segment_page(img);
    CHECK(seg.lines.empty());
    CHECK(seg.words.empty());
}

TEST_CASE("line segmentation parameters are validated") {
    BinaryImage img(10, 10);
    CHECK_THROWS_AS(segment_lines(img, 0), std::invalid_argument);
    CHECK_THROWS_AS(segment_lines(img, 1, 0), std::invalid_argument);
}

TEST_CASE("smoothing bridges a one-row dip inside a line") {
    BinaryImage img = testutil::image_from_strings({
        "####",
        "....",
        "####",
    });
    CHECK(segment_lines(img, 1).size() == 2);
    std::vector<LineBand> bridged = segment_lines(img, 1, 3);
    REQUIRE(bridged.size() == 1);
    CHECK(bridged[0] == LineBand{0, 2});
}

TEST_CASE("raising k1 never widens the rows covered by line bands") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 250; ++trial) {
        BinaryImage img = testutil::random_binary(rng, 24, 18, 0.3);
        int prev = -1;
        for (int k1 = 1; k1 <= 6; ++k1) {
            int covered = 0;
            for (const LineBand& b : segment_lines(img, k1)) covered += b.height();
            if (prev >= 0) CHECK(covered <= prev);
            prev = covered;
        }
    }
}

TEST_CASE("words split on wide gaps and merge across narrow ones") {
    BinaryImage img = testutil::image_from_strings({
        "###.......##",
        "###.......##",
    });
    LineBand line{0, 1};
    std::vector<WordBox> split = segment_words(img, line, 1, 3);
    REQUIRE(split.size() == 2);
    CHECK(split[0].left == 0);
    CHECK(split[0].right == 2);
    CHECK(split[1].left == 10);
    CHECK(split[1].right == 11);

    std::vector<WordBox> merged = segment_words(img, line, 1, 8);
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].left == 0);
    CHECK(merged[0].right == 11);
}

TEST_CASE("word boxes tighten rows to the ink") {
    BinaryImage img = testutil::image_from_strings({
        "....",
        ".##.",
        "....",
    });
    std::vector<WordBox> words = segment_words(img, LineBand{0, 2}, 1, 3);
    REQUIRE(words.size() == 1);
    CHECK(words[0].top == 1);
    CHECK(words[0].bottom == 1);
}

TEST_CASE("word segmentation parameters are validated") {
    BinaryImage img(10, 10);
    CHECK_THROWS_AS(segment_words(img, LineBand{0, 9}, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(segment_words(img, LineBand{0, 9}, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(segment_words(img, LineBand{0, 10}, 1, 3), std::out_of_range);
}

TEST_CASE("every word box contains ink and boxes never overlap") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        BinaryImage img = testutil::random_binary(rng, 30, 20, 0.25);
        PageSegmentation seg = segment_page(img, PageParams{1, 1, 3, 1});
        int prev_right = -1;
        int prev_line = -1;
        for (const WordBox& w : seg.words) {
            CHECK(w.width() >= 1);
            CHECK(w.height() >= 1);
            bool has_ink = false;
            for (int y = w.top; y <= w.bottom && !has_ink; ++y)
                for (int x = w.left; x <= w.right && !has_ink; ++x) has_ink = img.at(x, y);
            CHECK(has_ink);
            if (w.line_index == prev_line) CHECK(w.left > prev_right);
            prev_right = w.right;
            prev_line = w.line_index;
        }
    }
}

TEST_CASE("word boxes keep all ink of their line") {
    // Union of word columns must hold every ink pixel of the line band when
    // k2 = 1 (no column is below threshold).
    std::mt19937 rng(161);
    for (int trial = 0; trial < 100; ++trial) {
        BinaryImage img = testutil::random_binary(rng, 24, 12, 0.3);
        for (const LineBand& line : segment_lines(img, 1)) {
            std::vector<WordBox> words = segment_words(img, line, 1, 3);
            for (int y = line.top; y <= line.bottom; ++y)
                for (int x = 0; x < img.width(); ++x) {
                    if (!img.at(x, y)) continue;
                    bool covered = false;
                    for (const WordBox& w : words)
                        if (x >= w.left && x <= w.right) covered = true;
                    CHECK(covered);
                }
        }
    }
}

TEST_CASE("segmentation shifts with the page") {
    std::mt19937 rng(505);
    BinaryImage img = testutil::random_binary(rng, 20, 14, 0.35);
    BinaryImage padded = testutil::pad_image(img, 4);
    PageParams params{2, 1, 3, 1}; // fixed k1 so the wider page uses the same threshold
    PageSegmentation a = segment_page(img, params);
    PageSegmentation b = segment_page(padded, params);
    REQUIRE(a.lines.size() == b.lines.size());
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
        CHECK(b.lines[i].top == a.lines[i].top + 4);
        CHECK(b.lines[i].bottom == a.lines[i].bottom + 4);
    }
    REQUIRE(a.words.size() == b.words.size());
    for (std::size_t i = 0; i < a.words.size(); ++i) {
        CHECK(b.words[i].left == a.words[i].left + 4);
        CHECK(b.words[i].right == a.words[i].right + 4);
        CHECK(b.words[i].top == a.words[i].top + 4);
        CHECK(b.words[i].bottom == a.words[i].bottom + 4);
    }
}

TEST_CASE("default segmentation recovers generated pages exactly") {
    SynthParams params;
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        SynthPage page = synth_page(params, rng);
        PageSegmentation seg = segment_page(page.image);

        REQUIRE(seg.lines.size() == page.lines.size());
        for (std::size_t i = 0; i < seg.lines.size(); ++i) {
            CHECK(seg.lines[i].top == page.lines[i].top);
            CHECK(seg.lines[i].bottom == page.lines[i].bottom);
        }
        REQUIRE(seg.words.size() == page.words.size());
        for (std::size_t i = 0; i < seg.words.size(); ++i) {
            const WordBox& got = seg.words[i];
            const Rect& want = page.words[i].box;
            CHECK(got.left == want.x0);
            CHECK(got.top == want.y0);
            CHECK(got.right == want.x1);
            CHECK(got.bottom == want.y1);
        }
    }
}
