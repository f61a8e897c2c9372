#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipiseg/geometry.hpp"
#include "lipiseg/io.hpp"

namespace lipiseg {

// Ground truth and reports share one line-oriented text format:
//   line <index> <top> <bottom>
//   word <id> <left> <top> <right> <bottom>
//   headline <id> <top> <bottom>
//   cut <id> <x>
// Blank lines and lines starting with '#' are skipped. line/word/headline
// coordinates are page coordinates; cut x is a column inside the word box.

struct LineRecord {
    int index = 0;
    RowSpan rows;
    friend bool operator==(const LineRecord&, const LineRecord&) = default;
};

struct WordRecord {
    std::string id;
    Rect box;
    friend bool operator==(const WordRecord&, const WordRecord&) = default;
};

struct HeadlineRecord {
    std::string id;
    RowSpan rows;
    friend bool operator==(const HeadlineRecord&, const HeadlineRecord&) = default;
};

struct CutAnnotation {
    std::string word_id;
    int cut_x = 0;
    friend bool operator==(const CutAnnotation&, const CutAnnotation&) = default;
};

struct AnnotationSet {
    std::vector<LineRecord> lines;
    std::vector<WordRecord> words;
    std::vector<HeadlineRecord> headlines;
    std::vector<CutAnnotation> cuts;
};

inline AnnotationSet parse_annotations(const std::string& text) {
    AnnotationSet set;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream fields(raw);
        std::string kind;
        if (!(fields >> kind) || kind[0] == '#') continue;

        auto fail = [&]() {
            throw std::runtime_error("annotation line " + std::to_string(line_no) +
                                     ": malformed record '" + raw + "'");
        };
        if (kind == "line") {
            LineRecord r;
            if (!(fields >> r.index >> r.rows.top >> r.rows.bottom)) fail();
            set.lines.push_back(r);
        } else if (kind == "word") {
            WordRecord r;
            if (!(fields >> r.id >> r.box.x0 >> r.box.y0 >> r.box.x1 >> r.box.y1)) fail();
            set.words.push_back(r);
        } else if (kind == "headline") {
            HeadlineRecord r;
            if (!(fields >> r.id >> r.rows.top >> r.rows.bottom)) fail();
            set.headlines.push_back(r);
        } else if (kind == "cut") {
            CutAnnotation r;
            if (!(fields >> r.word_id >> r.cut_x)) fail();
            set.cuts.push_back(r);
        } else {
            fail();
        }
    }
    return set;
}

inline std::string format_annotations(const AnnotationSet& set) {
    std::ostringstream out;
    for (const LineRecord& r : set.lines)
        out << "line " << r.index << " " << r.rows.top << " " << r.rows.bottom << "\n";
    for (const WordRecord& r : set.words)
        out << "word " << r.id << " " << r.box.x0 << " " << r.box.y0 << " " << r.box.x1 << " "
            << r.box.y1 << "\n";
    for (const HeadlineRecord& r : set.headlines)
        out << "headline " << r.id << " " << r.rows.top << " " << r.rows.bottom << "\n";
    for (const CutAnnotation& r : set.cuts) out << "cut " << r.word_id << " " << r.cut_x << "\n";
    return out.str();
}

inline AnnotationSet load_annotations(const std::filesystem::path& path) {
    return parse_annotations(read_file(path));
}

inline void save_annotations(const std::filesystem::path& path, const AnnotationSet& set) {
    write_file_atomic(path, format_annotations(set));
}

} // namespace lipiseg
