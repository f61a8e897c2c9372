#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lipiseg/image.hpp"
#include "lipiseg/io.hpp"

namespace lipiseg {

// Parse failure in a PNM stream; offset is the byte position the parser
// rejected, which the message also names.
class PnmError : public std::runtime_error {
public:
    PnmError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte offset " + std::to_string(offset)),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

// Largest pixel count a PNM header may declare; blocks absurd allocations
// from hostile headers before any buffer is touched.
inline constexpr long long kMaxPnmPixels = 1LL << 28;

struct PnmCursor {
    std::string_view bytes;
    std::size_t pos = 0;

    bool eof() const { return pos >= bytes.size(); }

    void skip_space_and_comments() {
        while (!eof()) {
            char c = bytes[pos];
            if (c == '#') {
                while (!eof() && bytes[pos] != '\n') ++pos;
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f') {
                ++pos;
            } else {
                break;
            }
        }
    }

    long long next_int(const char* field) {
        skip_space_and_comments();
        std::size_t at = pos;
        if (eof()) throw PnmError(std::string("missing ") + field, at);
        bool negative = bytes[pos] == '-';
        if (negative) ++pos;
        if (eof() || bytes[pos] < '0' || bytes[pos] > '9')
            throw PnmError(std::string("malformed ") + field, at);
        long long v = 0;
        while (!eof() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            v = v * 10 + (bytes[pos] - '0');
            if (v > kMaxPnmPixels) throw PnmError(std::string(field) + " out of range", at);
            ++pos;
        }
        return negative ? -v : v;
    }
};

} // namespace detail

// P2 (ASCII) and P5 (binary) graymaps, maxval 1..255. Comments and arbitrary
// header whitespace are accepted; sample values are kept as stored.
inline GrayImage parse_pgm(std::string_view bytes) {
    detail::PnmCursor cur{bytes};
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5'))
        throw PnmError("unsupported or malformed PNM magic", 0);
    const bool ascii = bytes[1] == '2';
    cur.pos = 2;

    const long long width = cur.next_int("width");
    const long long height = cur.next_int("height");
    if (width < 1 || height < 1) throw PnmError("invalid image dimensions", cur.pos);
    if (width * height > detail::kMaxPnmPixels) throw PnmError("image dimensions too large", cur.pos);
    const long long maxval = cur.next_int("maxval");
    if (maxval < 1) throw PnmError("invalid maxval", cur.pos);
    if (maxval > 255) throw PnmError("maxval exceeds 8-bit range", cur.pos);

    const std::size_t count = static_cast<std::size_t>(width * height);
    std::vector<std::uint8_t> samples(count);

    if (ascii) {
        for (std::size_t i = 0; i < count; ++i) {
            cur.skip_space_and_comments();
            std::size_t at = cur.pos; // the value itself, not the separator before it
            long long v = cur.next_int("pixel value");
            if (v < 0 || v > maxval) throw PnmError("pixel value outside [0,maxval]", at);
            samples[i] = static_cast<std::uint8_t>(v);
        }
    } else {
        if (cur.eof()) throw PnmError("missing pixel data", cur.pos);
        ++cur.pos; // single whitespace byte separates maxval from raster
        if (bytes.size() - cur.pos < count)
            throw PnmError("truncated pixel data", bytes.size());
        for (std::size_t i = 0; i < count; ++i)
            samples[i] = static_cast<std::uint8_t>(bytes[cur.pos + i]);
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(samples));
}

inline GrayImage load_pgm(const std::filesystem::path& path) {
    return parse_pgm(read_file(path));
}

// Canonical binary form: "P5\n<w> <h>\n255\n" + raster.
inline std::string encode_pgm(const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) +
                      "\n255\n";
    out.append(reinterpret_cast<const char*>(img.samples().data()), img.samples().size());
    return out;
}

inline void save_pgm(const std::filesystem::path& path, const GrayImage& img) {
    write_file_atomic(path, encode_pgm(img));
}

inline std::string encode_ppm(const RgbImage& img) {
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) +
                      "\n255\n";
    out.append(reinterpret_cast<const char*>(img.rgb.data()), img.rgb.size());
    return out;
}

inline void save_ppm(const std::filesystem::path& path, const RgbImage& img) {
    write_file_atomic(path, encode_ppm(img));
}

inline GrayImage gray_from_binary(const BinaryImage& img) {
    GrayImage out(img.width(), img.height());
    for (int y = 0; y < img.height(); ++y)
        for (int x = 0; x < img.width(); ++x)
            out.set(x, y, img.at(x, y) ? 0 : 255);
    return out;
}

} // namespace lipiseg
