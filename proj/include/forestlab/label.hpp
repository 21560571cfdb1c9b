#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "forestlab/errors.hpp"

namespace forestlab {

// A bit string of explicit length, MSB-first. Bit i (counted from the front)
// lives in word i/64 at position 63 - i%64; trailing bits of the last word
// are kept zero so word-wise comparison equals bit-wise comparison.
class Label {
public:
    Label() = default;

    std::size_t bit_length() const { return bit_len_; }
    bool empty() const { return bit_len_ == 0; }

    // Appends `value` as a big-endian field of exactly `width` bits.
    // Throws OverflowError if value does not fit (width <= 64).
    void append_uint(std::uint64_t value, unsigned width);

    // Reads `width` bits starting at `offset`. Throws OutOfRangeError if the
    // range exceeds the label.
    std::uint64_t read_uint(std::size_t offset, unsigned width) const;

    // Concatenation x = x . y.
    void append(const Label& y);

    // Appends zero bits until bit_length() == total. Throws TooLongError if
    // already longer.
    void pad_to(std::size_t total);

    bool bit(std::size_t i) const;

    // Copy of bits [offset, offset+width).
    Label slice(std::size_t offset, std::size_t width) const;

    // value >= 1 encoded without leading zeros (width = floor(log2)+1).
    static Label minimal_binary(std::uint64_t value);

    // Hex serialization, MSB-first, last nibble zero-padded. "-" for the
    // empty label.
    std::string to_hex() const;
    static Label from_hex(std::string_view hex, std::size_t bit_len);

    bool operator==(const Label& o) const {
        return bit_len_ == o.bit_len_ && words_ == o.words_;
    }
    // Total order: by length, then lexicographic on bits; consistent with
    // the serialized (bit_len, hex) form.
    std::strong_ordering operator<=>(const Label& o) const {
        if (auto c = bit_len_ <=> o.bit_len_; c != 0) return c;
        if (words_ < o.words_) return std::strong_ordering::less;
        if (o.words_ < words_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::size_t hash() const;

private:
    std::vector<std::uint64_t> words_;
    std::size_t bit_len_ = 0;
};

// One entry of a label file: `<external_id> <bit_len> <hex>`.
struct LabelLine {
    std::string external_id;
    Label label;
};

std::string format_label_line(const LabelLine& line);
LabelLine parse_label_line(std::string_view text);

}  // namespace forestlab

template <>
struct std::hash<forestlab::Label> {
    std::size_t operator()(const forestlab::Label& l) const { return l.hash(); }
};
