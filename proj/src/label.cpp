#include "forestlab/label.hpp"

#include <charconv>
#include <sstream>

#include "forestlab/bitmath.hpp"

namespace forestlab {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

unsigned hex_value(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw ParseError("bad hex digit in label");
}

}  // namespace

void Label::append_uint(std::uint64_t value, unsigned width) {
    if (width > 64) throw OverflowError("field width > 64");
    if (width < 64 && (value >> width) != 0)
        throw OverflowError("value does not fit in field width");
    if (width == 0) return;

    std::size_t pos = bit_len_ & 63;
    if (pos == 0) words_.push_back(0);
    std::size_t room = 64 - pos;  // free bits in the last word
    if (width <= room) {
        words_.back() |= (width == 64 ? value : (value << (room - width)));
    } else {
        unsigned tail = width - static_cast<unsigned>(room);
        words_.back() |= value >> tail;
        words_.push_back(tail == 0 ? 0 : (value << (64 - tail)));
    }
    bit_len_ += width;
}

std::uint64_t Label::read_uint(std::size_t offset, unsigned width) const {
    if (width > 64) throw OutOfRangeError("field width > 64");
    if (offset + width > bit_len_) throw OutOfRangeError("read past end of label");
    if (width == 0) return 0;

    std::size_t w = offset >> 6;
    std::size_t pos = offset & 63;
    std::size_t avail = 64 - pos;
    std::uint64_t head = (pos == 0) ? words_[w] : (words_[w] << pos);
    if (width <= avail) return head >> (64 - width);
    std::uint64_t hi = head >> (64 - width);
    std::uint64_t lo = words_[w + 1] >> (64 - (width - avail));
    return hi | lo;
}

void Label::append(const Label& y) {
    std::size_t full = y.bit_len_ >> 6;
    for (std::size_t i = 0; i < full; ++i) append_uint(y.words_[i], 64);
    unsigned rest = static_cast<unsigned>(y.bit_len_ & 63);
    if (rest != 0) append_uint(y.words_[full] >> (64 - rest), rest);
}

void Label::pad_to(std::size_t total) {
    if (bit_len_ > total) throw TooLongError("label longer than pad target");
    while (bit_len_ + 64 <= total) append_uint(0, 64);
    if (total > bit_len_) append_uint(0, static_cast<unsigned>(total - bit_len_));
}

bool Label::bit(std::size_t i) const {
    if (i >= bit_len_) throw OutOfRangeError("bit index past end of label");
    return (words_[i >> 6] >> (63 - (i & 63))) & 1u;
}

Label Label::slice(std::size_t offset, std::size_t width) const {
    if (offset + width > bit_len_) throw OutOfRangeError("slice past end of label");
    Label out;
    std::size_t pos = offset;
    while (pos < offset + width) {
        unsigned chunk = static_cast<unsigned>(std::min<std::size_t>(64, offset + width - pos));
        out.append_uint(read_uint(pos, chunk), chunk);
        pos += chunk;
    }
    return out;
}

Label Label::minimal_binary(std::uint64_t value) {
    if (value == 0) throw OverflowError("minimal_binary of zero");
    Label l;
    l.append_uint(value, floor_log2(value) + 1);
    return l;
}

std::string Label::to_hex() const {
    if (bit_len_ == 0) return "-";
    std::size_t nibbles = (bit_len_ + 3) / 4;
    std::string out;
    out.reserve(nibbles);
    for (std::size_t i = 0; i < nibbles; ++i) {
        std::uint64_t word = words_[(i * 4) >> 6];
        unsigned shift = 60 - static_cast<unsigned>((i * 4) & 63);
        out.push_back(kHexDigits[(word >> shift) & 0xF]);
    }
    return out;
}

Label Label::from_hex(std::string_view hex, std::size_t bit_len) {
    Label l;
    if (bit_len == 0) {
        if (hex != "-" && !hex.empty()) throw ParseError("empty label must use '-' hex");
        return l;
    }
    std::size_t nibbles = (bit_len + 3) / 4;
    if (hex.size() != nibbles) throw ParseError("hex length does not match bit_len");
    std::size_t remaining = bit_len;
    for (char c : hex) {
        unsigned v = hex_value(c);
        unsigned take = remaining >= 4 ? 4 : static_cast<unsigned>(remaining);
        if (take < 4 && (v & ((1u << (4 - take)) - 1)) != 0)
            throw ParseError("nonzero padding bits in last nibble");
        l.append_uint(v >> (4 - take), take);
        remaining -= take;
    }
    return l;
}

std::size_t Label::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ bit_len_;
    for (std::uint64_t w : words_) {
        h ^= w;
        h *= 0x100000001b3ull;
        h ^= h >> 32;
    }
    return static_cast<std::size_t>(h);
}

std::string format_label_line(const LabelLine& line) {
    std::ostringstream os;
    os << line.external_id << ' ' << line.label.bit_length() << ' '
       << line.label.to_hex();
    return os.str();
}

LabelLine parse_label_line(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string id, hex;
    std::size_t bits = 0;
    if (!(is >> id >> bits >> hex)) throw ParseError("bad label line");
    return LabelLine{id, Label::from_hex(hex, bits)};
}

}  // namespace forestlab
