#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "forestlab/bitmath.hpp"
#include "forestlab/forest.hpp"
#include "forestlab/label.hpp"

namespace forestlab {

// Self-delimiting code for a 1-based rank i <= n, decodable knowing only n.
// Layout: a width-class field of exactly loglog(n) bits holding
// s = min(floor(log2 i), 2^loglog(n) - 1), then i - 2^s in c_width(n, s)
// bits (the leading 1 of i's binary form is implicit; the top class
// saturates). Total bits never exceed loglog(n) + ceil_log2(n) + 1 minus the
// in-class payload budget; see the sorted schemes and the connectivity
// wrapper for the exact accounting.
struct RankCode {
    static unsigned sep_width(std::size_t n) { return loglog(n); }
    static unsigned num_classes(std::size_t n) { return 1u << sep_width(n); }
    static unsigned width_class(std::size_t rank, std::size_t n);
    static unsigned c_width(std::size_t n, unsigned width_class);
    static void append(Label& l, std::size_t rank, std::size_t n);

    struct Decoded {
        std::size_t rank;
        std::size_t bits;  // sep + C bits consumed
    };
    static Decoded read(const Label& l, std::size_t offset, std::size_t n);
};

// A named encoder/decoder pair. Every emitted label has exactly
// label_width(capacity) bits, where `capacity` is the global parameter the
// decoder is allowed to know (by default the forest's node count; the
// connectivity wrapper encodes subtrees against larger capacities).
class StaticScheme {
public:
    virtual ~StaticScheme() = default;

    const std::string& name() const { return name_; }
    QuerySet queries() const { return queries_; }
    bool unique_labels() const { return unique_; }

    virtual std::size_t label_width(std::size_t capacity) const = 0;

    std::vector<Label> encode(const RootedForest& f) const {
        return encode_with_capacity(f, f.size());
    }
    // Requires f.size() <= capacity.
    virtual std::vector<Label> encode_with_capacity(const RootedForest& f,
                                                    std::size_t capacity) const = 0;

    // Pure function of the two labels and `capacity`. Throws
    // UnsupportedQueryError / WidthMismatchError.
    virtual bool decode(QueryKind q, const Label& a, const Label& b,
                        std::size_t capacity) const = 0;

protected:
    StaticScheme(std::string name, QuerySet queries, bool unique)
        : name_(std::move(name)), queries_(queries), unique_(unique) {}
    void check_decode_args(QueryKind q, const Label& a, const Label& b,
                           std::size_t capacity) const;

private:
    std::string name_;
    QuerySet queries_;
    bool unique_;
};

// Pair labels (Id(v), Id(parent(v))), roots storing their own id; two equal
// fields of width max(1, ceil_log2(capacity)). Adjacency: exactly one label
// names the other's id. Sibling: equal parent fields and matching root flags.
class KannanScheme final : public StaticScheme {
public:
    KannanScheme();
    std::size_t label_width(std::size_t capacity) const override;
    std::vector<Label> encode_with_capacity(const RootedForest& f,
                                            std::size_t capacity) const override;
    bool decode(QueryKind q, const Label& a, const Label& b,
                std::size_t capacity) const override;
};

// DFS interval labels (pre, post), two fields of width ceil_log2(2*capacity).
// u is an ancestor of v iff u's interval contains v's.
class IntervalAncestryScheme final : public StaticScheme {
public:
    IntervalAncestryScheme();
    std::size_t label_width(std::size_t capacity) const override;
    std::vector<Label> encode_with_capacity(const RootedForest& f,
                                            std::size_t capacity) const override;
    bool decode(QueryKind q, const Label& a, const Label& b,
                std::size_t capacity) const override;
};

// Size-sorted connectivity labels: [rank code of the tree, trees sorted by
// size] . [index within tree] . padding, ceil_log2(n) + loglog(n) + 1 bits
// total. Connectivity iff equal ranks; labels are unique.
class SortedConnectivityScheme final : public StaticScheme {
public:
    SortedConnectivityScheme();
    std::size_t label_width(std::size_t capacity) const override;
    std::vector<Label> encode_with_capacity(const RootedForest& f,
                                            std::size_t capacity) const override;
    bool decode(QueryKind q, const Label& a, const Label& b,
                std::size_t capacity) const override;
};

// The same size-sorting device applied to sibling groups (children sets per
// parent, plus one singleton group per root). Unique variant appends the
// index within the group; the non-unique variant stores only a fixed-width
// group rank (all members of a group share one label).
class SortedSiblingScheme final : public StaticScheme {
public:
    explicit SortedSiblingScheme(bool unique);
    std::size_t label_width(std::size_t capacity) const override;
    std::vector<Label> encode_with_capacity(const RootedForest& f,
                                            std::size_t capacity) const override;
    bool decode(QueryKind q, const Label& a, const Label& b,
                std::size_t capacity) const override;
};

// Adds connectivity support to any within-tree scheme for
// loglog n + 1 extra bits: [rank code of the tree] . [inner label encoded
// against capacity floor(n / rank)] . padding. Registration verifies the
// inner size function numerically: S non-decreasing and
// S(a) - S(b) >= ceil_log2(a) - ceil_log2(b) - 2 for all b <= a <= 2^20.
class ConnectivityWrapper final : public StaticScheme {
public:
    explicit ConnectivityWrapper(std::shared_ptr<const StaticScheme> inner);
    std::size_t label_width(std::size_t capacity) const override;
    std::vector<Label> encode_with_capacity(const RootedForest& f,
                                            std::size_t capacity) const override;
    bool decode(QueryKind q, const Label& a, const Label& b,
                std::size_t capacity) const override;
    const StaticScheme& inner() const { return *inner_; }

private:
    std::shared_ptr<const StaticScheme> inner_;
};

// Scheme names accepted by the CLI: adj-sib-kannan, anc-interval,
// conn-sorted, sib-sorted, sib-sorted-nonunique, wrap:<inner>.
std::shared_ptr<const StaticScheme> make_static_scheme(std::string_view name);
// The canonical set (plain schemes plus their wrap: combinations).
const std::vector<std::string>& static_scheme_names();

}  // namespace forestlab
