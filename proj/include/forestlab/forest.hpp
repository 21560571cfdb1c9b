#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forestlab/errors.hpp"

namespace forestlab {

// Dense internal node id, 0..n-1 in insertion order.
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

enum class QueryKind : std::uint8_t {
    Adjacency,
    Sibling,
    Connectivity,
    Ancestry,
    Nca,
    Distance,
    Routing,
};

std::string_view query_name(QueryKind q);
QueryKind parse_query(std::string_view name);

// Small set of QueryKind values.
class QuerySet {
public:
    constexpr QuerySet() = default;
    constexpr QuerySet(std::initializer_list<QueryKind> qs) {
        for (QueryKind q : qs) insert(q);
    }
    constexpr void insert(QueryKind q) { mask_ |= bit(q); }
    constexpr bool contains(QueryKind q) const { return mask_ & bit(q); }
    constexpr bool contains_all(QuerySet s) const {
        return (mask_ & s.mask_) == s.mask_;
    }
    constexpr QuerySet with(QueryKind q) const {
        QuerySet s = *this;
        s.insert(q);
        return s;
    }
    std::vector<QueryKind> to_list() const;
    std::string to_csv() const;
    static QuerySet from_csv(std::string_view csv);

private:
    static constexpr std::uint8_t bit(QueryKind q) {
        return static_cast<std::uint8_t>(1u << static_cast<unsigned>(q));
    }
    std::uint8_t mask_ = 0;
};

// Immutable rooted forest with ground-truth oracles for every query the
// labeling schemes answer. Node ids are dense and follow insertion order;
// a node's parent always has a smaller id. Children are kept in insertion
// order, which also defines routing ports (0 to the parent, children
// numbered from 1).
class RootedForest {
public:
    // parents[i] == kNoNode marks a root; otherwise parents[i] < i.
    static RootedForest from_parents(std::span<const NodeId> parents);

    std::size_t size() const { return parent_.size(); }
    NodeId parent(NodeId v) const { return parent_[check(v)]; }
    bool is_root(NodeId v) const { return parent_[check(v)] == kNoNode; }
    const std::vector<NodeId>& children(NodeId v) const { return children_[check(v)]; }
    const std::vector<NodeId>& roots() const { return roots_; }
    NodeId root_of(NodeId v) const { return root_of_[check(v)]; }
    std::uint32_t depth(NodeId v) const { return depth_[check(v)]; }
    // Index of v's tree among roots(), in root insertion order.
    std::uint32_t tree_index(NodeId v) const { return tree_index_[check(v)]; }
    std::uint32_t pre_order(NodeId v) const { return pre_[check(v)]; }
    std::uint32_t post_order(NodeId v) const { return post_[check(v)]; }

    // --- ground-truth oracles ---
    bool adjacent(NodeId u, NodeId v) const;
    // A node is a sibling to itself; two distinct roots are not siblings.
    bool sibling(NodeId u, NodeId v) const;
    bool connected(NodeId u, NodeId v) const;
    // True iff u lies on the path from v's root to v (reflexive).
    bool ancestor_of(NodeId u, NodeId v) const;
    // Throw CrossTreeError when u and v lie in different trees.
    NodeId nca(NodeId u, NodeId v) const;
    std::uint32_t distance(NodeId u, NodeId v) const;
    // Port at u of the first edge on the path u -> v; 0 leads to the parent,
    // children get ports 1,2,... in insertion order. routing(u, u) == 0.
    std::uint32_t routing_port(NodeId u, NodeId v) const;

    // Boolean queries under one entry point (Adjacency, Sibling,
    // Connectivity, Ancestry). Others throw UnsupportedQueryError.
    bool query_bool(QueryKind q, NodeId u, NodeId v) const;

private:
    NodeId check(NodeId v) const {
        if (v >= parent_.size()) throw OutOfRangeError("node id out of range");
        return v;
    }

    std::vector<NodeId> parent_;
    std::vector<std::vector<NodeId>> children_;
    std::vector<NodeId> roots_;
    std::vector<NodeId> root_of_;
    std::vector<std::uint32_t> depth_;
    std::vector<std::uint32_t> tree_index_;
    std::vector<std::uint32_t> pre_, post_;  // forest DFS numbering, 0..2n-1
    std::vector<std::uint32_t> port_;        // port at parent toward this node
};

}  // namespace forestlab
