#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forestlab/events.hpp"
#include "forestlab/graph.hpp"

namespace forestlab {

enum class FamilyKind : std::uint8_t { Fn, FnC, In, A2, Fab, Gab, Warmup, Thm6, Thm7, Thm8 };

std::string_view family_name(FamilyKind k);
FamilyKind parse_family(std::string_view name);

struct FamilySpec {
    FamilyKind kind;
    std::size_t n = 0;
    std::optional<std::int64_t> k, j, a, b, x;
};

// --- single-member generators ---
// Tokens are decimal insertion indexes "0", "1", ...

// Path of k nodes (insertion order along the path), then n-k leaves attached
// to the second-to-last path node. 1 < k <= n.
EventSequence gen_fn(std::size_t n, std::size_t k);

// k single-node trees, then n-k children of the last root. 1 < k <= n.
EventSequence gen_fnc(std::size_t n, std::size_t k);

// j single-node trees, a k-node path hanging under the last root, then
// n-j-k leaves on the path's second-to-last node (the root itself for k=1).
// j >= 1, k >= 1, j+k < n.
EventSequence gen_in(std::size_t n, std::size_t j, std::size_t k);

// Path of n-1 nodes, then one node v adjacent to the path positions whose
// (1-based) numbers are in the subset; bit m-1 of `subset` selects position
// m. subset in [1, 2^(n-1) - 1]. Arboricity 2: a path plus a star at v.
GraphEventSequence gen_a2(std::size_t n, std::uint64_t subset);

// a components, each: a root, then b chained sibling groups of n/(ab) nodes
// (group 1 under the root, group i under the first member of group i-1).
// Exactly b uniform groups per component; a + n nodes total. ab | n.
BuiltForest gen_fab(std::size_t n, std::size_t a, std::size_t b);

// a components, each a root with b attached paths of n/(ab) nodes. ab | n.
BuiltForest gen_gab(std::size_t n, std::size_t a, std::size_t b);

// --- full-family enumerators (certification input) ---

// k = 2..n; the k = n member carries the shared path/forest prefix labels.
std::vector<EventSequence> family_fn(std::size_t n);
std::vector<EventSequence> family_fnc(std::size_t n);

struct InParams {
    std::size_t j, k;
};
std::vector<std::pair<InParams, EventSequence>> family_in(std::size_t n);

}  // namespace forestlab
