#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "forestlab/families.hpp"
#include "forestlab/static_schemes.hpp"

namespace forestlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Result of certifying a family's forced-distinct label count. The count is
// sound for ANY correct deterministic scheme supporting `queries`: each
// counted pair of (sequence, node) vertices either coexists in one sequence
// (unique labels force distinctness) or carries a verified witness node z in
// the sequences' shared prefix with differing query answers.
struct BoundCertificate {
    FamilySpec spec;
    QuerySet queries;
    std::uint64_t certified_count = 0;
    unsigned implied_bits = 0;  // ceil(log2(certified_count))
    std::string theory_expr;
    BigRational theory_value;
    std::uint64_t pairs_verified = 0;
    std::uint64_t witness_missing = 0;
    std::string note;
};

// Families Fn, FnC, In (tree events) and A2 (graphs). Queries are the
// boolean kinds the witness search may use.
BoundCertificate certify_forced_distinct(FamilyKind kind, std::size_t n,
                                         QuerySet queries);

// Runs the named dynamic encoder over every member sequence and returns the
// number of distinct labels emitted across the whole family; an upper
// cross-check for certify_forced_distinct.
std::uint64_t count_distinct_emitted(std::string_view encoder_name,
                                     FamilyKind kind, std::size_t n);

// Exact expected maximal label size of a deterministic encoder over the
// uniform family {F_n(k) : 1 < k < n/2}, and the exact lower-bound
// comparison E >= (1/|F|) * sum_i (log2 n + log2 i - 1), evaluated as the
// all-integer condition 2^(M+|F|) >= n^|F| * |F|! with M = sum of
// per-sequence maxima.
struct YaoReport {
    BigRational expected_max_bits;
    std::size_t family_size = 0;
    bool bound_holds = false;
};
YaoReport yao_expected_max(std::string_view encoder_name, std::size_t n);

// Measures pairwise label-set intersections of independently encoded
// forests F_n(a,b) (Fab) or G_n(a,b) (Gab) against the reuse bound
// min(a,c) * min(b,d) * n/(ab) for ab >= cd. All forests are encoded with
// capacity 2n, the family's node-count ceiling.
struct IntersectionViolation {
    std::pair<std::size_t, std::size_t> first, second;  // (a,b) with ab >= cd
    std::uint64_t measured = 0;
    std::uint64_t bound = 0;
};
struct IntersectionReport {
    std::size_t pairs_checked = 0;
    std::vector<IntersectionViolation> violations;
};
IntersectionReport lemma_intersection_check(
    const StaticScheme& scheme, std::size_t n,
    std::span<const std::pair<std::size_t, std::size_t>> params, FamilyKind kind);

// Default (a,b) grid for n: all pairs of divisors of the largest r with
// r*r | n (for n = 144 this is a,b in {1,2,3,4,6,12}).
std::vector<std::pair<std::size_t, std::size_t>> default_ab_grid(std::size_t n);

}  // namespace forestlab
