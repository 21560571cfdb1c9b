#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "forestlab/certify.hpp"

namespace forestlab {

// Exact evaluation of the nested-equivalence counting argument: for an
// ordered family of forests F_n(a_1,b_1), ..., with a_i*b_i non-decreasing,
// the encoder must introduce at least
//   n - sum_{j<i} min(a_j,a_i) * min(b_j,b_i) * n/(a_i*b_i)
// distinct labels at step i. Each theorem instantiates its own family
// ordering and closed-form floor; both sides are computed in exact integer /
// rational arithmetic and compared in the stated direction.
struct CountingRow {
    std::size_t a = 0, b = 0;   // the row's forest parameters
    BigInt direct;              // the exact double-sum lower bound
    BigRational closed;         // the closed-form floor
    bool strict = false;        // direction: direct > closed (else >=)
    bool ok = false;
};

struct CountingReport {
    FamilyKind kind;
    std::size_t n = 0;
    std::size_t x = 0;
    std::string closed_expr;
    std::vector<CountingRow> rows;
    BigInt total;  // sum of per-row direct bounds
    bool all_ok = true;
};

// Warmup / Thm6: n a power of 3 (x ignored, fixed at 3); families
// {F_n(3^j, 1)} and {F_n(3^j, n/3^j)}, floor n/2, strict.
// Thm7 / Thm8: n a power of x; family {(x^a, x^b) : a+b <= log_x n} in
// (a+b, b)-ascending order, floor n * (1 - (3x+1)/(x-1)^2), non-strict
// (Thm8 runs the identical arithmetic for the path-built G-family).
CountingReport counting_oracle(FamilyKind kind, std::size_t n, std::size_t x);

}  // namespace forestlab
