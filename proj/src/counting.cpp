#include "forestlab/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace forestlab {

namespace {

// log_x(n) when n is an exact power of x; InvalidParamsError otherwise.
std::size_t exact_log(std::size_t n, std::size_t x) {
    std::size_t t = 0, v = 1;
    while (v < n) {
        v *= x;
        ++t;
    }
    if (v != n) throw InvalidParamsError("n must be a power of the base");
    return t;
}

BigInt ipow(std::size_t base, std::size_t e) {
    BigInt r = 1;
    while (e--) r *= base;
    return r;
}

// The per-row double sum, exact. Divisibility a_i*b_i | n holds for every
// family used here, so each term is an integer.
BigInt direct_bound(const std::vector<std::pair<BigInt, BigInt>>& family,
                    std::size_t i, std::size_t n) {
    const auto& [ai, bi] = family[i];
    BigInt prod = ai * bi;
    BigInt reused = 0;
    for (std::size_t j = 0; j < i; ++j) {
        const auto& [aj, bj] = family[j];
        BigInt term = std::min(aj, ai) * std::min(bj, bi) * n;
        if (term % prod != 0) throw std::logic_error("non-integer reuse term");
        reused += term / prod;
    }
    return BigInt(n) - reused;
}

}  // namespace

CountingReport counting_oracle(FamilyKind kind, std::size_t n, std::size_t x) {
    CountingReport rep;
    rep.kind = kind;
    rep.n = n;

    std::vector<std::pair<BigInt, BigInt>> family;
    std::vector<std::pair<std::size_t, std::size_t>> names;
    BigRational closed;
    bool strict = false;

    switch (kind) {
        case FamilyKind::Warmup:
        case FamilyKind::Thm6: {
            rep.x = 3;
            std::size_t t = exact_log(n, 3);
            for (std::size_t j = 0; j <= t; ++j) {
                BigInt a = ipow(3, j);
                BigInt b = (kind == FamilyKind::Warmup) ? BigInt(1) : BigInt(n) / a;
                family.emplace_back(a, b);
                names.emplace_back(j, 0);
            }
            closed = BigRational(BigInt(n), 2);
            rep.closed_expr = "n/2";
            strict = true;
            break;
        }
        case FamilyKind::Thm7:
        case FamilyKind::Thm8: {
            if (x < 2) throw InvalidParamsError("x must be >= 2");
            rep.x = x;
            std::size_t t = exact_log(n, x);
            // (a+b, b)-ascending: e_0^0, e_1^0, e_0^1, e_2^0, e_1^1, ...
            for (std::size_t s = 0; s <= t; ++s)
                for (std::size_t b = 0; b <= s; ++b) {
                    std::size_t a = s - b;
                    family.emplace_back(ipow(x, a), ipow(x, b));
                    names.emplace_back(a, b);
                }
            BigRational frac(BigInt(3 * x + 1), BigInt(x - 1) * BigInt(x - 1));
            closed = BigRational(BigInt(n)) * (BigRational(1) - frac);
            rep.closed_expr = "n*(1-(3x+1)/(x-1)^2)";
            strict = false;
            break;
        }
        default:
            throw InvalidParamsError("family has no counting oracle");
    }

    rep.total = 0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        CountingRow row;
        row.a = names[i].first;
        row.b = names[i].second;
        row.direct = direct_bound(family, i, n);
        row.closed = closed;
        row.strict = strict;
        BigRational d(row.direct);
        row.ok = strict ? (d > closed) : (d >= closed);
        rep.total += row.direct;
        rep.all_ok = rep.all_ok && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace forestlab
