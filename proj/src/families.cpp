#include "forestlab/families.hpp"

#include <stdexcept>

namespace forestlab {

namespace {

std::string tok(std::size_t i) { return std::to_string(i); }

void require(bool ok, const char* msg) {
    if (!ok) throw InvalidParamsError(msg);
}

}  // namespace

std::string_view family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::Fn: return "Fn";
        case FamilyKind::FnC: return "FnC";
        case FamilyKind::In: return "In";
        case FamilyKind::A2: return "A2";
        case FamilyKind::Fab: return "Fab";
        case FamilyKind::Gab: return "Gab";
        case FamilyKind::Warmup: return "Warmup";
        case FamilyKind::Thm6: return "Thm6";
        case FamilyKind::Thm7: return "Thm7";
        case FamilyKind::Thm8: return "Thm8";
    }
    return "?";
}

FamilyKind parse_family(std::string_view name) {
    for (FamilyKind k : {FamilyKind::Fn, FamilyKind::FnC, FamilyKind::In,
                         FamilyKind::A2, FamilyKind::Fab, FamilyKind::Gab,
                         FamilyKind::Warmup, FamilyKind::Thm6, FamilyKind::Thm7,
                         FamilyKind::Thm8}) {
        if (name == family_name(k)) return k;
    }
    throw ParseError("unknown family: " + std::string(name));
}

EventSequence gen_fn(std::size_t n, std::size_t k) {
    require(k > 1 && k <= n, "Fn requires 1 < k <= n");
    EventSequence seq;
    seq.events.push_back(TopologicalEvent::root(tok(0)));
    for (std::size_t i = 1; i < k; ++i)
        seq.events.push_back(TopologicalEvent::insert(tok(i), tok(i - 1)));
    for (std::size_t i = k; i < n; ++i)
        seq.events.push_back(TopologicalEvent::insert(tok(i), tok(k - 2)));
    seq.validate();
    return seq;
}

EventSequence gen_fnc(std::size_t n, std::size_t k) {
    require(k > 1 && k <= n, "FnC requires 1 < k <= n");
    EventSequence seq;
    for (std::size_t i = 0; i < k; ++i)
        seq.events.push_back(TopologicalEvent::root(tok(i)));
    for (std::size_t i = k; i < n; ++i)
        seq.events.push_back(TopologicalEvent::insert(tok(i), tok(k - 1)));
    seq.validate();
    return seq;
}

EventSequence gen_in(std::size_t n, std::size_t j, std::size_t k) {
    require(j >= 1 && k >= 1 && j + k < n, "In requires j,k >= 1 and j+k < n");
    EventSequence seq;
    for (std::size_t i = 0; i < j; ++i)
        seq.events.push_back(TopologicalEvent::root(tok(i)));
    seq.events.push_back(TopologicalEvent::insert(tok(j), tok(j - 1)));
    for (std::size_t i = j + 1; i < j + k; ++i)
        seq.events.push_back(TopologicalEvent::insert(tok(i), tok(i - 1)));
    std::size_t attach = (k >= 2) ? j + k - 2 : j - 1;
    for (std::size_t i = j + k; i < n; ++i)
        seq.events.push_back(TopologicalEvent::insert(tok(i), tok(attach)));
    seq.validate();
    return seq;
}

GraphEventSequence gen_a2(std::size_t n, std::uint64_t subset) {
    require(n >= 2 && n <= 64, "A2 requires 2 <= n <= 64");
    std::uint64_t limit = (std::uint64_t(1) << (n - 1)) - 1;
    require(subset >= 1 && subset <= limit, "A2 subset out of range");
    GraphEventSequence seq;
    seq.events.push_back({tok(0), {}});
    for (std::size_t i = 1; i + 1 < n; ++i) seq.events.push_back({tok(i), {tok(i - 1)}});
    GraphEvent v{tok(n - 1), {}};
    for (std::size_t m = 1; m < n; ++m)
        if (subset & (std::uint64_t(1) << (m - 1))) v.neighbors.push_back(tok(m - 1));
    seq.events.push_back(std::move(v));
    return seq;
}

namespace {

BuiltForest forest_from_parents(std::vector<NodeId> parents) {
    BuiltForest out;
    out.forest = RootedForest::from_parents(parents);
    for (NodeId v = 0; v < out.forest.size(); ++v) {
        out.tokens.push_back(tok(v));
        out.ids.emplace(out.tokens.back(), v);
    }
    return out;
}

}  // namespace

BuiltForest gen_fab(std::size_t n, std::size_t a, std::size_t b) {
    require(a >= 1 && b >= 1 && n >= 1, "Fab requires positive parameters");
    require(n % (a * b) == 0, "Fab requires ab | n");
    std::size_t s = n / (a * b);
    std::vector<NodeId> parents;
    for (std::size_t c = 0; c < a; ++c) {
        NodeId root = static_cast<NodeId>(parents.size());
        parents.push_back(kNoNode);
        NodeId group_parent = root;
        for (std::size_t g = 0; g < b; ++g) {
            NodeId first = static_cast<NodeId>(parents.size());
            for (std::size_t m = 0; m < s; ++m) parents.push_back(group_parent);
            group_parent = first;
        }
    }
    if (parents.size() < n || parents.size() > 2 * n)
        throw std::logic_error("Fab node count outside [n, 2n]");
    return forest_from_parents(std::move(parents));
}

BuiltForest gen_gab(std::size_t n, std::size_t a, std::size_t b) {
    require(a >= 1 && b >= 1 && n >= 1, "Gab requires positive parameters");
    require(n % (a * b) == 0, "Gab requires ab | n");
    std::size_t s = n / (a * b);
    std::vector<NodeId> parents;
    for (std::size_t c = 0; c < a; ++c) {
        NodeId root = static_cast<NodeId>(parents.size());
        parents.push_back(kNoNode);
        for (std::size_t p = 0; p < b; ++p) {
            NodeId prev = root;
            for (std::size_t m = 0; m < s; ++m) {
                NodeId cur = static_cast<NodeId>(parents.size());
                parents.push_back(prev);
                prev = cur;
            }
        }
    }
    if (parents.size() < n || parents.size() > 2 * n)
        throw std::logic_error("Gab node count outside [n, 2n]");
    return forest_from_parents(std::move(parents));
}

std::vector<EventSequence> family_fn(std::size_t n) {
    require(n >= 3, "Fn family requires n >= 3");
    std::vector<EventSequence> out;
    for (std::size_t k = 2; k <= n; ++k) out.push_back(gen_fn(n, k));
    return out;
}

std::vector<EventSequence> family_fnc(std::size_t n) {
    require(n >= 3, "FnC family requires n >= 3");
    std::vector<EventSequence> out;
    for (std::size_t k = 2; k <= n; ++k) out.push_back(gen_fnc(n, k));
    return out;
}

std::vector<std::pair<InParams, EventSequence>> family_in(std::size_t n) {
    require(n >= 3, "In family requires n >= 3");
    std::vector<std::pair<InParams, EventSequence>> out;
    for (std::size_t j = 1; j + 1 < n; ++j)
        for (std::size_t k = 1; j + k < n; ++k)
            out.push_back({{j, k}, gen_in(n, j, k)});
    return out;
}

}  // namespace forestlab
