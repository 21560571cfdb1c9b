#include "forestlab/dynamic_schemes.hpp"

#include <algorithm>
#include <charconv>

namespace forestlab {

namespace {

// Shared pair decode rules: labels (id, parent), roots storing their own id.
bool pair_adjacent(std::uint64_t id1, std::uint64_t p1, std::uint64_t id2,
                   std::uint64_t p2) {
    return (p1 == id2) != (p2 == id1);
}

bool pair_sibling(std::uint64_t id1, std::uint64_t p1, std::uint64_t id2,
                  std::uint64_t p2) {
    return p1 == p2 && (id1 == p1) == (id2 == p2);
}

}  // namespace

Label DynamicEncoder::apply(const GraphEvent&) {
    throw InvalidEventError(name_ + " does not accept graph events");
}

std::vector<std::uint64_t> DynamicEncoder::unpack(const Label& l) const {
    if (l.bit_length() == 0 || l.bit_length() % fields_ != 0)
        throw WidthMismatchError("label width not a multiple of the field count");
    unsigned w = static_cast<unsigned>(l.bit_length() / fields_);
    std::vector<std::uint64_t> out(fields_);
    for (unsigned i = 0; i < fields_; ++i) out[i] = l.read_uint(i * std::size_t(w), w);
    return out;
}

void DynamicEncoder::check_query(QueryKind q) const {
    if (!queries_.contains(q))
        throw UnsupportedQueryError(name_ + " does not answer " +
                                    std::string(query_name(q)));
}

// --- DynPairEncoder ---

DynPairEncoder::DynPairEncoder()
    : DynamicEncoder("dyn-adj-sib",
                     QuerySet{QueryKind::Adjacency, QueryKind::Sibling}, 2) {}

std::optional<Label> DynPairEncoder::apply(const TopologicalEvent& e) {
    std::uint64_t id = replay_.apply(e);
    if (id == Replay::kNoSlot) return std::nullopt;
    unsigned w = width_at(id + 1);
    Label l;
    l.append_uint(id, w);
    l.append_uint(replay_.slot(id).parent, w);
    return l;
}

bool DynPairEncoder::decode(QueryKind q, const Label& a, const Label& b) const {
    check_query(q);
    auto fa = unpack(a), fb = unpack(b);
    if (q == QueryKind::Adjacency) return pair_adjacent(fa[0], fa[1], fb[0], fb[1]);
    return pair_sibling(fa[0], fa[1], fb[0], fb[1]);
}

// --- DynConnectivityEncoder ---

DynConnectivityEncoder::DynConnectivityEncoder()
    : DynamicEncoder("dyn-conn", QuerySet{QueryKind::Connectivity}, 2) {}

std::optional<Label> DynConnectivityEncoder::apply(const TopologicalEvent& e) {
    if (graph_mode_)
        throw InvalidEventError("cannot mix tree and graph events");
    tree_mode_ = true;
    std::uint64_t id = replay_.apply(e);
    if (id == Replay::kNoSlot) return std::nullopt;
    unsigned w = width_at(id + 1);
    Label l;
    l.append_uint(id, w);
    l.append_uint(replay_.slot(id).component, w);
    return l;
}

Label DynConnectivityEncoder::apply(const GraphEvent& e) {
    if (tree_mode_)
        throw InvalidEventError("cannot mix tree and graph events");
    graph_mode_ = true;
    if (graph_ids_.count(e.external_id))
        throw InvalidEventError("token already used: " + e.external_id);
    std::uint64_t comp = Replay::kNoSlot;
    for (const auto& t : e.neighbors) {
        auto it = graph_ids_.find(t);
        if (it == graph_ids_.end())
            throw InvalidEventError("edge to unknown node: " + t);
        std::uint64_t c = graph_component_[it->second];
        if (comp == Replay::kNoSlot) comp = c;
        if (c != comp)
            throw ComponentMergeError(
                "insertion of " + e.external_id +
                " would merge components; labels cannot be updated");
    }
    std::uint64_t id = graph_component_.size();
    if (comp == Replay::kNoSlot) comp = id;
    graph_ids_.emplace(e.external_id, id);
    graph_component_.push_back(comp);
    unsigned w = width_at(id + 1);
    Label l;
    l.append_uint(id, w);
    l.append_uint(comp, w);
    return l;
}

bool DynConnectivityEncoder::decode(QueryKind q, const Label& a, const Label& b) const {
    check_query(q);
    return unpack(a)[1] == unpack(b)[1];
}

// --- DynTripleEncoder ---

DynTripleEncoder::DynTripleEncoder()
    : DynamicEncoder("dyn-triple",
                     QuerySet{QueryKind::Adjacency, QueryKind::Sibling,
                              QueryKind::Connectivity},
                     3) {}

std::optional<Label> DynTripleEncoder::apply(const TopologicalEvent& e) {
    std::uint64_t id = replay_.apply(e);
    if (id == Replay::kNoSlot) return std::nullopt;
    unsigned w = width_at(id + 1);
    Label l;
    l.append_uint(id, w);
    l.append_uint(replay_.slot(id).parent, w);
    l.append_uint(replay_.slot(id).component, w);
    return l;
}

bool DynTripleEncoder::decode(QueryKind q, const Label& a, const Label& b) const {
    check_query(q);
    auto fa = unpack(a), fb = unpack(b);
    switch (q) {
        case QueryKind::Adjacency: return pair_adjacent(fa[0], fa[1], fb[0], fb[1]);
        case QueryKind::Sibling: return pair_sibling(fa[0], fa[1], fb[0], fb[1]);
        default: return fa[2] == fb[2];
    }
}

// --- DynBoundedDegreeEncoder ---

DynBoundedDegreeEncoder::DynBoundedDegreeEncoder(unsigned k)
    : DynamicEncoder("dyn-deg" + std::to_string(k),
                     QuerySet{QueryKind::Adjacency}, k + 1),
      k_(k) {
    if (k < 1) throw InvalidParamsError("degree bound must be >= 1");
}

std::optional<Label> DynBoundedDegreeEncoder::apply(const TopologicalEvent& e) {
    switch (e.kind) {
        case EventKind::InsertRoot: return apply(GraphEvent{e.external_id, {}});
        case EventKind::InsertChild:
            return apply(GraphEvent{e.external_id, {e.parent_external_id}});
        case EventKind::RemoveLeaf:
            throw InvalidEventError("bounded-degree encoder does not support removal");
    }
    throw InvalidEventError("unknown event kind");
}

Label DynBoundedDegreeEncoder::apply(const GraphEvent& e) {
    if (ids_.count(e.external_id))
        throw InvalidEventError("token already used: " + e.external_id);
    if (e.neighbors.size() > k_)
        throw DegreeExceededError(e.external_id + " arrives with more than " +
                                  std::to_string(k_) + " edges");
    std::vector<std::uint64_t> nbrs;
    for (const auto& t : e.neighbors) {
        auto it = ids_.find(t);
        if (it == ids_.end())
            throw InvalidEventError("edge to unknown node: " + t);
        if (degree_[it->second] + 1 > k_)
            throw DegreeExceededError("edge would push " + t +
                                      " past the degree bound");
        nbrs.push_back(it->second);
    }
    std::uint64_t id = degree_.size();
    for (std::uint64_t u : nbrs) ++degree_[u];
    degree_.push_back(static_cast<std::uint32_t>(nbrs.size()));
    ids_.emplace(e.external_id, id);

    unsigned w = width_at(id + 1);
    Label l;
    l.append_uint(id, w);
    for (std::uint64_t u : nbrs) l.append_uint(u, w);
    for (std::size_t i = nbrs.size(); i < k_; ++i) l.append_uint(id, w);
    return l;
}

bool DynBoundedDegreeEncoder::decode(QueryKind q, const Label& a, const Label& b) const {
    check_query(q);
    auto fa = unpack(a), fb = unpack(b);
    for (unsigned i = 1; i <= k_; ++i)
        if (fa[i] == fb[0] || fb[i] == fa[0]) return true;
    return false;
}

// --- registry ---

std::unique_ptr<DynamicEncoder> make_dynamic_encoder(std::string_view name) {
    if (name == "dyn-adj-sib") return std::make_unique<DynPairEncoder>();
    if (name == "dyn-conn") return std::make_unique<DynConnectivityEncoder>();
    if (name == "dyn-triple") return std::make_unique<DynTripleEncoder>();
    if (name.rfind("dyn-deg", 0) == 0) {
        unsigned k = 0;
        auto tail = name.substr(7);
        auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), k);
        if (ec == std::errc() && p == tail.data() + tail.size() && k >= 1)
            return std::make_unique<DynBoundedDegreeEncoder>(k);
    }
    throw ParseError("unknown dynamic scheme: " + std::string(name));
}

bool is_dynamic_scheme_name(std::string_view name) {
    return name.rfind("dyn-", 0) == 0;
}

const std::vector<std::string>& dynamic_scheme_names() {
    static const std::vector<std::string> names = {
        "dyn-adj-sib",
        "dyn-conn",
        "dyn-triple",
        "dyn-deg3",
    };
    return names;
}

}  // namespace forestlab
