#include "forestlab/forest.hpp"

#include <algorithm>
#include <sstream>

namespace forestlab {

std::string_view query_name(QueryKind q) {
    switch (q) {
        case QueryKind::Adjacency: return "Adjacency";
        case QueryKind::Sibling: return "Sibling";
        case QueryKind::Connectivity: return "Connectivity";
        case QueryKind::Ancestry: return "Ancestry";
        case QueryKind::Nca: return "NCA";
        case QueryKind::Distance: return "Distance";
        case QueryKind::Routing: return "Routing";
    }
    return "?";
}

QueryKind parse_query(std::string_view name) {
    for (QueryKind q : {QueryKind::Adjacency, QueryKind::Sibling,
                        QueryKind::Connectivity, QueryKind::Ancestry,
                        QueryKind::Nca, QueryKind::Distance, QueryKind::Routing}) {
        if (name == query_name(q)) return q;
    }
    throw ParseError("unknown query kind: " + std::string(name));
}

std::vector<QueryKind> QuerySet::to_list() const {
    std::vector<QueryKind> out;
    for (QueryKind q : {QueryKind::Adjacency, QueryKind::Sibling,
                        QueryKind::Connectivity, QueryKind::Ancestry,
                        QueryKind::Nca, QueryKind::Distance, QueryKind::Routing}) {
        if (contains(q)) out.push_back(q);
    }
    return out;
}

std::string QuerySet::to_csv() const {
    std::string out;
    for (QueryKind q : to_list()) {
        if (!out.empty()) out.push_back(',');
        out += query_name(q);
    }
    return out;
}

QuerySet QuerySet::from_csv(std::string_view csv) {
    QuerySet s;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t end = csv.find(',', start);
        if (end == std::string_view::npos) end = csv.size();
        std::string_view item = csv.substr(start, end - start);
        if (!item.empty()) s.insert(parse_query(item));
        if (end == csv.size()) break;
        start = end + 1;
    }
    return s;
}

RootedForest RootedForest::from_parents(std::span<const NodeId> parents) {
    RootedForest f;
    const std::size_t n = parents.size();
    f.parent_.assign(parents.begin(), parents.end());
    f.children_.resize(n);
    f.root_of_.resize(n);
    f.depth_.resize(n);
    f.tree_index_.resize(n);
    f.port_.assign(n, 0);

    for (NodeId v = 0; v < n; ++v) {
        NodeId p = f.parent_[v];
        if (p == kNoNode) {
            f.tree_index_[v] = static_cast<std::uint32_t>(f.roots_.size());
            f.roots_.push_back(v);
            f.root_of_[v] = v;
            f.depth_[v] = 0;
        } else {
            if (p >= v)
                throw InvalidEventError("parent id must precede child id");
            f.children_[p].push_back(v);
            f.port_[v] = static_cast<std::uint32_t>(f.children_[p].size());
            f.root_of_[v] = f.root_of_[p];
            f.depth_[v] = f.depth_[p] + 1;
            f.tree_index_[v] = f.tree_index_[p];
        }
    }

    // DFS numbering over trees in root order, children in insertion order.
    f.pre_.resize(n);
    f.post_.resize(n);
    std::uint32_t clock = 0;
    std::vector<std::pair<NodeId, std::size_t>> stack;
    for (NodeId r : f.roots_) {
        stack.emplace_back(r, 0);
        f.pre_[r] = clock++;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < f.children_[v].size()) {
                NodeId c = f.children_[v][next++];
                f.pre_[c] = clock++;
                stack.emplace_back(c, 0);
            } else {
                f.post_[v] = clock++;
                stack.pop_back();
            }
        }
    }
    return f;
}

bool RootedForest::adjacent(NodeId u, NodeId v) const {
    check(u);
    check(v);
    return (parent_[u] == v) != (parent_[v] == u);
}

bool RootedForest::sibling(NodeId u, NodeId v) const {
    check(u);
    check(v);
    if (u == v) return true;
    return parent_[u] != kNoNode && parent_[u] == parent_[v];
}

bool RootedForest::connected(NodeId u, NodeId v) const {
    return root_of_[check(u)] == root_of_[check(v)];
}

bool RootedForest::ancestor_of(NodeId u, NodeId v) const {
    check(u);
    check(v);
    return pre_[u] <= pre_[v] && post_[v] <= post_[u];
}

NodeId RootedForest::nca(NodeId u, NodeId v) const {
    if (!connected(u, v)) throw CrossTreeError("NCA across trees");
    while (depth_[u] > depth_[v]) u = parent_[u];
    while (depth_[v] > depth_[u]) v = parent_[v];
    while (u != v) {
        u = parent_[u];
        v = parent_[v];
    }
    return u;
}

std::uint32_t RootedForest::distance(NodeId u, NodeId v) const {
    if (!connected(u, v)) throw CrossTreeError("distance across trees");
    NodeId z = nca(u, v);
    return depth_[u] + depth_[v] - 2 * depth_[z];
}

std::uint32_t RootedForest::routing_port(NodeId u, NodeId v) const {
    if (!connected(u, v)) throw CrossTreeError("routing across trees");
    if (u == v) return 0;
    if (!ancestor_of(u, v)) return 0;  // path leaves through the parent
    // v is a strict descendant: find u's child on the path.
    NodeId c = v;
    while (parent_[c] != u) c = parent_[c];
    return port_[c];
}

bool RootedForest::query_bool(QueryKind q, NodeId u, NodeId v) const {
    switch (q) {
        case QueryKind::Adjacency: return adjacent(u, v);
        case QueryKind::Sibling: return sibling(u, v);
        case QueryKind::Connectivity: return connected(u, v);
        case QueryKind::Ancestry: return ancestor_of(u, v);
        default:
            throw UnsupportedQueryError("not a boolean query: " +
                                        std::string(query_name(q)));
    }
}

}  // namespace forestlab
