#include "forestlab/graph.hpp"

#include <algorithm>

namespace forestlab {

bool SimpleGraph::adjacent(NodeId u, NodeId v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

SimpleGraph build_graph(const GraphEventSequence& seq,
                        std::vector<std::string>* tokens,
                        std::unordered_map<std::string, NodeId>* ids) {
    SimpleGraph g;
    std::unordered_map<std::string, NodeId> by_token;
    for (const auto& e : seq.events) {
        if (by_token.count(e.external_id))
            throw InvalidEventError("token already used: " + e.external_id);
        NodeId v = static_cast<NodeId>(g.adj_.size());
        g.adj_.emplace_back();
        std::vector<NodeId> nbrs;
        for (const auto& t : e.neighbors) {
            auto it = by_token.find(t);
            if (it == by_token.end())
                throw InvalidEventError("edge to unknown node: " + t);
            nbrs.push_back(it->second);
        }
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw InvalidEventError("duplicate edge on insertion of " + e.external_id);
        for (NodeId u : nbrs) {
            g.adj_[u].push_back(v);  // stays sorted: v is the max id so far
        }
        g.adj_[v] = std::move(nbrs);
        by_token.emplace(e.external_id, v);
        if (tokens) tokens->push_back(e.external_id);
    }
    if (ids) *ids = std::move(by_token);
    return g;
}

}  // namespace forestlab
