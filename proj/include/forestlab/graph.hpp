#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "forestlab/errors.hpp"
#include "forestlab/forest.hpp"

namespace forestlab {

// Graph insertion event: a node arrives together with all its edges to
// previously inserted nodes. Used by the general-graph encoders; tree event
// sequences embed naturally (root = no neighbors, child = one neighbor).
struct GraphEvent {
    std::string external_id;
    std::vector<std::string> neighbors;
};

struct GraphEventSequence {
    std::vector<GraphEvent> events;
};

// Undirected graph built by replaying a GraphEventSequence. Node ids are
// dense in insertion order.
class SimpleGraph {
public:
    std::size_t size() const { return adj_.size(); }
    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_.at(v); }
    std::size_t degree(NodeId v) const { return adj_.at(v).size(); }
    bool adjacent(NodeId u, NodeId v) const;

    friend SimpleGraph build_graph(const GraphEventSequence&,
                                   std::vector<std::string>* tokens,
                                   std::unordered_map<std::string, NodeId>* ids);

private:
    std::vector<std::vector<NodeId>> adj_;
};

SimpleGraph build_graph(const GraphEventSequence& seq,
                        std::vector<std::string>* tokens = nullptr,
                        std::unordered_map<std::string, NodeId>* ids = nullptr);

}  // namespace forestlab
