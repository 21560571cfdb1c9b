#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "forestlab/events.hpp"
#include "forestlab/graph.hpp"
#include "forestlab/label.hpp"

namespace forestlab {

// --- forest text format ---
// header `forest n=<N>`, one line per node `<external_id> <parent|->`,
// `-` marking a root. Line order is insertion order; parents precede
// children.
void write_forest(std::ostream& os, const RootedForest& f,
                  const std::vector<std::string>& tokens);
BuiltForest read_forest(std::istream& is);

// --- event text format ---
// header `events`, then `root <id>` | `insert <id> <parent_id>` |
// `remove <id>` | `node <id> [<neighbor>...]` (graph insertion).
// A file with any `node` line parses as a GraphEventSequence.
using ParsedEvents = std::variant<EventSequence, GraphEventSequence>;

void write_events(std::ostream& os, const EventSequence& seq);
void write_events(std::ostream& os, const GraphEventSequence& seq);
ParsedEvents read_events(std::istream& is);

// Tree events embed into the graph model; removals do not.
GraphEventSequence to_graph_events(const EventSequence& seq);

// --- label file ---
// header `labels scheme=<name> n=<n>`, then label lines.
struct LabelFile {
    std::string scheme;
    std::size_t n = 0;
    std::vector<LabelLine> lines;
};

void write_label_file(std::ostream& os, const LabelFile& f);
LabelFile read_label_file(std::istream& is);

}  // namespace forestlab
