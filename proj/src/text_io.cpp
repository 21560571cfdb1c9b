#include "forestlab/text_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace forestlab {

namespace {

// Reads the next non-empty line; returns false on EOF.
bool next_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t i = line.find_first_not_of(" \t");
        if (i == std::string::npos) continue;
        return true;
    }
    return false;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::size_t parse_header_count(const std::string& tok, const char* key) {
    std::string prefix = std::string(key) + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError("expected " + prefix + "<int> in header");
    try {
        return std::stoull(tok.substr(prefix.size()));
    } catch (const std::exception&) {
        throw ParseError("bad integer in header field " + std::string(key));
    }
}

}  // namespace

void write_forest(std::ostream& os, const RootedForest& f,
                  const std::vector<std::string>& tokens) {
    os << "forest n=" << f.size() << '\n';
    for (NodeId v = 0; v < f.size(); ++v) {
        os << tokens.at(v) << ' ';
        if (f.is_root(v))
            os << '-';
        else
            os << tokens.at(f.parent(v));
        os << '\n';
    }
}

BuiltForest read_forest(std::istream& is) {
    std::string line;
    if (!next_line(is, line)) throw ParseError("empty forest file");
    auto head = split_ws(line);
    if (head.size() != 2 || head[0] != "forest")
        throw ParseError("forest file must start with `forest n=<N>`");
    std::size_t n = parse_header_count(head[1], "n");

    EventSequence seq;
    while (next_line(is, line)) {
        auto toks = split_ws(line);
        if (toks.size() != 2) throw ParseError("bad forest line: " + line);
        if (toks[1] == "-")
            seq.events.push_back(TopologicalEvent::root(toks[0]));
        else
            seq.events.push_back(TopologicalEvent::insert(toks[0], toks[1]));
    }
    if (seq.events.size() != n)
        throw ParseError("forest file node count does not match header");
    seq.validate();
    return build_from_events(seq);
}

void write_events(std::ostream& os, const EventSequence& seq) {
    os << "events\n";
    for (const auto& e : seq.events) {
        switch (e.kind) {
            case EventKind::InsertRoot:
                os << "root " << e.external_id << '\n';
                break;
            case EventKind::InsertChild:
                os << "insert " << e.external_id << ' ' << e.parent_external_id << '\n';
                break;
            case EventKind::RemoveLeaf:
                os << "remove " << e.external_id << '\n';
                break;
        }
    }
}

void write_events(std::ostream& os, const GraphEventSequence& seq) {
    os << "events\n";
    for (const auto& e : seq.events) {
        os << "node " << e.external_id;
        for (const auto& t : e.neighbors) os << ' ' << t;
        os << '\n';
    }
}

ParsedEvents read_events(std::istream& is) {
    std::string line;
    if (!next_line(is, line)) throw ParseError("empty event file");
    auto head = split_ws(line);
    if (head.size() != 1 || head[0] != "events")
        throw ParseError("event file must start with `events`");

    EventSequence tree;
    GraphEventSequence graph;
    bool any_graph = false;
    while (next_line(is, line)) {
        auto toks = split_ws(line);
        if (toks[0] == "root" && toks.size() == 2) {
            tree.events.push_back(TopologicalEvent::root(toks[1]));
            graph.events.push_back({toks[1], {}});
        } else if (toks[0] == "insert" && toks.size() == 3) {
            tree.events.push_back(TopologicalEvent::insert(toks[1], toks[2]));
            graph.events.push_back({toks[1], {toks[2]}});
        } else if (toks[0] == "remove" && toks.size() == 2) {
            if (any_graph)
                throw ParseError("remove not supported in graph event files");
            tree.events.push_back(TopologicalEvent::remove(toks[1]));
        } else if (toks[0] == "node" && toks.size() >= 2) {
            for (const auto& e : tree.events)
                if (e.kind == EventKind::RemoveLeaf)
                    throw ParseError("remove not supported in graph event files");
            any_graph = true;
            graph.events.push_back(
                {toks[1], std::vector<std::string>(toks.begin() + 2, toks.end())});
        } else {
            throw ParseError("bad event line: " + line);
        }
    }
    if (any_graph) return graph;
    tree.validate();
    return tree;
}

GraphEventSequence to_graph_events(const EventSequence& seq) {
    GraphEventSequence g;
    for (const auto& e : seq.events) {
        switch (e.kind) {
            case EventKind::InsertRoot:
                g.events.push_back({e.external_id, {}});
                break;
            case EventKind::InsertChild:
                g.events.push_back({e.external_id, {e.parent_external_id}});
                break;
            case EventKind::RemoveLeaf:
                throw InvalidEventError("removal has no graph-event form");
        }
    }
    return g;
}

void write_label_file(std::ostream& os, const LabelFile& f) {
    os << "labels scheme=" << f.scheme << " n=" << f.n << '\n';
    for (const auto& line : f.lines) os << format_label_line(line) << '\n';
}

LabelFile read_label_file(std::istream& is) {
    std::string line;
    if (!next_line(is, line)) throw ParseError("empty label file");
    auto head = split_ws(line);
    if (head.size() != 3 || head[0] != "labels" ||
        head[1].rfind("scheme=", 0) != 0)
        throw ParseError("label file must start with `labels scheme=<name> n=<n>`");
    LabelFile f;
    f.scheme = head[1].substr(7);
    f.n = parse_header_count(head[2], "n");
    while (next_line(is, line)) f.lines.push_back(parse_label_line(line));
    return f;
}

}  // namespace forestlab
