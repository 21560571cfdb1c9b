#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "forestlab/forest.hpp"

namespace forestlab {

enum class EventKind : std::uint8_t { InsertRoot, InsertChild, RemoveLeaf };

// One topological event of the dynamic model. External ids are opaque
// whitespace-free tokens; a token may be inserted at most once per sequence.
struct TopologicalEvent {
    EventKind kind;
    std::string external_id;
    std::string parent_external_id;  // InsertChild only

    static TopologicalEvent root(std::string id) {
        return {EventKind::InsertRoot, std::move(id), {}};
    }
    static TopologicalEvent insert(std::string id, std::string parent) {
        return {EventKind::InsertChild, std::move(id), std::move(parent)};
    }
    static TopologicalEvent remove(std::string id) {
        return {EventKind::RemoveLeaf, std::move(id), {}};
    }
    bool operator==(const TopologicalEvent&) const = default;
};

struct EventSequence {
    std::vector<TopologicalEvent> events;
    std::size_t max_n = 0;  // maximum simultaneous node count, set by validate()

    // Replays the whole sequence; throws InvalidEventError on the first bad
    // event. Every prefix of a valid sequence is itself valid.
    void validate();
};

// Online replay of topological events: assigns monotone internal ids
// (never reused after removal) and tracks parents, components and liveness.
// Shared by build_from_events and by the dynamic encoders so both sides see
// the identical deterministic id assignment.
class Replay {
public:
    struct Slot {
        std::string token;
        std::uint64_t parent;     // internal id; own id for roots
        std::uint64_t component;  // internal id of the tree's first node
        std::uint32_t living_children = 0;
        bool alive = true;
        bool is_root = false;
    };

    // Applies one event; returns the internal id for insertions,
    // kNoSlot for removals. Throws InvalidEventError.
    static constexpr std::uint64_t kNoSlot = ~0ull;
    std::uint64_t apply(const TopologicalEvent& e);

    std::uint64_t inserted_count() const { return slots_.size(); }
    std::size_t living_count() const { return living_; }
    const Slot& slot(std::uint64_t id) const { return slots_[id]; }
    const std::vector<Slot>& slots() const { return slots_; }

private:
    std::vector<Slot> slots_;
    std::unordered_map<std::string, std::uint64_t> by_token_;
    std::size_t living_ = 0;
};

// Final static forest after replaying a sequence. Living nodes are
// compacted to dense NodeIds in insertion order.
struct BuiltForest {
    RootedForest forest;
    std::vector<std::string> tokens;               // by dense NodeId
    std::unordered_map<std::string, NodeId> ids;   // token -> dense NodeId
};

BuiltForest build_from_events(const EventSequence& seq);

// Deterministic random insertion sequence: first event is a root; each
// subsequent node becomes a new root with probability 1/8, otherwise a child
// of a uniformly chosen existing node. Tokens are "n0", "n1", ...
EventSequence random_forest(std::size_t n, std::uint64_t seed);

// Like random_forest but interleaves leaf removals (about one removal per
// four events when a removable leaf exists). Exactly n insertions.
EventSequence random_stream(std::size_t n, std::uint64_t seed);

}  // namespace forestlab
