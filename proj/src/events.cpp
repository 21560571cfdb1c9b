#include "forestlab/events.hpp"

#include <random>

namespace forestlab {

std::uint64_t Replay::apply(const TopologicalEvent& e) {
    switch (e.kind) {
        case EventKind::InsertRoot: {
            if (by_token_.count(e.external_id))
                throw InvalidEventError("token already used: " + e.external_id);
            std::uint64_t id = slots_.size();
            slots_.push_back({e.external_id, id, id, 0, true, true});
            by_token_.emplace(e.external_id, id);
            ++living_;
            return id;
        }
        case EventKind::InsertChild: {
            if (by_token_.count(e.external_id))
                throw InvalidEventError("token already used: " + e.external_id);
            auto it = by_token_.find(e.parent_external_id);
            if (it == by_token_.end() || !slots_[it->second].alive)
                throw InvalidEventError("insert under unknown or removed node: " +
                                        e.parent_external_id);
            std::uint64_t pid = it->second;
            std::uint64_t id = slots_.size();
            slots_.push_back({e.external_id, pid, slots_[pid].component, 0, true, false});
            by_token_.emplace(e.external_id, id);
            ++slots_[pid].living_children;
            ++living_;
            return id;
        }
        case EventKind::RemoveLeaf: {
            auto it = by_token_.find(e.external_id);
            if (it == by_token_.end() || !slots_[it->second].alive)
                throw InvalidEventError("remove of unknown or removed node: " +
                                        e.external_id);
            Slot& s = slots_[it->second];
            if (s.is_root)
                throw InvalidEventError("the root may never be deleted: " +
                                        e.external_id);
            if (s.living_children != 0)
                throw InvalidEventError("remove of non-leaf: " + e.external_id);
            s.alive = false;
            --slots_[s.parent].living_children;
            --living_;
            return kNoSlot;
        }
    }
    throw InvalidEventError("unknown event kind");
}

void EventSequence::validate() {
    Replay r;
    std::size_t peak = 0;
    for (const auto& e : events) {
        r.apply(e);
        peak = std::max(peak, r.living_count());
    }
    max_n = peak;
}

BuiltForest build_from_events(const EventSequence& seq) {
    Replay r;
    for (const auto& e : seq.events) r.apply(e);

    // Compact living nodes to dense ids in insertion order.
    std::vector<NodeId> dense(r.inserted_count(), kNoNode);
    BuiltForest out;
    std::vector<NodeId> parents;
    for (std::uint64_t id = 0; id < r.inserted_count(); ++id) {
        const auto& s = r.slot(id);
        if (!s.alive) continue;
        dense[id] = static_cast<NodeId>(parents.size());
        parents.push_back(s.is_root ? kNoNode : dense[s.parent]);
        out.tokens.push_back(s.token);
    }
    out.forest = RootedForest::from_parents(parents);
    for (NodeId v = 0; v < out.tokens.size(); ++v) out.ids.emplace(out.tokens[v], v);
    return out;
}

EventSequence random_forest(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw InvalidParamsError("random_forest needs n >= 1");
    std::mt19937_64 rng(seed);
    EventSequence seq;
    seq.events.push_back(TopologicalEvent::root("n0"));
    for (std::size_t i = 1; i < n; ++i) {
        std::string token = "n" + std::to_string(i);
        if (rng() % 8 == 0) {
            seq.events.push_back(TopologicalEvent::root(std::move(token)));
        } else {
            std::size_t p = rng() % i;
            seq.events.push_back(
                TopologicalEvent::insert(std::move(token), "n" + std::to_string(p)));
        }
    }
    seq.validate();
    return seq;
}

EventSequence random_stream(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw InvalidParamsError("random_stream needs n >= 1");
    std::mt19937_64 rng(seed);
    EventSequence seq;
    Replay r;
    auto push = [&](TopologicalEvent e) {
        r.apply(e);
        seq.events.push_back(std::move(e));
    };
    push(TopologicalEvent::root("n0"));
    std::size_t inserted = 1;
    while (inserted < n) {
        // Collect removable leaves (living non-root leaves).
        std::vector<std::uint64_t> removable;
        for (std::uint64_t id = 0; id < r.inserted_count(); ++id) {
            const auto& s = r.slot(id);
            if (s.alive && !s.is_root && s.living_children == 0) removable.push_back(id);
        }
        if (!removable.empty() && rng() % 4 == 0) {
            std::uint64_t victim = removable[rng() % removable.size()];
            push(TopologicalEvent::remove(r.slot(victim).token));
            continue;
        }
        std::string token = "n" + std::to_string(inserted);
        if (rng() % 8 == 0) {
            push(TopologicalEvent::root(std::move(token)));
        } else {
            std::vector<std::uint64_t> living;
            for (std::uint64_t id = 0; id < r.inserted_count(); ++id)
                if (r.slot(id).alive) living.push_back(id);
            std::uint64_t p = living[rng() % living.size()];
            push(TopologicalEvent::insert(std::move(token), r.slot(p).token));
        }
        ++inserted;
    }
    seq.validate();
    return seq;
}

}  // namespace forestlab
