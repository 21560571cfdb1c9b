#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "forestlab/bitmath.hpp"
#include "forestlab/events.hpp"
#include "forestlab/graph.hpp"
#include "forestlab/label.hpp"

namespace forestlab {

// Online encoder over an event stream. A label, once emitted for a node, is
// never changed or re-emitted for another node; output depends only on the
// event prefix. Labels pack equal-width integer fields, the width growing
// with insertion time: node t (1-based count of insertions so far, including
// the new node) gets fields of max(1, ceil_log2(t)) bits, so the decoder
// recovers the width as bit_length / field_count with no length prefix.
class DynamicEncoder {
public:
    virtual ~DynamicEncoder() = default;

    const std::string& name() const { return name_; }
    QuerySet queries() const { return queries_; }
    unsigned field_count() const { return fields_; }

    // Tree event; returns the new node's label for insertions, nullopt for
    // removals. Throws InvalidEventError.
    virtual std::optional<Label> apply(const TopologicalEvent& e) = 0;
    // Graph insertion (general-graph variants only).
    virtual Label apply(const GraphEvent& e);

    virtual bool decode(QueryKind q, const Label& a, const Label& b) const = 0;

protected:
    DynamicEncoder(std::string name, QuerySet queries, unsigned fields)
        : name_(std::move(name)), queries_(queries), fields_(fields) {}

    static unsigned width_at(std::uint64_t insertions) {
        return std::max(1u, ceil_log2(insertions));
    }
    // Splits a packed label into its integer fields; checks divisibility.
    std::vector<std::uint64_t> unpack(const Label& l) const;
    void check_query(QueryKind q) const;

private:
    std::string name_;
    QuerySet queries_;
    unsigned fields_;
};

// (Id(v), Id(parent(v))): adjacency and sibling, 2 * ceil_log2(n) bits after
// n insertions. Roots store their own id.
class DynPairEncoder final : public DynamicEncoder {
public:
    DynPairEncoder();
    std::optional<Label> apply(const TopologicalEvent& e) override;
    bool decode(QueryKind q, const Label& a, const Label& b) const override;

private:
    Replay replay_;
};

// (Id(v), component(v)): connectivity. Component id is the internal id of
// the component's first node. Also accepts graph insertions whose edges all
// point into one existing component; anything else is a ComponentMergeError.
class DynConnectivityEncoder final : public DynamicEncoder {
public:
    DynConnectivityEncoder();
    std::optional<Label> apply(const TopologicalEvent& e) override;
    Label apply(const GraphEvent& e) override;
    bool decode(QueryKind q, const Label& a, const Label& b) const override;

private:
    Replay replay_;  // tree mode
    // graph mode
    std::unordered_map<std::string, std::uint64_t> graph_ids_;
    std::vector<std::uint64_t> graph_component_;
    bool graph_mode_ = false, tree_mode_ = false;
};

// (Id(v), Id(parent(v)), component(v)): adjacency + sibling + connectivity,
// 3 * ceil_log2(n) bits after n insertions.
class DynTripleEncoder final : public DynamicEncoder {
public:
    DynTripleEncoder();
    std::optional<Label> apply(const TopologicalEvent& e) override;
    bool decode(QueryKind q, const Label& a, const Label& b) const override;

private:
    Replay replay_;
};

// Adjacency on graphs of maximum degree k: own id followed by the ids of the
// at-insertion neighbors, unused slots holding the own id as sentinel.
// k+1 fields. Adjacent iff either label lists the other's id.
class DynBoundedDegreeEncoder final : public DynamicEncoder {
public:
    explicit DynBoundedDegreeEncoder(unsigned k);
    unsigned degree_bound() const { return k_; }
    std::optional<Label> apply(const TopologicalEvent& e) override;
    Label apply(const GraphEvent& e) override;
    bool decode(QueryKind q, const Label& a, const Label& b) const override;

private:
    unsigned k_;
    std::unordered_map<std::string, std::uint64_t> ids_;
    std::vector<std::uint32_t> degree_;
};

// dyn-adj-sib | dyn-conn | dyn-triple | dyn-deg<k>
std::unique_ptr<DynamicEncoder> make_dynamic_encoder(std::string_view name);
bool is_dynamic_scheme_name(std::string_view name);
const std::vector<std::string>& dynamic_scheme_names();

}  // namespace forestlab
