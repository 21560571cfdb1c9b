#include "forestlab/static_schemes.hpp"

#include <algorithm>
#include <stdexcept>

namespace forestlab {

namespace {

// Trees of a forest with members in insertion (id) order, sorted by
// (size desc, root id asc). Ranks are 1-based positions in this order.
struct TreeView {
    NodeId root;
    std::vector<NodeId> members;
};

std::vector<TreeView> trees_by_size(const RootedForest& f) {
    std::vector<TreeView> trees(f.roots().size());
    for (std::size_t t = 0; t < f.roots().size(); ++t) trees[t].root = f.roots()[t];
    for (NodeId v = 0; v < f.size(); ++v)
        trees[f.tree_index(v)].members.push_back(v);  // ascending ids
    std::sort(trees.begin(), trees.end(), [](const TreeView& a, const TreeView& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() > b.members.size();
        return a.root < b.root;
    });
    return trees;
}

// Sibling groups: the children of each parent form one group, every root a
// singleton group. Groups partition the nodes. Sorted by (size desc,
// owner id asc, children-group before root-group).
struct GroupView {
    NodeId owner;  // the parent, or the root itself for singleton groups
    bool root_group;
    std::vector<NodeId> members;
};

std::vector<GroupView> groups_by_size(const RootedForest& f) {
    std::vector<GroupView> groups;
    for (NodeId v = 0; v < f.size(); ++v) {
        if (f.is_root(v)) groups.push_back({v, true, {v}});
        if (!f.children(v).empty()) groups.push_back({v, false, f.children(v)});
    }
    std::sort(groups.begin(), groups.end(), [](const GroupView& a, const GroupView& b) {
        if (a.members.size() != b.members.size())
            return a.members.size() > b.members.size();
        if (a.owner != b.owner) return a.owner < b.owner;
        return a.root_group < b.root_group;
    });
    return groups;
}

unsigned field_width(std::size_t capacity) {
    return std::max(1u, ceil_log2(capacity));
}

void require_capacity(const RootedForest& f, std::size_t capacity) {
    if (f.size() > capacity)
        throw InvalidParamsError("forest larger than encoding capacity");
    if (f.size() == 0) throw InvalidParamsError("cannot encode an empty forest");
}

}  // namespace

unsigned RankCode::width_class(std::size_t rank, std::size_t n) {
    if (rank == 0 || rank > n) throw OutOfRangeError("rank out of range");
    return std::min(floor_log2(rank), num_classes(n) - 1);
}

unsigned RankCode::c_width(std::size_t n, unsigned width_class) {
    unsigned top = num_classes(n) - 1;
    if (width_class > top) throw OutOfRangeError("bad rank width class");
    if (width_class < top) return width_class;
    std::size_t base = std::size_t(1) << top;
    return n >= base ? ceil_log2(n - base + 1) : 0;
}

void RankCode::append(Label& l, std::size_t rank, std::size_t n) {
    unsigned s = width_class(rank, n);
    l.append_uint(s, sep_width(n));
    l.append_uint(rank - (std::size_t(1) << s), c_width(n, s));
}

RankCode::Decoded RankCode::read(const Label& l, std::size_t offset, std::size_t n) {
    unsigned sw = sep_width(n);
    unsigned s = static_cast<unsigned>(l.read_uint(offset, sw));
    unsigned cw = c_width(n, s);
    std::size_t rank = (std::size_t(1) << s) + l.read_uint(offset + sw, cw);
    return {rank, sw + std::size_t(cw)};
}

void StaticScheme::check_decode_args(QueryKind q, const Label& a, const Label& b,
                                     std::size_t capacity) const {
    if (!queries_.contains(q))
        throw UnsupportedQueryError(name_ + " does not answer " +
                                    std::string(query_name(q)));
    std::size_t want = label_width(capacity);
    if (a.bit_length() != b.bit_length())
        throw WidthMismatchError("labels of different widths");
    if (a.bit_length() != want)
        throw WidthMismatchError("label width does not match scheme size");
}

// --- KannanScheme ---

KannanScheme::KannanScheme()
    : StaticScheme("adj-sib-kannan",
                   QuerySet{QueryKind::Adjacency, QueryKind::Sibling}, true) {}

std::size_t KannanScheme::label_width(std::size_t capacity) const {
    return 2 * std::size_t(field_width(capacity));
}

std::vector<Label> KannanScheme::encode_with_capacity(const RootedForest& f,
                                                      std::size_t capacity) const {
    require_capacity(f, capacity);
    unsigned w = field_width(capacity);

    // Nodes numbered 0..m-1 per tree in insertion order, offset by a
    // per-tree base (trees in root insertion order) so ids are unique.
    std::vector<std::uint64_t> base(f.roots().size() + 1, 0);
    for (NodeId v = 0; v < f.size(); ++v) base[f.tree_index(v) + 1]++;
    for (std::size_t t = 1; t < base.size(); ++t) base[t] += base[t - 1];
    std::vector<std::uint64_t> id(f.size());
    std::vector<std::uint64_t> next(f.roots().size(), 0);
    for (NodeId v = 0; v < f.size(); ++v)
        id[v] = base[f.tree_index(v)] + next[f.tree_index(v)]++;

    std::vector<Label> labels(f.size());
    for (NodeId v = 0; v < f.size(); ++v) {
        Label l;
        l.append_uint(id[v], w);
        l.append_uint(f.is_root(v) ? id[v] : id[f.parent(v)], w);
        labels[v] = std::move(l);
    }
    return labels;
}

bool KannanScheme::decode(QueryKind q, const Label& a, const Label& b,
                          std::size_t capacity) const {
    check_decode_args(q, a, b, capacity);
    unsigned w = field_width(capacity);
    std::uint64_t id1 = a.read_uint(0, w), p1 = a.read_uint(w, w);
    std::uint64_t id2 = b.read_uint(0, w), p2 = b.read_uint(w, w);
    if (q == QueryKind::Adjacency) return (p1 == id2) != (p2 == id1);
    // Sibling: equal parents, and the (0,0)-style root convention must not
    // make a root a sibling of its children.
    return p1 == p2 && (id1 == p1) == (id2 == p2);
}

// --- IntervalAncestryScheme ---

IntervalAncestryScheme::IntervalAncestryScheme()
    : StaticScheme("anc-interval", QuerySet{QueryKind::Ancestry}, true) {}

std::size_t IntervalAncestryScheme::label_width(std::size_t capacity) const {
    return 2 * std::size_t(ceil_log2(2 * capacity));
}

std::vector<Label> IntervalAncestryScheme::encode_with_capacity(
    const RootedForest& f, std::size_t capacity) const {
    require_capacity(f, capacity);
    unsigned w = ceil_log2(2 * capacity);
    std::vector<Label> labels(f.size());
    for (NodeId v = 0; v < f.size(); ++v) {
        Label l;
        l.append_uint(f.pre_order(v), w);
        l.append_uint(f.post_order(v), w);
        labels[v] = std::move(l);
    }
    return labels;
}

bool IntervalAncestryScheme::decode(QueryKind q, const Label& a, const Label& b,
                                    std::size_t capacity) const {
    check_decode_args(q, a, b, capacity);
    unsigned w = ceil_log2(2 * capacity);
    std::uint64_t pre1 = a.read_uint(0, w), post1 = a.read_uint(w, w);
    std::uint64_t pre2 = b.read_uint(0, w), post2 = b.read_uint(w, w);
    return pre1 <= pre2 && post2 <= post1;
}

// --- SortedConnectivityScheme ---

SortedConnectivityScheme::SortedConnectivityScheme()
    : StaticScheme("conn-sorted", QuerySet{QueryKind::Connectivity}, true) {}

std::size_t SortedConnectivityScheme::label_width(std::size_t capacity) const {
    return std::size_t(RankCode::sep_width(capacity)) + ceil_log2(capacity) + 1;
}

std::vector<Label> SortedConnectivityScheme::encode_with_capacity(
    const RootedForest& f, std::size_t capacity) const {
    require_capacity(f, capacity);
    std::size_t total = label_width(capacity);
    auto trees = trees_by_size(f);
    std::vector<Label> labels(f.size());
    for (std::size_t i = 0; i < trees.size(); ++i) {
        std::size_t rank = i + 1;
        const auto& members = trees[i].members;
        if (rank * members.size() > f.size())
            throw std::logic_error("size-sorted rank invariant violated");
        unsigned iw = ceil_log2(members.size());
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            Label l;
            RankCode::append(l, rank, capacity);
            l.append_uint(idx, iw);
            l.pad_to(total);
            labels[members[idx]] = std::move(l);
        }
    }
    return labels;
}

bool SortedConnectivityScheme::decode(QueryKind q, const Label& a, const Label& b,
                                      std::size_t capacity) const {
    check_decode_args(q, a, b, capacity);
    return RankCode::read(a, 0, capacity).rank == RankCode::read(b, 0, capacity).rank;
}

// --- SortedSiblingScheme ---

SortedSiblingScheme::SortedSiblingScheme(bool unique)
    : StaticScheme(unique ? "sib-sorted" : "sib-sorted-nonunique",
                   QuerySet{QueryKind::Sibling}, unique) {}

std::size_t SortedSiblingScheme::label_width(std::size_t capacity) const {
    if (unique_labels())
        return std::size_t(RankCode::sep_width(capacity)) + ceil_log2(capacity) + 1;
    return field_width(capacity);
}

std::vector<Label> SortedSiblingScheme::encode_with_capacity(
    const RootedForest& f, std::size_t capacity) const {
    require_capacity(f, capacity);
    std::size_t total = label_width(capacity);
    auto groups = groups_by_size(f);
    std::vector<Label> labels(f.size());
    for (std::size_t i = 0; i < groups.size(); ++i) {
        std::size_t rank = i + 1;
        const auto& members = groups[i].members;
        if (rank * members.size() > f.size())
            throw std::logic_error("size-sorted rank invariant violated");
        unsigned iw = ceil_log2(members.size());
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            Label l;
            if (unique_labels()) {
                RankCode::append(l, rank, capacity);
                l.append_uint(idx, iw);
                l.pad_to(total);
            } else {
                l.append_uint(rank - 1, static_cast<unsigned>(total));
            }
            labels[members[idx]] = std::move(l);
        }
    }
    return labels;
}

bool SortedSiblingScheme::decode(QueryKind q, const Label& a, const Label& b,
                                 std::size_t capacity) const {
    check_decode_args(q, a, b, capacity);
    if (unique_labels())
        return RankCode::read(a, 0, capacity).rank == RankCode::read(b, 0, capacity).rank;
    unsigned w = static_cast<unsigned>(label_width(capacity));
    return a.read_uint(0, w) == b.read_uint(0, w);
}

// --- ConnectivityWrapper ---

ConnectivityWrapper::ConnectivityWrapper(std::shared_ptr<const StaticScheme> inner)
    : StaticScheme("wrap:" + inner->name(),
                   inner->queries().with(QueryKind::Connectivity),
                   inner->unique_labels()),
      inner_(std::move(inner)) {
    if (inner_->queries().contains(QueryKind::Connectivity))
        throw InvalidParamsError(
            "wrapped scheme must answer within-tree queries only");
    // Numeric registration check of the inner size function:
    // non-decreasing, and S(a) - S(b) >= ceil_log2(a) - ceil_log2(b) - 2
    // for all b <= a (single pass over a <= 2^20 via the running maximum of
    // S(x) - ceil_log2(x)).
    constexpr std::size_t kLimit = std::size_t(1) << 20;
    std::int64_t max_gap = INT64_MIN;
    std::size_t prev = 0;
    for (std::size_t x = 1; x <= kLimit; ++x) {
        std::size_t s = inner_->label_width(x);
        if (x > 1 && s < prev)
            throw SizeFunctionViolationError(inner_->name() +
                                             ": size function decreases");
        prev = s;
        std::int64_t gap = static_cast<std::int64_t>(s) - ceil_log2(x);
        if (gap < max_gap - 2)
            throw SizeFunctionViolationError(
                inner_->name() + ": size function grows slower than log");
        max_gap = std::max(max_gap, gap);
    }
}

std::size_t ConnectivityWrapper::label_width(std::size_t capacity) const {
    return inner_->label_width(capacity) + RankCode::sep_width(capacity) + 1;
}

std::vector<Label> ConnectivityWrapper::encode_with_capacity(
    const RootedForest& f, std::size_t capacity) const {
    require_capacity(f, capacity);
    std::size_t total = label_width(capacity);
    auto trees = trees_by_size(f);
    std::vector<Label> labels(f.size());
    for (std::size_t i = 0; i < trees.size(); ++i) {
        std::size_t rank = i + 1;
        const auto& members = trees[i].members;
        if (rank * members.size() > f.size())
            throw std::logic_error("size-sorted rank invariant violated");
        // The decoder can only re-derive the capacity budget floor(n/rank),
        // so the subtree is encoded against that budget, not its exact size.
        std::size_t budget = capacity / rank;
        if (members.size() > budget)
            throw std::logic_error("tree exceeds its rank budget");

        // Relabel the tree's members to a dense subforest (ids ascend, so
        // parents keep preceding children).
        std::vector<NodeId> local_of(f.size(), kNoNode);
        for (std::size_t idx = 0; idx < members.size(); ++idx)
            local_of[members[idx]] = static_cast<NodeId>(idx);
        std::vector<NodeId> parents(members.size());
        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            NodeId v = members[idx];
            parents[idx] = f.is_root(v) ? kNoNode : local_of[f.parent(v)];
        }
        RootedForest sub = RootedForest::from_parents(parents);
        std::vector<Label> inner_labels = inner_->encode_with_capacity(sub, budget);

        for (std::size_t idx = 0; idx < members.size(); ++idx) {
            Label l;
            RankCode::append(l, rank, capacity);
            if (inner_labels[idx].bit_length() != inner_->label_width(budget))
                throw std::logic_error("inner scheme emitted a wrong width");
            l.append(inner_labels[idx]);
            l.pad_to(total);
            labels[members[idx]] = std::move(l);
        }
    }
    return labels;
}

bool ConnectivityWrapper::decode(QueryKind q, const Label& a, const Label& b,
                                 std::size_t capacity) const {
    check_decode_args(q, a, b, capacity);
    auto ra = RankCode::read(a, 0, capacity);
    auto rb = RankCode::read(b, 0, capacity);
    if (q == QueryKind::Connectivity) return ra.rank == rb.rank;
    if (ra.rank != rb.rank) return false;  // within-tree query across trees
    std::size_t budget = capacity / ra.rank;
    std::size_t iw = inner_->label_width(budget);
    return inner_->decode(q, a.slice(ra.bits, iw), b.slice(rb.bits, iw), budget);
}

// --- registry ---

std::shared_ptr<const StaticScheme> make_static_scheme(std::string_view name) {
    if (name.rfind("wrap:", 0) == 0)
        return std::make_shared<ConnectivityWrapper>(make_static_scheme(name.substr(5)));
    if (name == "adj-sib-kannan") return std::make_shared<KannanScheme>();
    if (name == "anc-interval") return std::make_shared<IntervalAncestryScheme>();
    if (name == "conn-sorted") return std::make_shared<SortedConnectivityScheme>();
    if (name == "sib-sorted") return std::make_shared<SortedSiblingScheme>(true);
    if (name == "sib-sorted-nonunique") return std::make_shared<SortedSiblingScheme>(false);
    throw ParseError("unknown static scheme: " + std::string(name));
}

const std::vector<std::string>& static_scheme_names() {
    static const std::vector<std::string> names = {
        "adj-sib-kannan",
        "anc-interval",
        "conn-sorted",
        "sib-sorted",
        "sib-sorted-nonunique",
        "wrap:adj-sib-kannan",
        "wrap:sib-sorted",
        "wrap:sib-sorted-nonunique",
        "wrap:anc-interval",
    };
    return names;
}

}  // namespace forestlab
