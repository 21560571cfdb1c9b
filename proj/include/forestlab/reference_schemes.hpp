#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "forestlab/bitmath.hpp"
#include "forestlab/forest.hpp"
#include "forestlab/label.hpp"

namespace forestlab {

// Naive root-path labels backing the reference NCA / routing / distance
// decoders that the ancestry reductions are exercised against. Layout per
// node of depth d: [d] [ids of root..v] [ports along that path], all fields
// max(1, ceil_log2(capacity)) bits. O(n log n) bits per label -- these are
// plumbing, not size-optimal schemes.
class ReferencePathScheme {
public:
    explicit ReferencePathScheme(std::size_t capacity);

    std::vector<Label> encode(const RootedForest& f) const;

    struct Path {
        std::vector<std::uint64_t> ids;    // root..v
        std::vector<std::uint64_t> ports;  // ports[i]: at ids[i] toward ids[i+1]
    };
    Path parse(const Label& l) const;

    std::uint32_t depth(const Label& l) const;
    // Label of the nearest common ancestor; CrossTreeError across trees.
    Label nca(const Label& a, const Label& b) const;
    // Port at a's node of the first edge toward b's node; 0 leads to the
    // parent and is also returned for a == b. CrossTreeError across trees.
    std::uint32_t routing(const Label& a, const Label& b) const;
    std::uint32_t distance(const Label& a, const Label& b) const;

private:
    Label encode_path(const Path& p) const;
    std::size_t common_prefix(const Path& a, const Path& b) const;
    unsigned width_;
};

// --- ancestry reductions ---
// Each adapter answers "u is an ancestor of v" from the labels of a scheme
// for a richer query, taking that scheme's decoder as a callable.

// True iff the NCA decoder hands back u's own label.
template <class NcaDecoder>
bool ancestry_from_nca(NcaDecoder&& nca, const Label& u, const Label& v) {
    return std::forward<NcaDecoder>(nca)(u, v) == u;
}

// Designer-port convention: port 0 leads toward the root, so an ancestor
// routes down (nonzero) while the descendant routes up (zero). Routing to
// self is undefined; the diagonal answers false.
template <class RoutingDecoder>
bool ancestry_from_routing(RoutingDecoder&& routing, const Label& u, const Label& v) {
    if (u == v) return false;
    return routing(u, v) != 0 && routing(v, u) == 0;
}

// Depth-annotated distance: u is an ancestor of v iff v is exactly
// depth(v) - depth(u) below u.
template <class DistanceDecoder, class DepthDecoder>
bool ancestry_from_distance_depth(DistanceDecoder&& dist, DepthDecoder&& depth,
                                  const Label& u, const Label& v) {
    std::uint64_t du = depth(u), dv = depth(v);
    return du <= dv && dist(u, v) == dv - du;
}

}  // namespace forestlab
