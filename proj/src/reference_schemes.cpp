#include "forestlab/reference_schemes.hpp"

#include <algorithm>

namespace forestlab {

ReferencePathScheme::ReferencePathScheme(std::size_t capacity)
    : width_(std::max(1u, ceil_log2(capacity))) {
    if (capacity < 1) throw InvalidParamsError("capacity must be >= 1");
}

Label ReferencePathScheme::encode_path(const Path& p) const {
    Label l;
    l.append_uint(p.ids.size() - 1, width_);  // depth
    for (std::uint64_t id : p.ids) l.append_uint(id, width_);
    for (std::uint64_t port : p.ports) l.append_uint(port, width_);
    return l;
}

std::vector<Label> ReferencePathScheme::encode(const RootedForest& f) const {
    std::vector<Label> labels(f.size());
    for (NodeId v = 0; v < f.size(); ++v) {
        Path p;
        NodeId cur = v;
        while (true) {
            p.ids.push_back(cur);
            if (f.is_root(cur)) break;
            p.ports.push_back(f.routing_port(f.parent(cur), cur));
            cur = f.parent(cur);
        }
        std::reverse(p.ids.begin(), p.ids.end());
        std::reverse(p.ports.begin(), p.ports.end());
        labels[v] = encode_path(p);
    }
    return labels;
}

ReferencePathScheme::Path ReferencePathScheme::parse(const Label& l) const {
    std::uint64_t d = l.read_uint(0, width_);
    Path p;
    p.ids.reserve(d + 1);
    std::size_t off = width_;
    for (std::uint64_t i = 0; i <= d; ++i, off += width_)
        p.ids.push_back(l.read_uint(off, width_));
    for (std::uint64_t i = 0; i < d; ++i, off += width_)
        p.ports.push_back(l.read_uint(off, width_));
    return p;
}

std::uint32_t ReferencePathScheme::depth(const Label& l) const {
    return static_cast<std::uint32_t>(l.read_uint(0, width_));
}

std::size_t ReferencePathScheme::common_prefix(const Path& a, const Path& b) const {
    if (a.ids[0] != b.ids[0]) throw CrossTreeError("labels from different trees");
    std::size_t n = std::min(a.ids.size(), b.ids.size());
    std::size_t i = 1;
    while (i < n && a.ids[i] == b.ids[i]) ++i;
    return i;
}

Label ReferencePathScheme::nca(const Label& a, const Label& b) const {
    Path pa = parse(a), pb = parse(b);
    std::size_t cpl = common_prefix(pa, pb);
    Path z;
    z.ids.assign(pa.ids.begin(), pa.ids.begin() + cpl);
    z.ports.assign(pa.ports.begin(), pa.ports.begin() + (cpl - 1));
    return encode_path(z);
}

std::uint32_t ReferencePathScheme::routing(const Label& a, const Label& b) const {
    Path pa = parse(a), pb = parse(b);
    std::size_t cpl = common_prefix(pa, pb);
    // b's node strictly below a's: descend via a child port; otherwise the
    // path starts at the parent edge (port 0). Self routes 0 by convention.
    if (cpl == pa.ids.size() && pb.ids.size() > pa.ids.size())
        return static_cast<std::uint32_t>(pb.ports[pa.ids.size() - 1]);
    return 0;
}

std::uint32_t ReferencePathScheme::distance(const Label& a, const Label& b) const {
    Path pa = parse(a), pb = parse(b);
    std::size_t cpl = common_prefix(pa, pb);
    return static_cast<std::uint32_t>((pa.ids.size() - cpl) + (pb.ids.size() - cpl));
}

}  // namespace forestlab
