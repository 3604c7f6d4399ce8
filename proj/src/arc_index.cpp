#include "xmodlink/arc_index.hpp"

#include <numeric>

namespace xmodlink {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::shared_ptr<const ArcIndex> ArcIndex::build(const SlicedDiagram& d) {
    auto idx = std::shared_ptr<ArcIndex>(new ArcIndex());
    const int levels = d.slice_count() + 1;
    idx->port_offset_.resize(levels + 1);
    idx->port_offset_[0] = 0;
    for (int l = 0; l < levels; ++l)
        idx->port_offset_[l + 1] = idx->port_offset_[l] + static_cast<int>(d.level(l).size());
    const int total_ports = idx->port_offset_[levels];

    UnionFind uf(total_ports);
    auto port = [&](int level, int pos) { return idx->port_offset_[level] + pos; };

    struct PendingCrossing {
        int over_port, under_in_port, under_out_port, sign, slice, piece;
    };
    std::vector<PendingCrossing> pending;

    for (int s = 0; s < d.slice_count(); ++s) {
        int tc = 0, bc = 0;
        const auto& pieces = d.slice(s).pieces;
        for (int pi = 0; pi < static_cast<int>(pieces.size()); ++pi) {
            GenKind k = pieces[pi];
            switch (k) {
            case GenKind::IdDown:
            case GenKind::IdUp:
                uf.unite(port(s, tc), port(s + 1, bc));
                tc += 1;
                bc += 1;
                break;
            case GenKind::CapLR:
            case GenKind::CapRL:
                uf.unite(port(s, tc), port(s, tc + 1));
                tc += 2;
                break;
            case GenKind::CupLR:
            case GenKind::CupRL:
                uf.unite(port(s + 1, bc), port(s + 1, bc + 1));
                bc += 2;
                break;
            case GenKind::XPlus:
                // over: top-right to bottom-left; under: top-left to bottom-right
                uf.unite(port(s, tc + 1), port(s + 1, bc));
                pending.push_back(
                    {port(s, tc + 1), port(s, tc), port(s + 1, bc + 1), +1, s, pi});
                tc += 2;
                bc += 2;
                break;
            case GenKind::XMinus:
                // over: top-left to bottom-right; under: top-right to bottom-left
                uf.unite(port(s, tc), port(s + 1, bc + 1));
                pending.push_back(
                    {port(s, tc), port(s, tc + 1), port(s + 1, bc), -1, s, pi});
                tc += 2;
                bc += 2;
                break;
            }
        }
    }

    // compress representatives to dense arc ids in order of first port
    std::vector<int> arc_id(total_ports, -1);
    idx->arc_of_port_.resize(total_ports);
    int next = 0;
    for (int p = 0; p < total_ports; ++p) {
        int r = uf.find(p);
        if (arc_id[r] < 0) arc_id[r] = next++;
        idx->arc_of_port_[p] = arc_id[r];
    }
    idx->arc_count_ = next;

    for (const auto& pc : pending)
        idx->crossings_.push_back({idx->arc_of_port_[uf.find(pc.over_port)],
                                   idx->arc_of_port_[uf.find(pc.under_in_port)],
                                   idx->arc_of_port_[uf.find(pc.under_out_port)], pc.sign,
                                   pc.slice, pc.piece});

    for (int pos = 0; pos < static_cast<int>(d.top().size()); ++pos)
        idx->top_arcs_.push_back(idx->arc_at(0, pos));
    for (int pos = 0; pos < static_cast<int>(d.bottom().size()); ++pos)
        idx->bottom_arcs_.push_back(idx->arc_at(levels - 1, pos));
    return idx;
}

} // namespace xmodlink
