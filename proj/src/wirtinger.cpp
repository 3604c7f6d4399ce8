#include "xmodlink/wirtinger.hpp"

#include <functional>
#include <set>

namespace xmodlink {

std::vector<LongitudeFactor> WirtingerData::partial_longitude(int k) const {
    std::vector<LongitudeFactor> out;
    for (int i = 0; i < k && i < static_cast<int>(crossings.size()); ++i) {
        out.push_back(longitude[2 * i]);
        out.push_back(longitude[2 * i + 1]);
    }
    return out;
}

namespace {

struct PiecePos {
    int piece = -1;
    int offset = -1; // position within the piece's top (or bottom) boundary
    int col_start = -1;
};

struct SliceMaps {
    std::vector<PiecePos> by_top;
    std::vector<PiecePos> by_bottom;
    std::vector<int> top_start;    // per piece
    std::vector<int> bottom_start; // per piece
};

SliceMaps map_slice(const Slice& s) {
    SliceMaps m;
    int tc = 0, bc = 0;
    for (int pi = 0; pi < static_cast<int>(s.pieces.size()); ++pi) {
        GenKind k = s.pieces[pi];
        int wt = static_cast<int>(gen_top(k).size());
        int wb = static_cast<int>(gen_bottom(k).size());
        m.top_start.push_back(tc);
        m.bottom_start.push_back(bc);
        for (int i = 0; i < wt; ++i) m.by_top.push_back({pi, i, tc});
        for (int i = 0; i < wb; ++i) m.by_bottom.push_back({pi, i, bc});
        tc += wt;
        bc += wb;
    }
    return m;
}

} // namespace

WirtingerData diagram_to_wirtinger(const SlicedDiagram& d) {
    const Signature one_down = {Dir::Down};
    if (d.top() != one_down || d.bottom() != one_down)
        throw Error("NotAStringKnot",
                    "a string knot has a single downward strand at top and bottom");

    std::vector<SliceMaps> maps;
    maps.reserve(d.slice_count());
    int total_ports = static_cast<int>(d.top().size());
    for (int s = 0; s < d.slice_count(); ++s) {
        maps.push_back(map_slice(d.slice(s)));
        total_ports += static_cast<int>(d.level(s + 1).size());
    }

    // crossing ids in slice-scan order (matching ArcIndex)
    std::vector<std::vector<int>> crossing_id(d.slice_count());
    int n_crossings = 0;
    for (int s = 0; s < d.slice_count(); ++s) {
        crossing_id[s].assign(d.slice(s).pieces.size(), -1);
        for (int pi = 0; pi < static_cast<int>(d.slice(s).pieces.size()); ++pi) {
            GenKind k = d.slice(s).pieces[pi];
            if (k == GenKind::XPlus || k == GenKind::XMinus)
                crossing_id[s][pi] = n_crossings++;
        }
    }

    struct Event {
        int crossing;
        bool under;
    };
    std::vector<Event> events;

    std::set<std::pair<int, int>> visited; // (level, pos)
    int level = 0, pos = 0;
    bool moving_down = true;
    visited.insert({0, 0});
    while (true) {
        if (moving_down) {
            if (level == d.slice_count()) break; // reached the bottom endpoint
            const auto& m = maps[level];
            const PiecePos pp = m.by_top[pos];
            GenKind k = d.slice(level).pieces[pp.piece];
            int bs = m.bottom_start[pp.piece];
            switch (k) {
            case GenKind::IdDown:
                pos = bs;
                ++level;
                break;
            case GenKind::XPlus:
                if (pp.offset == 0) { // under-in
                    events.push_back({crossing_id[level][pp.piece], true});
                    pos = bs + 1;
                } else { // over
                    events.push_back({crossing_id[level][pp.piece], false});
                    pos = bs;
                }
                ++level;
                break;
            case GenKind::XMinus:
                if (pp.offset == 0) { // over
                    events.push_back({crossing_id[level][pp.piece], false});
                    pos = bs + 1;
                } else { // under-in
                    events.push_back({crossing_id[level][pp.piece], true});
                    pos = bs;
                }
                ++level;
                break;
            case GenKind::CapLR: // enter left leg (v), leave right leg going up
                pos = m.top_start[pp.piece] + 1;
                moving_down = false;
                break;
            case GenKind::CapRL:
                pos = m.top_start[pp.piece];
                moving_down = false;
                break;
            default:
                throw Error("NotAStringKnot", "inconsistent strand orientation in walk");
            }
        } else {
            if (level == 0)
                throw Error("NotAStringKnot", "strand exits through the top");
            const auto& m = maps[level - 1];
            const PiecePos pp = m.by_bottom[pos];
            GenKind k = d.slice(level - 1).pieces[pp.piece];
            int ts = m.top_start[pp.piece];
            switch (k) {
            case GenKind::IdUp:
                pos = ts;
                --level;
                break;
            case GenKind::CupLR: // enter left leg (^) from below, leave right leg down
                pos = m.bottom_start[pp.piece] + 1;
                moving_down = true;
                break;
            case GenKind::CupRL:
                pos = m.bottom_start[pp.piece];
                moving_down = true;
                break;
            default:
                throw Error("NotAStringKnot", "inconsistent strand orientation in walk");
            }
        }
        if (!visited.insert({moving_down ? level : level, pos}).second)
            throw Error("MultipleComponents", "walk revisits a strand point");
    }

    if (static_cast<int>(visited.size()) != total_ports)
        throw Error("MultipleComponents", "diagram has strands not reachable from the top");

    // assemble arcs in travel order
    WirtingerData wd;
    std::vector<int> over_travel_arc(n_crossings, -1);
    std::vector<int> under_travel_index(n_crossings, -1);
    std::vector<int> sign_of(n_crossings, 0);
    for (int s = 0; s < d.slice_count(); ++s)
        for (int pi = 0; pi < static_cast<int>(d.slice(s).pieces.size()); ++pi)
            if (crossing_id[s][pi] >= 0)
                sign_of[crossing_id[s][pi]] =
                    d.slice(s).pieces[pi] == GenKind::XPlus ? +1 : -1;

    int arc = 0;
    int under_count = 0;
    for (const auto& ev : events) {
        if (ev.under) {
            under_travel_index[ev.crossing] = under_count++;
            ++arc;
        } else {
            over_travel_arc[ev.crossing] = arc;
        }
    }
    wd.arc_count = arc + 1;
    wd.base_arc = 0;
    wd.crossings.resize(under_count);
    for (int c = 0; c < n_crossings; ++c) {
        if (under_travel_index[c] < 0 || over_travel_arc[c] < 0)
            throw Error("MultipleComponents", "crossing not fully traversed");
        int i = under_travel_index[c];
        wd.crossings[i] = {i, i + 1, over_travel_arc[c], sign_of[c]};
    }
    for (const auto& cr : wd.crossings) {
        wd.longitude.push_back({cr.under_in_arc, -cr.sign});
        wd.longitude.push_back({cr.over_arc, +cr.sign});
    }
    return wd;
}

namespace {

int evaluate_factors(const FiniteGroup& g, const std::vector<LongitudeFactor>& factors,
                     const std::vector<int>& colour) {
    int acc = g.identity();
    for (const auto& f : factors) {
        int v = colour[f.arc];
        acc = g.mult(acc, f.exponent > 0 ? v : g.inv(v));
    }
    return acc;
}

} // namespace

std::map<int, Integer> eisermann_oracle(const GroupPtr& g, const GroupElement& x,
                                        const SlicedDiagram& d) {
    require_same_group(g, x.group, "eisermann_oracle");
    WirtingerData wd = diagram_to_wirtinger(d);
    const FiniteGroup& G = *g;
    const int n = G.order();

    std::vector<int> colour(wd.arc_count, -1);
    colour[wd.base_arc] = x.index;
    std::map<int, Integer> buckets;

    // under_out = over^{-sign} under_in over^{sign}
    auto forward = [&](int o, int u, int s) {
        return s > 0 ? G.mult(G.mult(G.inv(o), u), o) : G.mult(G.mult(o, u), G.inv(o));
    };
    auto backward = [&](int o, int w, int s) {
        return s > 0 ? G.mult(G.mult(o, w), G.inv(o)) : G.mult(G.mult(G.inv(o), w), o);
    };

    std::function<void(std::vector<int>&)> solve = [&](std::vector<int>& col) {
        // propagate
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& cr : wd.crossings) {
                int o = col[cr.over_arc], u = col[cr.under_in_arc], w = col[cr.under_out_arc];
                if (o >= 0 && u >= 0 && w < 0) {
                    col[cr.under_out_arc] = forward(o, u, cr.sign);
                    changed = true;
                } else if (o >= 0 && w >= 0 && u < 0) {
                    col[cr.under_in_arc] = backward(o, w, cr.sign);
                    changed = true;
                } else if (o >= 0 && u >= 0 && w >= 0 && forward(o, u, cr.sign) != w)
                    return;
            }
        }
        // branch: prefer an unknown over-arc with both under colours known
        for (const auto& cr : wd.crossings) {
            int o = col[cr.over_arc], u = col[cr.under_in_arc], w = col[cr.under_out_arc];
            if (o < 0 && u >= 0 && w >= 0) {
                for (int cand = 0; cand < n; ++cand)
                    if (forward(cand, u, cr.sign) == w) {
                        std::vector<int> next = col;
                        next[cr.over_arc] = cand;
                        solve(next);
                    }
                return;
            }
        }
        for (int a = 0; a < wd.arc_count; ++a)
            if (col[a] < 0) {
                for (int cand = 0; cand < n; ++cand) {
                    std::vector<int> next = col;
                    next[a] = cand;
                    solve(next);
                }
                return;
            }
        buckets[evaluate_factors(G, wd.longitude, col)] += 1;
    };
    solve(colour);
    return buckets;
}

std::map<int, Integer> trefoil_closed_form(const GroupPtr& gp, const GroupElement& x, int sign) {
    require_same_group(gp, x.group, "trefoil_closed_form");
    const FiniteGroup& G = *gp;
    const int n = G.order();
    const int xi = x.index;
    const int xinv = G.inv(xi);
    auto prod = [&](std::initializer_list<int> xs) {
        int acc = G.identity();
        for (int v : xs) acc = G.mult(acc, v);
        return acc;
    };
    std::map<int, Integer> out;
    if (sign > 0) {
        // positive trefoil: bucket by g, count h with the closure equation
        // x^2 g h^-1 x^-1 h g^-1 x^-1 g = h and top value
        // x^3 h g^-1 x^-1 g h^-1 x^-1 h g^-1 x^-1 g = 1
        for (int g = 0; g < n; ++g)
            for (int h = 0; h < n; ++h) {
                int closure = prod({xi, xi, g, G.inv(h), xinv, h, G.inv(g), xinv, g});
                if (closure != h) continue;
                int top = prod({xi, xi, xi, h, G.inv(g), xinv, g, G.inv(h), xinv, h,
                                G.inv(g), xinv, g});
                if (top == G.identity()) out[g] += 1;
            }
    } else {
        // negative trefoil: bucket by h, count g with
        // x^-3 h g^-1 x g h^-1 x h g^-1 x g = g and
        // x^-2 g h^-1 x h g^-1 x g = 1
        for (int h = 0; h < n; ++h)
            for (int g = 0; g < n; ++g) {
                int closure =
                    prod({xinv, xinv, xinv, h, G.inv(g), xi, g, G.inv(h), xi, h, G.inv(g),
                          xi, g});
                if (closure != g) continue;
                int second = prod({xinv, xinv, g, G.inv(h), xi, h, G.inv(g), xi, g});
                if (second == G.identity()) out[h] += 1;
            }
    }
    return out;
}

} // namespace xmodlink
