#include "xmodlink/catgroup.hpp"

#include <cassert>

namespace xmodlink {

bool operator==(const CGMorphism& a, const CGMorphism& b) {
    return a.xm.get() == b.xm.get() && a.source == b.source && a.label == b.label;
}

CGMorphism cg_identity(const XmodPtr& xm, int object) {
    return {xm, object, xm->fiber()->identity()};
}

CGMorphism cg_compose(const CGMorphism& m1, const CGMorphism& m2) {
    if (m1.xm.get() != m2.xm.get())
        throw Error("ModuleMismatch", "composition across crossed modules");
    if (m1.target() != m2.source)
        throw Error("NotComposable", "target " + m1.xm->base()->name(m1.target()) +
                                         " does not match source " +
                                         m2.xm->base()->name(m2.source));
    return {m1.xm, m1.source, m1.xm->fiber()->mult(m2.label, m1.label)};
}

CGMorphism cg_tensor(const CGMorphism& m1, const CGMorphism& m2) {
    if (m1.xm.get() != m2.xm.get())
        throw Error("ModuleMismatch", "tensor across crossed modules");
    const auto& g = *m1.xm->base();
    const auto& e = *m1.xm->fiber();
    int v = m1.target();
    return {m1.xm, g.mult(m1.source, m2.source), e.mult(m1.xm->act(v, m2.label), m1.label)};
}

namespace {

[[noreturn]] void bad_colours(GenKind kind) {
    throw Error("InconsistentColours", std::string("colours violate the rule of generator ") +
                                           std::string(gen_token(kind)));
}

} // namespace

CGMorphism generator_morphism(GenKind kind, std::span<const int> top,
                              std::span<const int> bottom, const ReidemeisterPair& pair) {
    const auto& xm = pair.xmod();
    const auto& g = *xm->base();
    switch (kind) {
    case GenKind::IdDown:
        return {xm, top[0], xm->fiber()->identity()};
    case GenKind::IdUp:
        return {xm, g.inv(top[0]), xm->fiber()->identity()};
    case GenKind::XPlus: {
        // top (Z, X), bottom (X, Y) with Z = zpsi(X, Y); label psi(X, Y)
        int z = top[0], x = top[1], y = bottom[1];
        if (bottom[0] != x || z != pair.zpsi(x, y)) bad_colours(kind);
        return {xm, g.mult(z, x), pair.psi(x, y)};
    }
    case GenKind::XMinus: {
        // top (X, Z), bottom (Y, X) with Z = zphi(X, Y); label phi(X, Y)
        int x = top[0], z = top[1], y = bottom[0];
        if (bottom[1] != x || z != pair.zphi(x, y)) bad_colours(kind);
        return {xm, g.mult(x, z), pair.phi(x, y)};
    }
    case GenKind::CapLR:
    case GenKind::CapRL:
        if (top[0] != top[1]) bad_colours(kind);
        return cg_identity(xm, g.identity());
    case GenKind::CupLR:
    case GenKind::CupRL:
        if (bottom[0] != bottom[1]) bad_colours(kind);
        return cg_identity(xm, g.identity());
    }
    bad_colours(kind);
}

CGMorphism evaluate_diagram(const SlicedDiagram& d, const Colouring& col,
                            const ReidemeisterPair& pair) {
    const auto& xm = pair.xmod();
    CGMorphism result = cg_identity(xm, xm->base()->identity());
    bool first = true;
    std::vector<int> top_cols, bottom_cols;
    for (int s = 0; s < d.slice_count(); ++s) {
        CGMorphism row = cg_identity(xm, xm->base()->identity());
        int tc = 0, bc = 0;
        for (GenKind k : d.slice(s).pieces) {
            const int wt = static_cast<int>(gen_top(k).size());
            const int wb = static_cast<int>(gen_bottom(k).size());
            top_cols.clear();
            bottom_cols.clear();
            for (int i = 0; i < wt; ++i) top_cols.push_back(col.colour_at(s, tc + i));
            for (int i = 0; i < wb; ++i) bottom_cols.push_back(col.colour_at(s + 1, bc + i));
            row = cg_tensor(row, generator_morphism(k, top_cols, bottom_cols, pair));
            tc += wt;
            bc += wb;
        }
        result = first ? row : cg_compose(result, row);
        first = false;
    }
    return result;
}

EnhancedWord boundary_word(const SlicedDiagram& d, const Colouring& col, bool top,
                           const GroupPtr& g) {
    EnhancedWord w{g, {}};
    const int level = top ? 0 : d.slice_count();
    const Signature& sig = top ? d.top() : d.bottom();
    for (int pos = 0; pos < static_cast<int>(sig.size()); ++pos)
        w.entries.push_back({col.colour_at(level, pos), sig[pos] == Dir::Up});
    return w;
}

} // namespace xmodlink
