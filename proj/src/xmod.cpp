#include "xmodlink/xmod.hpp"

#include <string>

namespace xmodlink {

XmodPtr CrossedModule::make(GroupPtr base, GroupPtr fiber, GroupHom boundary,
                            const std::vector<std::vector<int>>& action) {
    if (!same_group(boundary.source(), fiber) || !same_group(boundary.target(), base))
        throw Error("NotAHomomorphism", "boundary must be a hom from the fiber to the base");
    const int ng = base->order();
    const int ne = fiber->order();
    if (static_cast<int>(action.size()) != ng)
        throw Error("NotAnAction", "action table must have one row per base element");
    std::vector<int> flat(static_cast<size_t>(ng) * ne);
    for (int g = 0; g < ng; ++g) {
        if (static_cast<int>(action[g].size()) != ne)
            throw Error("NotAnAction", "action row " + base->name(g) + " has wrong length");
        for (int e = 0; e < ne; ++e) {
            int v = action[g][e];
            if (v < 0 || v >= ne)
                throw Error("NotAnAction", "action value out of range at (" + base->name(g) +
                                               ", " + fiber->name(e) + ")");
            flat[static_cast<size_t>(g) * ne + e] = v;
        }
    }
    auto act = [&](int g, int e) { return flat[static_cast<size_t>(g) * ne + e]; };

    // left action: 1.e = e and (gh).e = g.(h.e)
    for (int e = 0; e < ne; ++e)
        if (act(base->identity(), e) != e)
            throw Error("NotAnAction", "identity does not act trivially on " + fiber->name(e));
    for (int g = 0; g < ng; ++g)
        for (int h = 0; h < ng; ++h)
            for (int e = 0; e < ne; ++e)
                if (act(base->mult(g, h), e) != act(g, act(h, e)))
                    throw Error("NotAnAction", "(gh).e != g.(h.e) at (" + base->name(g) + ", " +
                                                   base->name(h) + ", " + fiber->name(e) + ")");

    // each g.(-) is an automorphism of E
    for (int g = 0; g < ng; ++g)
        for (int e = 0; e < ne; ++e)
            for (int f = 0; f < ne; ++f)
                if (act(g, fiber->mult(e, f)) != fiber->mult(act(g, e), act(g, f)))
                    throw Error("NotAutomorphisms",
                                "g.(ef) != (g.e)(g.f) at (" + base->name(g) + ", " +
                                    fiber->name(e) + ", " + fiber->name(f) + ")");

    // Peiffer 1: bnd(g.e) = g bnd(e) g^-1
    for (int g = 0; g < ng; ++g)
        for (int e = 0; e < ne; ++e)
            if (boundary.apply(act(g, e)) != base->conj(g, boundary.apply(e)))
                throw Error("Peiffer1Violation", "witness g=" + base->name(g) +
                                                     ", e=" + fiber->name(e));

    // Peiffer 2: bnd(e).f = e f e^-1
    for (int e = 0; e < ne; ++e)
        for (int f = 0; f < ne; ++f)
            if (act(boundary.apply(e), f) != fiber->conj(e, f))
                throw Error("Peiffer2Violation", "witness e=" + fiber->name(e) +
                                                     ", f=" + fiber->name(f));

    return XmodPtr(new CrossedModule(std::move(base), std::move(fiber), std::move(boundary),
                                     std::move(flat)));
}

XmodPtr xmod_identity_conj(const GroupPtr& g) {
    const int n = g->order();
    std::vector<int> id_table(n);
    for (int i = 0; i < n; ++i) id_table[i] = i;
    std::vector<std::vector<int>> action(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int e = 0; e < n; ++e) action[a][e] = g->conj(a, e);
    return CrossedModule::make(g, g, GroupHom(g, g, id_table), action);
}

XmodPtr xmod_product(const GroupPtr& g, const GroupPtr& v) {
    if (!v->is_abelian())
        throw Error("NonAbelianV", "the cocycle value group must be abelian");
    const int ng = g->order();
    const int nv = v->order();
    const int ne = ng * nv;

    std::vector<std::string> names(ne);
    std::vector<std::vector<int>> table(ne, std::vector<int>(ne));
    for (int h = 0; h < ng; ++h)
        for (int w = 0; w < nv; ++w)
            names[product_fiber_index(nv, h, w)] = "(" + g->name(h) + "," + v->name(w) + ")";
    for (int h1 = 0; h1 < ng; ++h1)
        for (int w1 = 0; w1 < nv; ++w1)
            for (int h2 = 0; h2 < ng; ++h2)
                for (int w2 = 0; w2 < nv; ++w2)
                    table[product_fiber_index(nv, h1, w1)][product_fiber_index(nv, h2, w2)] =
                        product_fiber_index(nv, g->mult(h1, h2), v->mult(w1, w2));
    auto fiber = FiniteGroup::from_cayley(std::move(names), table);

    std::vector<int> bnd(ne);
    for (int h = 0; h < ng; ++h)
        for (int w = 0; w < nv; ++w) bnd[product_fiber_index(nv, h, w)] = h;

    std::vector<std::vector<int>> action(ng, std::vector<int>(ne));
    for (int a = 0; a < ng; ++a)
        for (int h = 0; h < ng; ++h)
            for (int w = 0; w < nv; ++w)
                action[a][product_fiber_index(nv, h, w)] =
                    product_fiber_index(nv, g->conj(a, h), w);

    return CrossedModule::make(g, fiber, GroupHom(fiber, g, std::move(bnd)), action);
}

} // namespace xmodlink
