#include "xmodlink/pairs.hpp"

#include <sstream>

namespace xmodlink {

namespace {
constexpr int kMaxWitnesses = 100;
}

std::string axiom_name(AxiomId id) {
    switch (id) {
    case AxiomId::R1: return "R1";
    case AxiomId::R2: return "R2";
    case AxiomId::R3: return "R3";
    case AxiomId::R3p: return "R3'";
    case AxiomId::F1: return "F1";
    case AxiomId::F2: return "F2";
    }
    return "?";
}

void AxiomReport::add(AxiomId id, std::vector<int> witness) {
    passed = false;
    if (static_cast<int>(violations.size()) < kMaxWitnesses)
        violations.push_back({id, std::move(witness)});
}

std::string AxiomReport::describe(const GroupPtr& g) const {
    if (passed) return "all axioms hold";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << axiom_name(v.axiom) << " fails at (";
        for (size_t i = 0; i < v.witness.size(); ++i) {
            if (i) os << ", ";
            os << g->name(v.witness[i]);
        }
        os << ")\n";
    }
    return os.str();
}

PairPtr ReidemeisterPair::make(XmodPtr xm, const std::vector<std::vector<int>>& psi,
                               const std::vector<std::vector<int>>& phi) {
    const int n = xm->base()->order();
    const int ne = xm->fiber()->order();
    auto check_table = [&](const std::vector<std::vector<int>>& t, const char* which) {
        if (static_cast<int>(t.size()) != n)
            throw Error("IncompleteTable", std::string(which) + " table must cover G x G");
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != n)
                throw Error("IncompleteTable", std::string(which) + " table row incomplete");
            for (int v : row)
                if (v < 0 || v >= ne)
                    throw Error("IncompleteTable",
                                std::string(which) + " table value is not a fiber element");
        }
    };
    check_table(psi, "psi");
    check_table(phi, "phi");

    auto p = std::shared_ptr<ReidemeisterPair>(new ReidemeisterPair());
    p->xm_ = std::move(xm);
    p->n_ = n;
    p->psi_.resize(static_cast<size_t>(n) * n);
    p->phi_.resize(static_cast<size_t>(n) * n);
    p->zpsi_.resize(static_cast<size_t>(n) * n);
    p->zphi_.resize(static_cast<size_t>(n) * n);
    const auto& g = *p->xm_->base();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            size_t i = p->flat(x, y);
            p->psi_[i] = psi[x][y];
            p->phi_[i] = phi[x][y];
            // zpsi = bnd(psi)^-1 X Y X^-1
            p->zpsi_[i] = g.mult(g.inv(p->xm_->bnd(psi[x][y])), g.conj(x, y));
            // zphi = X^-1 bnd(phi)^-1 Y X
            p->zphi_[i] =
                g.mult(g.mult(g.inv(x), g.mult(g.inv(p->xm_->bnd(phi[x][y])), y)), x);
        }
    p->zpsi_inv_.assign(static_cast<size_t>(n) * n, {});
    p->zphi_inv_.assign(static_cast<size_t>(n) * n, {});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            p->zpsi_inv_[p->flat(x, p->zpsi_[p->flat(x, y)])].push_back(y);
            p->zphi_inv_[p->flat(x, p->zphi_[p->flat(x, y)])].push_back(y);
        }
    return p;
}

namespace {

// R3 with Z = zphi(Y,X), V = zphi(T,Y), W = zphi(T,X).
bool r3_holds(const ReidemeisterPair& p, int x, int y, int t) {
    const auto& g = *p.base();
    const auto& e = *p.fiber();
    const auto& xm = *p.xmod();
    int z = p.zphi(y, x);
    int v = p.zphi(t, y);
    int w = p.zphi(t, x);
    int lhs = e.mult(e.mult(p.phi(y, x), xm.act(y, p.phi(t, z))), p.phi(t, y));
    int rhs = e.mult(e.mult(xm.act(x, p.phi(t, y)), p.phi(t, x)), xm.act(t, p.phi(v, w)));
    (void)g;
    return lhs == rhs;
}

// R3' with A = zpsi(X,Y), B = zpsi(X,Z), C = zpsi(Y,Z), D = zpsi(X,C).
bool r3p_holds(const ReidemeisterPair& p, int x, int y, int z) {
    const auto& e = *p.fiber();
    const auto& xm = *p.xmod();
    int a = p.zpsi(x, y);
    int b = p.zpsi(x, z);
    int c = p.zpsi(y, z);
    int d = p.zpsi(x, c);
    int lhs = e.mult(e.mult(p.psi(x, y), xm.act(a, p.psi(x, z))), p.psi(a, b));
    int rhs = e.mult(e.mult(xm.act(x, p.psi(y, z)), p.psi(x, c)), xm.act(d, p.psi(x, y)));
    return lhs == rhs;
}

bool r2_holds(const ReidemeisterPair& p, int x, int y) {
    int z = p.zphi(x, y);
    return p.fiber()->mult(p.phi(x, y), p.psi(x, z)) == p.fiber()->identity();
}

} // namespace

AxiomReport check_unframed(const ReidemeisterPair& p, bool also_r3prime) {
    AxiomReport report;
    const int n = p.base()->order();
    const int one = p.fiber()->identity();

    for (int x = 0; x < n; ++x)
        if (p.psi(x, x) != one) report.add(AxiomId::R1, {x});

    bool r2_all = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!r2_holds(p, x, y)) {
                r2_all = false;
                report.add(AxiomId::R2, {x, y});
            }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int t = 0; t < n; ++t) {
                bool r3 = r3_holds(p, x, y, t);
                if (!r3) report.add(AxiomId::R3, {x, y, t});
                if (also_r3prime) {
                    bool r3p = r3p_holds(p, x, y, t);
                    if (!r3p) report.add(AxiomId::R3p, {x, y, t});
                    if (r2_all && r3 != r3p) report.add(AxiomId::R3p, {x, y, t});
                }
            }
    return report;
}

std::pair<AxiomReport, std::optional<FramedStructure>> check_framed(const ReidemeisterPair& p) {
    AxiomReport report;
    const auto& g = *p.base();
    const int n = g.order();

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!r2_holds(p, x, y)) report.add(AxiomId::R2, {x, y});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int t = 0; t < n; ++t)
                if (!r3_holds(p, x, y, t)) report.add(AxiomId::R3, {x, y, t});

    // (i) bnd(phi(A,Z)) A = Z must have a unique solution A =: f(Z)
    FramedStructure fs;
    fs.f.assign(n, -1);
    for (int zc = 0; zc < n; ++zc) {
        int count = 0;
        for (int a = 0; a < n; ++a)
            if (g.mult(p.xmod()->bnd(p.phi(a, zc)), a) == zc) {
                ++count;
                fs.f[zc] = a;
            }
        if (count != 1) report.add(AxiomId::F1, {zc});
    }

    // (ii) g(A) = bnd(psi(A,A))^-1 A and f o g = g o f = id
    fs.g.assign(n, -1);
    for (int a = 0; a < n; ++a) fs.g[a] = g.mult(g.inv(p.xmod()->bnd(p.psi(a, a))), a);
    if (report.passed) {
        for (int a = 0; a < n; ++a) {
            if (fs.f[fs.g[a]] != a) report.add(AxiomId::F2, {a});
            if (fs.g[fs.f[a]] != a) report.add(AxiomId::F2, {a});
        }
    }

    if (!report.passed) return {report, std::nullopt};
    return {report, fs};
}

PairPtr pair_from_rack(const RackPtr& r, const GroupPtr& group_law) {
    if (r->size() != group_law->order())
        throw Error("SizeMismatch", "rack and group law must share one carrier");
    auto xm = xmod_identity_conj(group_law);
    const auto& g = *group_law;
    const int n = g.order();
    std::vector<std::vector<int>> psi(n, std::vector<int>(n)), phi(n, std::vector<int>(n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            psi[b][a] = g.mult(g.conj(b, a), g.inv(r->rop(b, a)));
            phi[b][a] = g.mult(g.mult(g.mult(a, b), g.inv(r->lop(a, b))), g.inv(b));
        }
    return ReidemeisterPair::make(xm, psi, phi);
}

PairPtr pair_from_rack_cocycle(const RackCocycle& c, const GroupPtr& group_law) {
    const auto& r = *c.rack();
    if (r.size() != group_law->order())
        throw Error("SizeMismatch", "rack and group law must share one carrier");
    auto xm = xmod_product(group_law, c.values());
    const auto& g = *group_law;
    const auto& v = *c.values();
    const int n = g.order();
    const int nv = v.order();
    std::vector<std::vector<int>> psi(n, std::vector<int>(n)), phi(n, std::vector<int>(n));
    for (int b = 0; b < n; ++b)
        for (int a = 0; a < n; ++a) {
            int first = g.mult(g.conj(b, a), g.inv(r.rop(b, a)));
            psi[b][a] = product_fiber_index(nv, first, c.w(r.rop(b, a), b));
            int second = g.mult(g.mult(g.mult(a, b), g.inv(r.lop(a, b))), g.inv(b));
            phi[b][a] = product_fiber_index(nv, second, v.inv(c.w(a, b)));
        }
    return ReidemeisterPair::make(xm, psi, phi);
}

namespace {

// [g,h][h g^-1, x] and [h x^-1, g x^-1], all in the ambient group.
int eis_psi(const FiniteGroup& g, int xi, int a, int b) {
    return g.mult(g.comm(a, b), g.comm(g.mult(b, g.inv(a)), xi));
}
int eis_phi(const FiniteGroup& g, int xi, int a, int b) {
    return g.comm(g.mult(b, g.inv(xi)), g.mult(a, g.inv(xi)));
}

} // namespace

PairPtr eisermann_pair(const GroupPtr& g, const GroupElement& x, bool on_derived) {
    require_same_group(g, x.group, "eisermann_pair");
    if (!on_derived) {
        auto xm = xmod_identity_conj(g);
        const int n = g->order();
        std::vector<std::vector<int>> psi(n, std::vector<int>(n)), phi(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                psi[a][b] = eis_psi(*g, x.index, a, b);
                phi[a][b] = eis_phi(*g, x.index, a, b);
            }
        return ReidemeisterPair::make(xm, psi, phi);
    }
    auto [derived, incl] = commutator_subgroup(g);
    std::vector<int> back(g->order(), -1);
    for (int i = 0; i < derived->order(); ++i) back[incl.apply(i)] = i;
    auto xm = xmod_identity_conj(derived);
    const int n = derived->order();
    std::vector<std::vector<int>> psi(n, std::vector<int>(n)), phi(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int pv = eis_psi(*g, x.index, incl.apply(a), incl.apply(b));
            int fv = eis_phi(*g, x.index, incl.apply(a), incl.apply(b));
            if (back[pv] < 0 || back[fv] < 0)
                throw Error("NotClosed", "formula value escapes the derived subgroup");
            psi[a][b] = back[pv];
            phi[a][b] = back[fv];
        }
    return ReidemeisterPair::make(xm, psi, phi);
}

PairPtr lifted_eisermann_pair(const CentralExtension& ext, const GroupElement& x) {
    require_same_group(ext.quotient(), x.group, "lifted_eisermann_pair");
    auto xm = xmod_from_central_extension(ext);
    const auto& g = *ext.quotient();
    const auto& e = *ext.total();
    const int n = g.order();
    const int xi = x.index;
    std::vector<std::vector<int>> psi(n, std::vector<int>(n)), phi(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            psi[a][b] = e.mult(ext.bracket(a, b), ext.bracket(g.mult(b, g.inv(a)), xi));
            phi[a][b] = ext.bracket(g.mult(b, g.inv(xi)), g.mult(a, g.inv(xi)));
        }
    return ReidemeisterPair::make(xm, psi, phi);
}

bool is_eisermann_lifting(const ReidemeisterPair& p, const GroupElement& x) {
    require_same_group(p.base(), x.group, "is_eisermann_lifting");
    const auto& g = *p.base();
    const int n = g.order();
    for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m) {
            if (p.xmod()->bnd(p.phi(l, m)) != eis_phi(g, x.index, l, m)) return false;
            if (p.xmod()->bnd(p.psi(l, m)) != eis_psi(g, x.index, l, m)) return false;
        }
    return check_unframed(p).passed;
}

} // namespace xmodlink
