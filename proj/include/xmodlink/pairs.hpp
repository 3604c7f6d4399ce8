#pragma once

#include "xmodlink/central_extension.hpp"
#include "xmodlink/group.hpp"
#include "xmodlink/rack.hpp"
#include "xmodlink/xmod.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace xmodlink {

class ReidemeisterPair;
using PairPtr = std::shared_ptr<const ReidemeisterPair>;

// Two functions psi, phi: G x G -> E over a crossed module, together with the
// derived arc tables  zpsi(X,Y) = bnd(psi(X,Y))^-1 X Y X^-1  and
// zphi(X,Y) = X^-1 bnd(phi(X,Y))^-1 Y X  and their preimage multimaps.
// At a positive crossing with over-colour X and lower under-colour Y the
// upper under-colour is zpsi(X,Y); negatively, zphi(X,Y).
class ReidemeisterPair {
public:
    // Tables are psi[X][Y], phi[X][Y] with values in the fiber.
    // Throws IncompleteTable.
    static PairPtr make(XmodPtr xm, const std::vector<std::vector<int>>& psi,
                        const std::vector<std::vector<int>>& phi);

    const XmodPtr& xmod() const noexcept { return xm_; }
    const GroupPtr& base() const noexcept { return xm_->base(); }
    const GroupPtr& fiber() const noexcept { return xm_->fiber(); }

    int psi(int x, int y) const { return psi_[flat(x, y)]; }
    int phi(int x, int y) const { return phi_[flat(x, y)]; }
    int zpsi(int x, int y) const { return zpsi_[flat(x, y)]; }
    int zphi(int x, int y) const { return zphi_[flat(x, y)]; }

    // All Y with zpsi(X, Y) = Z (resp. zphi); crossings are relational
    // constraints, so these may hold zero or several solutions.
    const std::vector<int>& zpsi_preimages(int x, int z) const { return zpsi_inv_[flat(x, z)]; }
    const std::vector<int>& zphi_preimages(int x, int z) const { return zphi_inv_[flat(x, z)]; }

private:
    ReidemeisterPair() = default;
    size_t flat(int x, int y) const { return static_cast<size_t>(x) * n_ + y; }

    XmodPtr xm_;
    int n_ = 0;
    std::vector<int> psi_, phi_;
    std::vector<int> zpsi_, zphi_;
    std::vector<std::vector<int>> zpsi_inv_, zphi_inv_;
};

enum class AxiomId { R1, R2, R3, R3p, F1, F2 };
std::string axiom_name(AxiomId id);

struct AxiomViolation {
    AxiomId axiom;
    std::vector<int> witness; // base-group element indices
};

struct AxiomReport {
    bool passed = true;
    std::vector<AxiomViolation> violations; // at most 100, in scan order

    void add(AxiomId id, std::vector<int> witness);
    std::string describe(const GroupPtr& g) const;
};

// f and g as dense tables over G; f o g = g o f = id holds by construction.
struct FramedStructure {
    std::vector<int> f;
    std::vector<int> g;
};

// Exhaustive R1/R2/R3 check; with also_r3prime the alternative R3' form is
// checked too, along with per-triple agreement of R3 and R3' whenever R2
// holds (disagreement is reported as an R3' violation).
AxiomReport check_unframed(const ReidemeisterPair& p, bool also_r3prime = false);

// R2, R3, then condition (i): each Z has a unique A with bnd(phi(A,Z))A = Z,
// giving f; condition (ii): with g(A) = bnd(psi(A,A))^-1 A, f o g = g o f = id.
std::pair<AxiomReport, std::optional<FramedStructure>> check_framed(const ReidemeisterPair& p);

// psi(b,a) = b a b^-1 (b|>a)^-1, phi(b,a) = a b (a<|b)^-1 b^-1 over the
// identity-conjugation module of the given group law on the same carrier.
PairPtr pair_from_rack(const RackPtr& r, const GroupPtr& group_law);

// psi(b,a) = (b a b^-1 (b|>a)^-1, w(b|>a, b)), phi(b,a) = (a b (a<|b)^-1 b^-1,
// -w(a,b)) over the product module of the group law with the value group.
PairPtr pair_from_rack_cocycle(const RackCocycle& c, const GroupPtr& group_law);

// phi^x(g,h) = [h x^-1, g x^-1], psi^x(g,h) = [g,h][h g^-1, x]. The carrier is
// the commutator subgroup when on_derived (with the formulas evaluated in G
// through the inclusion), otherwise all of G.
PairPtr eisermann_pair(const GroupPtr& g, const GroupElement& x, bool on_derived);

// Same formulas with the commutator replaced by the section bracket {,} of a
// central extension, over its lifted-action crossed module.
PairPtr lifted_eisermann_pair(const CentralExtension& ext, const GroupElement& x);

// True iff the pair passes the unframed axioms and its boundary reproduces
// the defining tables bnd(phi(L,M)) = [M x^-1, L x^-1],
// bnd(psi(L,M)) = [L,M][M L^-1, x].
bool is_eisermann_lifting(const ReidemeisterPair& p, const GroupElement& x);

} // namespace xmodlink
