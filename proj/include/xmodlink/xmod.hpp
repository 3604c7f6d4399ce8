#pragma once

#include "xmodlink/group.hpp"

#include <memory>
#include <vector>

namespace xmodlink {

class CrossedModule;
using XmodPtr = std::shared_ptr<const CrossedModule>;

// A crossed module (boundary: E -> G, action of G on E by automorphisms)
// satisfying both Peiffer equations. Validated on construction.
class CrossedModule {
public:
    // action[g][e] = index of g acting on e. Throws NotAnAction,
    // NotAutomorphisms, Peiffer1Violation or Peiffer2Violation with witnesses.
    static XmodPtr make(GroupPtr base, GroupPtr fiber, GroupHom boundary,
                        const std::vector<std::vector<int>>& action);

    const GroupPtr& base() const noexcept { return base_; }   // G
    const GroupPtr& fiber() const noexcept { return fiber_; } // E
    const GroupHom& boundary() const noexcept { return boundary_; }
    int bnd(int e) const { return boundary_.apply(e); }
    int act(int g, int e) const { return action_[static_cast<size_t>(g) * fiber_->order() + e]; }

private:
    CrossedModule(GroupPtr base, GroupPtr fiber, GroupHom boundary, std::vector<int> action)
        : base_(std::move(base)), fiber_(std::move(fiber)), boundary_(std::move(boundary)),
          action_(std::move(action)) {}

    GroupPtr base_;
    GroupPtr fiber_;
    GroupHom boundary_;
    std::vector<int> action_; // |G| x |E|, dense
};

// (id: G -> G) with G acting on itself by conjugation.
XmodPtr xmod_identity_conj(const GroupPtr& g);

// E = G x V with V abelian, boundary (g,v) -> g, action g.(h,v) = (ghg^-1, v).
// The fiber's element names are "(h,v)". Throws NonAbelianV.
XmodPtr xmod_product(const GroupPtr& g, const GroupPtr& v);

// Index of (h, v) inside the fiber of xmod_product(g, v): h-major layout.
inline int product_fiber_index(int v_order, int h, int v) { return h * v_order + v; }

} // namespace xmodlink
