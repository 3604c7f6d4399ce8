#pragma once

#include "xmodlink/group.hpp"

#include <memory>
#include <string>
#include <vector>

namespace xmodlink {

class Rack;
using RackPtr = std::shared_ptr<const Rack>;

// A finite rack: carrier 0..size-1 with x<|y (left table) and the derived
// inverse operation x|>y, both validated. Quandles satisfy x<|x = x.
class Rack {
public:
    // left[x][y] = x<|y. Each column y -> (x -> x<|y) must be a bijection and
    // right self-distributivity must hold. Throws NotBijective (witness y) or
    // SelfDistributivityViolation (witness triple).
    static RackPtr make(std::vector<std::string> names,
                        const std::vector<std::vector<int>>& left);

    int size() const noexcept { return size_; }
    // x <| y
    int lop(int x, int y) const { return left_[static_cast<size_t>(x) * size_ + y]; }
    // x |> y, the inverse: x |> (y <| x) = y and (x |> y) <| x = y
    int rop(int x, int y) const { return right_[static_cast<size_t>(x) * size_ + y]; }
    bool is_quandle() const;
    const std::string& name(int x) const { return names_[x]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    int element(std::string_view name) const;

private:
    Rack() = default;

    int size_ = 0;
    std::vector<int> left_;
    std::vector<int> right_;
    std::vector<std::string> names_;
};

// x <| y = 2y - x mod n
RackPtr dihedral_quandle(int n);
// x <| y = x + 1 mod n; a rack that is not a quandle for n > 1
RackPtr cyclic_rack(int n);
// h <| g = g^-1 h g on a conjugation-closed subset of a group.
RackPtr conjugation_quandle(const GroupPtr& g, const std::vector<int>& elements);
// h <| g = x^-1 h g^-1 x g and g |> h = x h g^-1 x^-1 g. The carrier is the
// commutator subgroup when restrict_to_derived, otherwise all of G; x itself
// need not lie in the carrier.
RackPtr eisermann_quandle(const GroupPtr& g, const GroupElement& x, bool restrict_to_derived);

// A rack 2-cocycle w: R x R -> V with V abelian (written additively):
// w(x,y) + w(x<|y, z) = w(x,z) + w(x<|z, y<|z).
class RackCocycle {
public:
    // w[x][y] indexes into values. Throws NonAbelianV or CocycleViolation
    // (witness triple).
    static RackCocycle make(RackPtr rack, GroupPtr values, const std::vector<std::vector<int>>& w);

    const RackPtr& rack() const noexcept { return rack_; }
    const GroupPtr& values() const noexcept { return values_; }
    int w(int x, int y) const { return w_[static_cast<size_t>(x) * rack_->size() + y]; }

private:
    RackCocycle() = default;

    RackPtr rack_;
    GroupPtr values_;
    std::vector<int> w_;
};

// Additionally requires w(x,x) = 0 for all x.
bool is_quandle_cocycle(const RackCocycle& c);

// All quandle 2-cocycles on a small rack with the given abelian value group,
// found by brute force over w tables (used by the acceptance suite).
std::vector<RackCocycle> enumerate_quandle_cocycles(const RackPtr& rack, const GroupPtr& values);

} // namespace xmodlink
