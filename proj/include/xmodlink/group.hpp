#pragma once

#include "xmodlink/error.hpp"

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace xmodlink {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A finite group as a validated Cayley table. Elements are indices 0..order-1;
// each element carries a distinct display name. Immutable after construction.
class FiniteGroup {
public:
    // Validates associativity, a two-sided identity and two-sided inverses.
    // Throws Error with code NonAssociative (witness triple in the message),
    // NoIdentity, NoInverse or IndexOutOfRange.
    static GroupPtr from_cayley(std::vector<std::string> names,
                                const std::vector<std::vector<int>>& table);

    int order() const noexcept { return order_; }
    int identity() const noexcept { return identity_; }
    int mult(int a, int b) const { return mult_[static_cast<size_t>(a) * order_ + b]; }
    int inv(int a) const { return inverse_[a]; }
    // g h g^-1
    int conj(int g, int h) const { return mult(mult(g, h), inv(g)); }
    // a b a^-1 b^-1
    int comm(int a, int b) const { return mult(mult(a, b), mult(inv(a), inv(b))); }
    int power(int a, long long k) const;

    const std::string& name(int a) const { return names_[a]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<int> find(std::string_view name) const;
    // find() that throws Error("UnknownElement") on failure.
    int element(std::string_view name) const;

    bool is_abelian() const;
    int element_order(int a) const;

private:
    FiniteGroup() = default;

    int order_ = 0;
    int identity_ = 0;
    std::vector<int> mult_;
    std::vector<int> inverse_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> name_index_;
};

// An element index together with the group it lives in. Cross-group use is a
// checked error, never undefined behaviour.
struct GroupElement {
    GroupPtr group;
    int index = 0;

    const std::string& name() const { return group->name(index); }
};

bool same_group(const GroupPtr& a, const GroupPtr& b);
void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what);

inline bool operator==(const GroupElement& a, const GroupElement& b) {
    require_same_group(a.group, b.group, "element comparison");
    return a.index == b.index;
}
inline bool operator!=(const GroupElement& a, const GroupElement& b) { return !(a == b); }

GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

// A group homomorphism given by its value table; validated on construction.
class GroupHom {
public:
    GroupHom(GroupPtr source, GroupPtr target, std::vector<int> image);

    const GroupPtr& source() const noexcept { return source_; }
    const GroupPtr& target() const noexcept { return target_; }
    int apply(int a) const { return image_[a]; }
    const std::vector<int>& image() const noexcept { return image_; }
    bool is_surjective() const;
    std::vector<int> kernel() const;

private:
    GroupPtr source_;
    GroupPtr target_;
    std::vector<int> image_;
};

// --- constructions ---------------------------------------------------------

GroupPtr trivial_group();
GroupPtr cyclic_group(int n);
// Dihedral group of order 2n, names 1, r, r2, ..., s, rs, ...
GroupPtr dihedral_group(int n);
GroupPtr quaternion_group();

// Permutations compose left-to-right: (s·t)(i) = t(s(i)). Names use cycle
// notation on points 1..n, identity named "id". n! must stay within `bound`!.
GroupPtr symmetric_group(int n, int bound = 7);

using Mat2 = std::array<int, 4>; // row-major 2x2 over Z_p

// Closure of invertible 2x2 matrices over Z_p under multiplication.
// Names are matrix literals "[a,b;c,d]". Throws SingularGenerator or
// BoundExceeded (closure larger than cap).
GroupPtr group_from_matrix_generators(const std::vector<Mat2>& generators, int p,
                                      int cap = 10000);
// Same closure, also exposing the matrix of every element (used by builtins).
std::pair<GroupPtr, std::vector<Mat2>>
matrix_group_with_elements(const std::vector<Mat2>& generators, int p, int cap = 10000);

// Subgroup generated by all commutators, returned with its inclusion hom.
std::pair<GroupPtr, GroupHom> commutator_subgroup(const GroupPtr& g);
// Subgroup of elements commuting with x, with its inclusion hom.
std::pair<GroupPtr, GroupHom> centralizer(const GroupPtr& g, const GroupElement& x);
// Subgroup spanned by the given generating indices, with its inclusion hom.
std::pair<GroupPtr, GroupHom> generated_subgroup(const GroupPtr& g,
                                                 const std::vector<int>& generators,
                                                 const std::string& name_prefix = "");

// Quotient of g by a central subgroup (validated). Class names are
// "~<name of least-index representative>" unless explicit names are given.
std::pair<GroupPtr, GroupHom>
quotient_by_central_subgroup(const GroupPtr& g, const std::vector<int>& subgroup,
                             const std::vector<std::string>& class_names = {});

} // namespace xmodlink
