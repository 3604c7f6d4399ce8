#pragma once

#include "xmodlink/group.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>

namespace xmodlink {

using Integer = boost::multiprecision::cpp_int;

// An integer-coefficient formal sum of group elements, kept canonical:
// no zero coefficients, keys sorted by element index.
struct GroupAlgebraElement {
    GroupPtr group;
    std::map<int, Integer> coeffs;
};

GroupAlgebraElement ga_zero(const GroupPtr& g);
GroupAlgebraElement ga_term(const GroupElement& e, const Integer& k = 1);
GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
GroupAlgebraElement ga_scale(const Integer& k, const GroupAlgebraElement& a);
bool ga_equal(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// Rendering like "id + 5(12345)"; the zero element renders as "0".
std::string ga_to_string(const GroupAlgebraElement& a);

// Pushforward along a hom: sums coefficients over fibers.
GroupAlgebraElement ga_map(const GroupHom& h, const GroupAlgebraElement& a);

} // namespace xmodlink
