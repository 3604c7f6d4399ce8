#pragma once

#include "xmodlink/diagram.hpp"
#include "xmodlink/group.hpp"
#include "xmodlink/group_algebra.hpp"

#include <map>
#include <vector>

namespace xmodlink {

// One crossing as met while travelling the knot: the i-th undercrossing
// turns arc i into arc i+1 beneath over_arc, with the given sign.
struct WirtingerCrossing {
    int under_in_arc = 0;
    int under_out_arc = 0;
    int over_arc = 0;
    int sign = +1;
};

struct LongitudeFactor {
    int arc = 0;
    int exponent = +1;
};

// Arcs of a string-knot diagram in travel order from the top endpoint,
// with the zero-framed longitude word  prod_i  a_i^{-s_i} a_{j_i}^{s_i}.
struct WirtingerData {
    int arc_count = 0;
    int base_arc = 0; // always 0: the arc containing the top endpoint
    std::vector<WirtingerCrossing> crossings;
    std::vector<LongitudeFactor> longitude;

    // Prefix of the longitude up to (excluding) the k-th undercrossing.
    std::vector<LongitudeFactor> partial_longitude(int k) const;
};

// Travels the strand from the top endpoint. Throws NotAStringKnot when the
// boundary is not a single downward strand at both ends, MultipleComponents
// when the diagram has strands the walk never visits.
WirtingerData diagram_to_wirtinger(const SlicedDiagram& d);

// The meridian-to-x colouring count of the diagram's knot group, bucketed by
// the evaluated longitude: for each arc assignment with base colour x and
// under_out = over^-sign under_in over^sign at every crossing, add one to the
// bucket of the longitude value. Independent of the crossed-module machinery.
std::map<int, Integer> eisermann_oracle(const GroupPtr& g, const GroupElement& x,
                                        const SlicedDiagram& d);

// Direct evaluation of the two closed-form trefoil counting formulas
// (sign = +1 or -1), bucketed by the free end colour.
std::map<int, Integer> trefoil_closed_form(const GroupPtr& g, const GroupElement& x, int sign);

} // namespace xmodlink
