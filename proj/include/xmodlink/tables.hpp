#pragma once

#include "xmodlink/group_algebra.hpp"

#include <string>
#include <vector>

namespace xmodlink {

// One of the trefoil tables: seven base-point columns, one group-algebra
// value per knot row.
struct TrefoilTable {
    std::string which; // eisermann-s5, lifted-gl25, unlifted-pgl25
    bool k_plus_first = false;
    std::vector<std::string> columns;
    std::vector<GroupAlgebraElement> k_plus;
    std::vector<GroupAlgebraElement> k_minus;
};

TrefoilTable eisermann_s5_table(int workers = 1);
TrefoilTable lifted_gl25_table(int workers = 1);
TrefoilTable unlifted_pgl25_table(int workers = 1);

std::string render_table(const TrefoilTable& t);
std::string table_tsv(const TrefoilTable& t);

// The seven projective classes used as base points, by paper column order.
std::vector<int> pgl25_base_points();

} // namespace xmodlink
