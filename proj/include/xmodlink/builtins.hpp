#pragma once

#include "xmodlink/central_extension.hpp"
#include "xmodlink/diagram.hpp"
#include "xmodlink/group.hpp"
#include "xmodlink/pairs.hpp"
#include "xmodlink/rack.hpp"

#include <string>
#include <vector>

namespace xmodlink {

// Built-in objects addressable by structured keys, e.g.
//   group:S5          rack:dihedral:3       diagram:trefoil+string
//   eisermann:S4:x=(12)                     rackpair:cyclic:3
//   lifted:gl25:x=[2,0;0,1]
// so the paper tables reproduce without any input files.

std::vector<std::string> builtin_catalogue();

// Cached per name: S3, S4, S5, D4, Q8, Z<n>, GL25, PGL25, trivial.
GroupPtr builtin_group(const std::string& name);

// The central extension GL(2,5) -> PGL(2,5) with its canonical section.
const CentralExtension& gl25_extension();

RackPtr builtin_rack(const std::string& key);          // rack:dihedral:3 etc.
PairPtr builtin_pair(const std::string& key);          // eisermann:..., rackpair:..., lifted:...
SlicedDiagram builtin_diagram(const std::string& key); // diagram:trefoil+string etc.

} // namespace xmodlink
