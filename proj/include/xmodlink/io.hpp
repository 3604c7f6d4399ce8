#pragma once

#include "xmodlink/diagram.hpp"
#include "xmodlink/group.hpp"
#include "xmodlink/invariant.hpp"
#include "xmodlink/pairs.hpp"
#include "xmodlink/rack.hpp"
#include "xmodlink/xmod.hpp"

#include <iosfwd>
#include <string>

namespace xmodlink {

// Loaders for the text formats (.grp, .xmod, .rck, .coc, .pair, .tng).
// Referenced paths inside .xmod/.coc/.pair files resolve relative to the
// referencing file. All parse errors carry file and line.

GroupPtr load_group(const std::string& path);
void save_group(const std::string& path, const GroupPtr& g, const std::string& name);

XmodPtr load_xmod(const std::string& path);
RackPtr load_rack(const std::string& path);
RackCocycle load_cocycle(const std::string& path);
PairPtr load_pair(const std::string& path);
SlicedDiagram load_diagram(const std::string& path);

// TSV serialization of a state sum: "source:" and "target:" header lines,
// then one "<multiplicity>\t<fiber element name>" row per term sorted by
// element index. Byte-identical across runs and worker counts.
void write_invariant_tsv(std::ostream& os, const InvariantResult& r, const GroupPtr& fiber);
std::string invariant_tsv(const InvariantResult& r, const GroupPtr& fiber);

} // namespace xmodlink
