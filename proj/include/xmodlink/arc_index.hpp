#pragma once

#include "xmodlink/diagram.hpp"

#include <memory>
#include <vector>

namespace xmodlink {

// One crossing of a diagram, described by the arcs meeting it. The over
// strand passes through (one arc); the under strand breaks into an incoming
// and an outgoing arc.
struct CrossingInfo {
    int over_arc = -1;
    int under_in_arc = -1;
    int under_out_arc = -1;
    int sign = +1; // +1 for XPlus, -1 for XMinus
    int slice = -1;
    int piece = -1;
};

// Partition of the strand segments of a diagram into maximal arcs: segments
// merge through identity pieces, cup/cap turns and the over-strand of each
// crossing, and break at under-strands.
class ArcIndex {
public:
    static std::shared_ptr<const ArcIndex> build(const SlicedDiagram& d);

    int arc_count() const noexcept { return arc_count_; }
    // Arc at boundary point `pos` of level `level` (level 0 = diagram top).
    int arc_at(int level, int pos) const { return arc_of_port_[port_offset_[level] + pos]; }
    const std::vector<CrossingInfo>& crossings() const noexcept { return crossings_; }
    const std::vector<int>& top_arcs() const noexcept { return top_arcs_; }
    const std::vector<int>& bottom_arcs() const noexcept { return bottom_arcs_; }

private:
    ArcIndex() = default;

    int arc_count_ = 0;
    std::vector<int> port_offset_;
    std::vector<int> arc_of_port_;
    std::vector<CrossingInfo> crossings_;
    std::vector<int> top_arcs_;
    std::vector<int> bottom_arcs_;
};

using ArcIndexPtr = std::shared_ptr<const ArcIndex>;

} // namespace xmodlink
