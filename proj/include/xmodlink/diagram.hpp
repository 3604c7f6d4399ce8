#pragma once

#include "xmodlink/error.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace xmodlink {

// The six tangle generators plus the two oriented identity strands.
// Orientation conventions: XPlus has its over-strand entering top-right and
// exiting bottom-left; XMinus over-strand enters top-left, exits bottom-right.
// Both crossings require both strands downward. Caps consume two adjacent
// strand ends from above, cups create two below.
enum class GenKind { IdDown, IdUp, XPlus, XMinus, CapLR, CapRL, CupLR, CupRL };

enum class Dir { Down, Up };
using Signature = std::vector<Dir>;

Signature gen_top(GenKind k);
Signature gen_bottom(GenKind k);
std::string_view gen_token(GenKind k); // DSL token, e.g. "x+", "cap>"

struct Slice {
    std::vector<GenKind> pieces;

    friend bool operator==(const Slice&, const Slice&) = default;
};

// An oriented tangle diagram as a vertical sequence of slices. Level k is the
// horizontal boundary above slice k; level slice_count() is the bottom.
class SlicedDiagram {
public:
    // Validates that consecutive slice signatures agree. Throws
    // SignatureMismatch or EmptyDiagram.
    static SlicedDiagram make(Signature top, std::vector<Slice> slices);

    const Signature& top() const noexcept { return levels_.front(); }
    const Signature& bottom() const noexcept { return levels_.back(); }
    const Signature& level(int k) const { return levels_[k]; }
    int slice_count() const noexcept { return static_cast<int>(slices_.size()); }
    const Slice& slice(int k) const { return slices_[k]; }
    const std::vector<Slice>& slices() const noexcept { return slices_; }

    friend bool operator==(const SlicedDiagram& a, const SlicedDiagram& b) {
        return a.levels_.front() == b.levels_.front() && a.slices_ == b.slices_;
    }

private:
    SlicedDiagram() = default;

    std::vector<Slice> slices_;
    std::vector<Signature> levels_; // slice_count()+1 signatures
};

// Text format: a `top:` line of v/^ marks, then one line per slice of piece
// tokens; `-` denotes a slice with no pieces; `#` starts a comment.
SlicedDiagram diagram_parse(std::string_view text);
std::string diagram_serialize(const SlicedDiagram& d);

SlicedDiagram compose(const SlicedDiagram& d1, const SlicedDiagram& d2);
SlicedDiagram tensor(const SlicedDiagram& d1, const SlicedDiagram& d2);
// Swaps XPlus and XMinus everywhere.
SlicedDiagram mirror(const SlicedDiagram& d);
// Splits multi-generator slices so each slice holds one non-identity piece.
SlicedDiagram normalize_single_generator(const SlicedDiagram& d);

int signed_crossing_count(const SlicedDiagram& d);
int crossing_count(const SlicedDiagram& d);

// String knots: one downward strand in at the top, out at the bottom.
SlicedDiagram unknot_string();
SlicedDiagram trefoil_plus_string();  // three XPlus crossings
SlicedDiagram trefoil_minus_string(); // three XMinus crossings
SlicedDiagram figure_eight_string();  // four crossings of mixed sign

// Routes the bottom endpoint around the right side back to the top using
// cups, caps and identity strands only. Throws ClosureShapeMismatch unless
// top = bottom = a single downward strand.
SlicedDiagram closure(const SlicedDiagram& d);

enum class MoveId { R0A, R0B, R0C, R0D, R1, R1p, R2A, R2B, R2C, R3, Identity, Interchange };
std::string move_name(MoveId id);

struct MoveFixture {
    MoveId id;
    SlicedDiagram lhs;
    SlicedDiagram rhs;
};

// One fixture per relation R0A-R0D, R1, R1', R2A, R2B, R2C, R3, plus
// Identity and Interchange samples: 12 fixtures.
std::vector<MoveFixture> move_fixtures();

// The full relation set of the tangle presentation, with sibling variants
// expanded: 15 instances for the unframed set (R1 contributing its two kink
// forms) and 15 for the framed set (R1' likewise).
struct RelationInstance {
    std::string label;
    MoveFixture fixture;
};
std::vector<RelationInstance> relation_instances(bool framed);

} // namespace xmodlink
