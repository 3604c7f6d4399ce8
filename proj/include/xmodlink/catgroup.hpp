#pragma once

#include "xmodlink/arc_index.hpp"
#include "xmodlink/diagram.hpp"
#include "xmodlink/pairs.hpp"
#include "xmodlink/word.hpp"
#include "xmodlink/xmod.hpp"

#include <span>
#include <vector>

namespace xmodlink {

// A morphism of the categorical group of a crossed module: a pair
// (source object, fiber label) with target bnd(label) * source.
struct CGMorphism {
    XmodPtr xm;
    int source = 0;
    int label = 0;

    int target() const { return xm->base()->mult(xm->bnd(label), source); }
};

bool operator==(const CGMorphism& a, const CGMorphism& b);

CGMorphism cg_identity(const XmodPtr& xm, int object);
// (U,e): U -> V then (V,f): V -> W compose to (U, f e). Throws NotComposable.
CGMorphism cg_compose(const CGMorphism& m1, const CGMorphism& m2);
// (U,e) x (U',e') = (U U', (V |> e') e) with V the target of the first.
// Throws ModuleMismatch.
CGMorphism cg_tensor(const CGMorphism& m1, const CGMorphism& m2);

// A Reidemeister colouring of a diagram: one base-group colour per arc and
// the determined fiber label at each crossing.
struct Colouring {
    ArcIndexPtr arcs;
    std::vector<int> arc_colour;     // arc id -> base-group element
    std::vector<int> crossing_label; // crossing id -> fiber element

    int colour_at(int level, int pos) const { return arc_colour[arcs->arc_at(level, pos)]; }
};

// The morphism of one coloured generator. `top`/`bottom` hold the incident
// base-group colours in left-to-right order. Throws InconsistentColours.
CGMorphism generator_morphism(GenKind kind, std::span<const int> top,
                              std::span<const int> bottom, const ReidemeisterPair& pair);

// Tensor within each slice, then vertical composition. The source equals the
// evaluation of the coloured top word, the target that of the bottom word.
CGMorphism evaluate_diagram(const SlicedDiagram& d, const Colouring& col,
                            const ReidemeisterPair& pair);

// The enhanced word read off a boundary level of a colouring.
EnhancedWord boundary_word(const SlicedDiagram& d, const Colouring& col, bool top,
                           const GroupPtr& g);

} // namespace xmodlink
