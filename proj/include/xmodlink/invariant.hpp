#pragma once

#include "xmodlink/catgroup.hpp"
#include "xmodlink/group_algebra.hpp"
#include "xmodlink/pairs.hpp"
#include "xmodlink/rack.hpp"
#include "xmodlink/word.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xmodlink {

// Enumerates the Reidemeister colourings of a diagram under a pair. Arc
// variables are solved by backtracking with forward propagation through the
// pair's crossing tables and their preimage multimaps; boundary enhancements
// pin arc colours. Built once per (diagram, pair) and reused across calls.
class ColouringSolver {
public:
    ColouringSolver(SlicedDiagram d, PairPtr pair);

    const SlicedDiagram& diagram() const noexcept { return diagram_; }
    const PairPtr& pair() const noexcept { return pair_; }
    const ArcIndexPtr& arcs() const noexcept { return arcs_; }

    // All valid colourings extending the given boundary enhancements, in a
    // deterministic order independent of the worker count.
    std::vector<Colouring> solve(const std::optional<EnhancedWord>& top,
                                 const std::optional<EnhancedWord>& bottom,
                                 int workers = 1) const;

    // Multiplicity of each fiber label among the evaluations of the
    // colourings (the state-sum terms).
    std::map<int, Integer> state_terms(const std::optional<EnhancedWord>& top,
                                       const std::optional<EnhancedWord>& bottom,
                                       int workers = 1) const;

private:
    struct Ctx;
    void pin_boundary(Ctx& ctx, const EnhancedWord& word, bool top) const;
    bool assign(Ctx& ctx, int arc, int value) const;
    bool propagate(Ctx& ctx) const;
    void search(Ctx& ctx, const std::function<void(const std::vector<int>&)>& emit) const;
    Colouring finish(const std::vector<int>& colour) const;

    SlicedDiagram diagram_;
    PairPtr pair_;
    ArcIndexPtr arcs_;
    std::vector<std::vector<int>> incident_; // arc -> crossing ids
    std::vector<int> branch_order_;          // most-constrained-first arc order
};

// The state sum between two boundary enhancements: a formal non-negative
// integer combination of fiber labels, all of them morphisms
// e(source_word) -> e(target_word).
struct InvariantResult {
    EnhancedWord source_word;
    EnhancedWord target_word;
    std::map<int, Integer> terms;
};

bool invariant_equal(const InvariantResult& a, const InvariantResult& b);
std::string invariant_to_string(const InvariantResult& r, const GroupPtr& fiber);

std::vector<Colouring> enumerate_colourings(const SlicedDiagram& d, const PairPtr& pair,
                                            const EnhancedWord& top,
                                            const std::optional<EnhancedWord>& bottom,
                                            int workers = 1);

InvariantResult state_sum(const SlicedDiagram& d, const PairPtr& pair, const EnhancedWord& top,
                          const EnhancedWord& bottom, int workers = 1);

// Groups the unfiltered colouring stream by realized bottom word.
std::map<std::vector<WordEntry>, InvariantResult>
invariant_matrix(const SlicedDiagram& d, const PairPtr& pair, const EnhancedWord& top,
                 int workers = 1);

enum class PinnedSide { Top, Bottom };

// Sum over all colourings with one side pinned, bucketed by fiber label:
// an element of Z[E].
GroupAlgebraElement open_sum(const SlicedDiagram& d, const PairPtr& pair,
                             const EnhancedWord& pinned, PinnedSide side, int workers = 1);

// --- rack colourings (no crossed module involved) ---------------------------

// Count of arc colourings obeying the rack crossing rules and extending the
// boundary colours. Star patterns must match the signatures.
Integer rack_colouring_count(const SlicedDiagram& d, const RackPtr& rack,
                             const std::vector<WordEntry>& top,
                             const std::optional<std::vector<WordEntry>>& bottom);
std::map<std::vector<WordEntry>, Integer>
rack_colouring_map(const SlicedDiagram& d, const RackPtr& rack,
                   const std::vector<WordEntry>& top);

// --- invariance harnesses ----------------------------------------------------

struct InvarianceConfig {
    long long exhaustive_threshold = 1'000'000; // |G|^(boundary width) at most this
    int samples = 10'000;                       // randomized draws otherwise
    unsigned seed = 0x51ab17e5;
};

struct MoveCheckResult {
    bool ok = true;
    std::string detail; // counterexample description when !ok
};

// State sums of both fixture sides agree for every boundary enhancement
// (exhaustive or sampled per the config).
MoveCheckResult check_move_invariance(const PairPtr& pair, const MoveFixture& fixture,
                                      const InvarianceConfig& cfg = {});

// <top| I(d1 d2) |bottom> equals the sum over middle enhancements of the
// composed per-part sums.
bool tqft_check(const SlicedDiagram& d1, const SlicedDiagram& d2, const PairPtr& pair,
                const EnhancedWord& top, const EnhancedWord& bottom);

} // namespace xmodlink
