#include "xmodlink/invariant.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>

namespace xmodlink {

struct ColouringSolver::Ctx {
    std::vector<int> colour; // arc -> value, -1 unassigned
    std::vector<int> trail;
    std::vector<int> queue; // crossing ids to recheck
};

ColouringSolver::ColouringSolver(SlicedDiagram d, PairPtr pair)
    : diagram_(std::move(d)), pair_(std::move(pair)), arcs_(ArcIndex::build(diagram_)) {
    incident_.assign(arcs_->arc_count(), {});
    const auto& cs = arcs_->crossings();
    for (int c = 0; c < static_cast<int>(cs.size()); ++c) {
        for (int a : {cs[c].over_arc, cs[c].under_in_arc, cs[c].under_out_arc}) {
            auto& v = incident_[a];
            if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
        }
    }
    branch_order_.resize(arcs_->arc_count());
    for (int a = 0; a < arcs_->arc_count(); ++a) branch_order_[a] = a;
    std::stable_sort(branch_order_.begin(), branch_order_.end(), [this](int a, int b) {
        return incident_[a].size() > incident_[b].size();
    });
}

void ColouringSolver::pin_boundary(Ctx& ctx, const EnhancedWord& word, bool top) const {
    if (!same_group(word.group, pair_->base()))
        throw Error("GroupMismatch", "boundary word over the wrong group");
    const Signature& sig = top ? diagram_.top() : diagram_.bottom();
    const auto& arcs = top ? arcs_->top_arcs() : arcs_->bottom_arcs();
    if (word.entries.size() != sig.size())
        throw Error("WordSignatureMismatch",
                    std::string(top ? "top" : "bottom") + " word has " +
                        std::to_string(word.entries.size()) + " entries for signature width " +
                        std::to_string(sig.size()));
    for (size_t i = 0; i < sig.size(); ++i)
        if (word.entries[i].starred != (sig[i] == Dir::Up))
            throw Error("WordSignatureMismatch",
                        "entry " + std::to_string(i + 1) + " of the " +
                            (top ? "top" : "bottom") + " word has the wrong star");
    for (size_t i = 0; i < sig.size(); ++i)
        if (!assign(ctx, arcs[i], word.entries[i].index)) {
            ctx.colour.assign(ctx.colour.size(), -2); // contradictory pins: no colourings
            return;
        }
}

bool ColouringSolver::assign(Ctx& ctx, int arc, int value) const {
    int& slot = ctx.colour[arc];
    if (slot >= 0) return slot == value;
    slot = value;
    ctx.trail.push_back(arc);
    for (int c : incident_[arc]) ctx.queue.push_back(c);
    return true;
}

bool ColouringSolver::propagate(Ctx& ctx) const {
    const auto& cs = arcs_->crossings();
    while (!ctx.queue.empty()) {
        int c = ctx.queue.back();
        ctx.queue.pop_back();
        const auto& cr = cs[c];
        int o = ctx.colour[cr.over_arc];
        int ui = ctx.colour[cr.under_in_arc];
        int uo = ctx.colour[cr.under_out_arc];
        if (o >= 0 && uo >= 0) {
            int need = cr.sign > 0 ? pair_->zpsi(o, uo) : pair_->zphi(o, uo);
            if (!assign(ctx, cr.under_in_arc, need)) return false;
        } else if (o >= 0 && ui >= 0) {
            const auto& cands = cr.sign > 0 ? pair_->zpsi_preimages(o, ui)
                                            : pair_->zphi_preimages(o, ui);
            if (cands.empty()) return false;
            if (cands.size() == 1 && !assign(ctx, cr.under_out_arc, cands[0])) return false;
        }
    }
    return true;
}

void ColouringSolver::search(Ctx& ctx,
                             const std::function<void(const std::vector<int>&)>& emit) const {
    const auto& cs = arcs_->crossings();
    const int n = pair_->base()->order();

    // choose a branch: the smallest candidate set induced by a constraint
    // with two known arcs, otherwise the first free arc in heuristic order
    int best_arc = -1;
    std::vector<int> best_cands;
    for (const auto& cr : cs) {
        int o = ctx.colour[cr.over_arc];
        int ui = ctx.colour[cr.under_in_arc];
        int uo = ctx.colour[cr.under_out_arc];
        if (o >= 0 && ui >= 0 && uo < 0) {
            const auto& cands =
                cr.sign > 0 ? pair_->zpsi_preimages(o, ui) : pair_->zphi_preimages(o, ui);
            if (best_arc < 0 || cands.size() < best_cands.size()) {
                best_arc = cr.under_out_arc;
                best_cands.assign(cands.begin(), cands.end());
                if (best_cands.size() <= 1) break;
            }
        } else if (o < 0 && ui >= 0 && uo >= 0) {
            std::vector<int> cands;
            for (int x = 0; x < n; ++x) {
                int z = cr.sign > 0 ? pair_->zpsi(x, uo) : pair_->zphi(x, uo);
                if (z == ui) cands.push_back(x);
            }
            if (best_arc < 0 || cands.size() < best_cands.size()) {
                best_arc = cr.over_arc;
                best_cands = std::move(cands);
                if (best_cands.size() <= 1) break;
            }
        }
    }
    if (best_arc < 0) {
        for (int a : branch_order_)
            if (ctx.colour[a] < 0) {
                best_arc = a;
                best_cands.resize(n);
                for (int v = 0; v < n; ++v) best_cands[v] = v;
                break;
            }
    }
    if (best_arc < 0) {
        emit(ctx.colour);
        return;
    }
    for (int v : best_cands) {
        size_t mark = ctx.trail.size();
        ctx.queue.clear();
        if (assign(ctx, best_arc, v) && propagate(ctx)) search(ctx, emit);
        while (ctx.trail.size() > mark) {
            ctx.colour[ctx.trail.back()] = -1;
            ctx.trail.pop_back();
        }
    }
}

Colouring ColouringSolver::finish(const std::vector<int>& colour) const {
    Colouring col;
    col.arcs = arcs_;
    col.arc_colour = colour;
    const auto& cs = arcs_->crossings();
    col.crossing_label.resize(cs.size());
    for (size_t c = 0; c < cs.size(); ++c) {
        int o = colour[cs[c].over_arc];
        int uo = colour[cs[c].under_out_arc];
        col.crossing_label[c] = cs[c].sign > 0 ? pair_->psi(o, uo) : pair_->phi(o, uo);
    }
    return col;
}

std::vector<Colouring> ColouringSolver::solve(const std::optional<EnhancedWord>& top,
                                              const std::optional<EnhancedWord>& bottom,
                                              int workers) const {
    Ctx ctx;
    ctx.colour.assign(arcs_->arc_count(), -1);
    if (top) pin_boundary(ctx, *top, true);
    if (bottom) pin_boundary(ctx, *bottom, false);
    if (!ctx.colour.empty() && ctx.colour[0] == -2) return {}; // contradictory pins
    if (!propagate(ctx)) return {};

    // canonical output order: sorted by the arc-colour vector, so the merged
    // stream is identical for every worker count
    auto canonical = [](std::vector<Colouring>& v) {
        std::sort(v.begin(), v.end(), [](const Colouring& a, const Colouring& b) {
            return a.arc_colour < b.arc_colour;
        });
    };

    std::vector<Colouring> out;
    int first_arc = -1;
    for (int a : branch_order_)
        if (ctx.colour[a] < 0) {
            first_arc = a;
            break;
        }
    if (workers <= 1 || first_arc < 0) {
        search(ctx, [&](const std::vector<int>& c) { out.push_back(finish(c)); });
        canonical(out);
        return out;
    }

    // partition the first free variable's domain across workers
    const int n = pair_->base()->order();
    std::vector<std::vector<Colouring>> buffers(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w]() {
            for (int v = w; v < n; v += workers) {
                Ctx attempt = ctx;
                attempt.queue.clear();
                if (assign(attempt, first_arc, v) && propagate(attempt))
                    search(attempt, [&](const std::vector<int>& c) {
                        buffers[w].push_back(finish(c));
                    });
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& b : buffers)
        for (auto& c : b) out.push_back(std::move(c));
    canonical(out);
    return out;
}

std::map<int, Integer> ColouringSolver::state_terms(const std::optional<EnhancedWord>& top,
                                                    const std::optional<EnhancedWord>& bottom,
                                                    int workers) const {
    std::map<int, Integer> terms;
    for (const auto& col : solve(top, bottom, workers)) {
        CGMorphism m = evaluate_diagram(diagram_, col, *pair_);
        terms[m.label] += 1;
    }
    return terms;
}

bool invariant_equal(const InvariantResult& a, const InvariantResult& b) {
    return a.source_word == b.source_word && a.target_word == b.target_word &&
           a.terms == b.terms;
}

std::string invariant_to_string(const InvariantResult& r, const GroupPtr& fiber) {
    GroupAlgebraElement a{fiber, r.terms};
    return "<" + word_to_string(r.source_word) + "|...|" + word_to_string(r.target_word) +
           "> = " + ga_to_string(a);
}

std::vector<Colouring> enumerate_colourings(const SlicedDiagram& d, const PairPtr& pair,
                                            const EnhancedWord& top,
                                            const std::optional<EnhancedWord>& bottom,
                                            int workers) {
    ColouringSolver solver(d, pair);
    return solver.solve(top, bottom, workers);
}

InvariantResult state_sum(const SlicedDiagram& d, const PairPtr& pair, const EnhancedWord& top,
                          const EnhancedWord& bottom, int workers) {
    ColouringSolver solver(d, pair);
    InvariantResult r{top, bottom, solver.state_terms(top, bottom, workers)};
    return r;
}

std::map<std::vector<WordEntry>, InvariantResult>
invariant_matrix(const SlicedDiagram& d, const PairPtr& pair, const EnhancedWord& top,
                 int workers) {
    ColouringSolver solver(d, pair);
    std::map<std::vector<WordEntry>, InvariantResult> out;
    for (const auto& col : solver.solve(top, std::nullopt, workers)) {
        EnhancedWord bw = boundary_word(d, col, false, pair->base());
        CGMorphism m = evaluate_diagram(d, col, *pair);
        auto it = out.find(bw.entries);
        if (it == out.end())
            it = out.emplace(bw.entries, InvariantResult{top, bw, {}}).first;
        it->second.terms[m.label] += 1;
    }
    return out;
}

GroupAlgebraElement open_sum(const SlicedDiagram& d, const PairPtr& pair,
                             const EnhancedWord& pinned, PinnedSide side, int workers) {
    ColouringSolver solver(d, pair);
    std::optional<EnhancedWord> top, bottom;
    if (side == PinnedSide::Top) top = pinned;
    else bottom = pinned;
    GroupAlgebraElement acc = ga_zero(pair->fiber());
    for (const auto& [e, k] : solver.state_terms(top, bottom, workers))
        acc.coeffs[e] = k;
    return acc;
}

// --- rack colourings ---------------------------------------------------------

namespace {

struct RackSolver {
    const Rack& rack;
    ArcIndexPtr arcs;
    std::vector<std::vector<int>> incident;

    explicit RackSolver(const SlicedDiagram& d, const Rack& r)
        : rack(r), arcs(ArcIndex::build(d)) {
        incident.assign(arcs->arc_count(), {});
        const auto& cs = arcs->crossings();
        for (int c = 0; c < static_cast<int>(cs.size()); ++c)
            for (int a : {cs[c].over_arc, cs[c].under_in_arc, cs[c].under_out_arc}) {
                auto& v = incident[a];
                if (std::find(v.begin(), v.end(), c) == v.end()) v.push_back(c);
            }
    }

    bool consistent(const CrossingInfo& cr, const std::vector<int>& col) const {
        int o = col[cr.over_arc], ui = col[cr.under_in_arc], uo = col[cr.under_out_arc];
        if (o < 0) return true;
        if (cr.sign > 0) {
            // travelling down a positive crossing: out = in <| over
            if (ui >= 0 && uo >= 0) return rack.lop(ui, o) == uo;
        } else {
            if (ui >= 0 && uo >= 0) return rack.rop(o, ui) == uo;
        }
        return true;
    }

    bool propagate(std::vector<int>& col) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& cr : arcs->crossings()) {
                int o = col[cr.over_arc], ui = col[cr.under_in_arc],
                    uo = col[cr.under_out_arc];
                if (o < 0) continue;
                if (ui >= 0 && uo < 0) {
                    col[cr.under_out_arc] =
                        cr.sign > 0 ? rack.lop(ui, o) : rack.rop(o, ui);
                    changed = true;
                } else if (uo >= 0 && ui < 0) {
                    col[cr.under_in_arc] =
                        cr.sign > 0 ? rack.rop(o, uo) : rack.lop(uo, o);
                    changed = true;
                } else if (ui >= 0 && uo >= 0 && !consistent(cr, col))
                    return false;
            }
        }
        return true;
    }

    void count(std::vector<int>& col, const std::function<void(const std::vector<int>&)>& emit) const {
        if (!propagate(col)) return;
        int free_arc = -1;
        for (int a = 0; a < arcs->arc_count(); ++a)
            if (col[a] < 0) {
                free_arc = a;
                break;
            }
        if (free_arc < 0) {
            emit(col);
            return;
        }
        for (int v = 0; v < rack.size(); ++v) {
            std::vector<int> next = col;
            next[free_arc] = v;
            count(next, emit);
        }
    }
};

void pin_rack_boundary(const SlicedDiagram& d, const ArcIndexPtr& arcs,
                       const std::vector<WordEntry>& word, bool top, int rack_size,
                       std::vector<int>& col, bool& contradictory) {
    const Signature& sig = top ? d.top() : d.bottom();
    const auto& boundary = top ? arcs->top_arcs() : arcs->bottom_arcs();
    if (word.size() != sig.size())
        throw Error("WordSignatureMismatch", std::string(top ? "top" : "bottom") +
                                                 " word width does not match the signature");
    for (size_t i = 0; i < sig.size(); ++i) {
        if (word[i].starred != (sig[i] == Dir::Up))
            throw Error("WordSignatureMismatch", "wrong star pattern in rack boundary word");
        if (word[i].index < 0 || word[i].index >= rack_size)
            throw Error("IndexOutOfRange", "rack colour out of range");
        int a = boundary[i];
        if (col[a] >= 0 && col[a] != word[i].index) contradictory = true;
        col[a] = word[i].index;
    }
}

} // namespace

Integer rack_colouring_count(const SlicedDiagram& d, const RackPtr& rack,
                             const std::vector<WordEntry>& top,
                             const std::optional<std::vector<WordEntry>>& bottom) {
    RackSolver solver(d, *rack);
    std::vector<int> col(solver.arcs->arc_count(), -1);
    bool contradictory = false;
    pin_rack_boundary(d, solver.arcs, top, true, rack->size(), col, contradictory);
    if (bottom) pin_rack_boundary(d, solver.arcs, *bottom, false, rack->size(), col, contradictory);
    if (contradictory) return 0;
    Integer n = 0;
    solver.count(col, [&](const std::vector<int>&) { n += 1; });
    return n;
}

std::map<std::vector<WordEntry>, Integer>
rack_colouring_map(const SlicedDiagram& d, const RackPtr& rack,
                   const std::vector<WordEntry>& top) {
    RackSolver solver(d, *rack);
    std::vector<int> col(solver.arcs->arc_count(), -1);
    bool contradictory = false;
    pin_rack_boundary(d, solver.arcs, top, true, rack->size(), col, contradictory);
    std::map<std::vector<WordEntry>, Integer> out;
    if (contradictory) return out;
    const auto& sig = d.bottom();
    const auto& boundary = solver.arcs->bottom_arcs();
    solver.count(col, [&](const std::vector<int>& c) {
        std::vector<WordEntry> w(sig.size());
        for (size_t i = 0; i < sig.size(); ++i)
            w[i] = {c[boundary[i]], sig[i] == Dir::Up};
        out[w] += 1;
    });
    return out;
}

// --- invariance harnesses ----------------------------------------------------

MoveCheckResult check_move_invariance(const PairPtr& pair, const MoveFixture& fixture,
                                      const InvarianceConfig& cfg) {
    if (fixture.lhs.top() != fixture.rhs.top() || fixture.lhs.bottom() != fixture.rhs.bottom())
        throw Error("SignatureMismatch", "fixture sides have different boundaries");
    ColouringSolver lhs(fixture.lhs, pair);
    ColouringSolver rhs(fixture.rhs, pair);
    const auto& g = pair->base();
    const int n = g->order();
    const int wt = static_cast<int>(fixture.lhs.top().size());
    const int wb = static_cast<int>(fixture.lhs.bottom().size());
    const int width = wt + wb;

    double total_log = width * std::log(static_cast<double>(n));
    bool exhaustive = total_log <= std::log(static_cast<double>(cfg.exhaustive_threshold));

    auto words_of = [&](const std::vector<int>& digits) {
        EnhancedWord top{g, {}}, bottom{g, {}};
        for (int i = 0; i < wt; ++i)
            top.entries.push_back({digits[i], fixture.lhs.top()[i] == Dir::Up});
        for (int i = 0; i < wb; ++i)
            bottom.entries.push_back({digits[wt + i], fixture.lhs.bottom()[i] == Dir::Up});
        return std::make_pair(top, bottom);
    };
    auto describe = [&](const EnhancedWord& top, const EnhancedWord& bottom) {
        std::ostringstream os;
        os << move_name(fixture.id) << " differs at top=[" << word_to_string(top)
           << "] bottom=[" << word_to_string(bottom) << "]";
        return os.str();
    };

    if (exhaustive) {
        // enumerate every colouring of each side once and bucket by boundary;
        // comparing the bucket maps is the per-enhancement comparison
        using Boundary = std::pair<std::vector<WordEntry>, std::vector<WordEntry>>;
        auto buckets = [&](const ColouringSolver& solver, const SlicedDiagram& d) {
            std::map<Boundary, std::map<int, Integer>> b;
            for (const auto& col : solver.solve(std::nullopt, std::nullopt)) {
                auto tw = boundary_word(d, col, true, g);
                auto bw = boundary_word(d, col, false, g);
                CGMorphism m = evaluate_diagram(d, col, *pair);
                b[{tw.entries, bw.entries}][m.label] += 1;
            }
            return b;
        };
        auto bl = buckets(lhs, fixture.lhs);
        auto br = buckets(rhs, fixture.rhs);
        if (bl == br) return {true, ""};
        for (const auto& [key, terms] : bl) {
            auto it = br.find(key);
            if (it == br.end() || it->second != terms)
                return {false, describe({g, key.first}, {g, key.second})};
        }
        for (const auto& [key, terms] : br)
            if (!bl.count(key)) return {false, describe({g, key.first}, {g, key.second})};
        return {false, move_name(fixture.id) + " differs"};
    }

    std::mt19937 rng(cfg.seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> digits(width, 0);
    for (int s = 0; s < cfg.samples; ++s) {
        for (int i = 0; i < width; ++i) digits[i] = pick(rng);
        auto [top, bottom] = words_of(digits);
        if (lhs.state_terms(top, bottom) != rhs.state_terms(top, bottom))
            return {false, describe(top, bottom)};
    }
    return {true, ""};
}

bool tqft_check(const SlicedDiagram& d1, const SlicedDiagram& d2, const PairPtr& pair,
                const EnhancedWord& top, const EnhancedWord& bottom) {
    if (d1.bottom() != d2.top())
        throw Error("SignatureMismatch", "tqft_check: the diagrams do not stack");
    auto whole = state_sum(compose(d1, d2), pair, top, bottom);

    ColouringSolver s1(d1, pair);
    ColouringSolver s2(d2, pair);
    const auto& g = pair->base();
    const auto& e = pair->fiber();
    const Signature mid = d1.bottom();
    const int w = static_cast<int>(mid.size());
    const int n = g->order();

    std::map<int, Integer> acc;
    long long total = 1;
    for (int i = 0; i < w; ++i) total *= n;
    for (long long code = 0; code < total; ++code) {
        EnhancedWord middle{g, {}};
        long long c = code;
        for (int i = 0; i < w; ++i) {
            middle.entries.push_back({static_cast<int>(c % n), mid[i] == Dir::Up});
            c /= n;
        }
        auto t1 = s1.state_terms(top, middle);
        if (t1.empty()) continue;
        auto t2 = s2.state_terms(middle, bottom);
        if (t2.empty()) continue;
        for (const auto& [e1, k1] : t1)
            for (const auto& [e2, k2] : t2) acc[e->mult(e2, e1)] += k1 * k2;
    }
    return acc == whole.terms;
}

} // namespace xmodlink
