#include "xmodlink/diagram.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace xmodlink {

Signature gen_top(GenKind k) {
    switch (k) {
    case GenKind::IdDown: return {Dir::Down};
    case GenKind::IdUp: return {Dir::Up};
    case GenKind::XPlus:
    case GenKind::XMinus: return {Dir::Down, Dir::Down};
    case GenKind::CapLR: return {Dir::Down, Dir::Up};
    case GenKind::CapRL: return {Dir::Up, Dir::Down};
    case GenKind::CupLR:
    case GenKind::CupRL: return {};
    }
    return {};
}

Signature gen_bottom(GenKind k) {
    switch (k) {
    case GenKind::IdDown: return {Dir::Down};
    case GenKind::IdUp: return {Dir::Up};
    case GenKind::XPlus:
    case GenKind::XMinus: return {Dir::Down, Dir::Down};
    case GenKind::CapLR:
    case GenKind::CapRL: return {};
    case GenKind::CupLR: return {Dir::Up, Dir::Down};
    case GenKind::CupRL: return {Dir::Down, Dir::Up};
    }
    return {};
}

std::string_view gen_token(GenKind k) {
    switch (k) {
    case GenKind::IdDown: return "id+";
    case GenKind::IdUp: return "id-";
    case GenKind::XPlus: return "x+";
    case GenKind::XMinus: return "x-";
    case GenKind::CapLR: return "cap>";
    case GenKind::CapRL: return "cap<";
    case GenKind::CupLR: return "cup>";
    case GenKind::CupRL: return "cup<";
    }
    return "?";
}

namespace {

Signature slice_top(const Slice& s) {
    Signature out;
    for (GenKind k : s.pieces) {
        auto t = gen_top(k);
        out.insert(out.end(), t.begin(), t.end());
    }
    return out;
}

Signature slice_bottom(const Slice& s) {
    Signature out;
    for (GenKind k : s.pieces) {
        auto b = gen_bottom(k);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::string sig_to_string(const Signature& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += s[i] == Dir::Down ? 'v' : '^';
    }
    return out.empty() ? "(empty)" : out;
}

} // namespace

SlicedDiagram SlicedDiagram::make(Signature top, std::vector<Slice> slices) {
    if (slices.empty())
        throw Error("EmptyDiagram", "a diagram needs at least one slice");
    SlicedDiagram d;
    d.levels_.push_back(std::move(top));
    for (size_t i = 0; i < slices.size(); ++i) {
        Signature expect = slice_top(slices[i]);
        if (expect != d.levels_.back())
            throw Error("SignatureMismatch",
                        "slice " + std::to_string(i + 1) + " expects top [" +
                            sig_to_string(expect) + "] but the level above is [" +
                            sig_to_string(d.levels_.back()) + "]");
        d.levels_.push_back(slice_bottom(slices[i]));
    }
    d.slices_ = std::move(slices);
    return d;
}

SlicedDiagram diagram_parse(std::string_view text) {
    static const std::map<std::string, GenKind, std::less<>> tokens = {
        {"id+", GenKind::IdDown}, {"id-", GenKind::IdUp},  {"x+", GenKind::XPlus},
        {"x-", GenKind::XMinus},  {"cap>", GenKind::CapLR}, {"cap<", GenKind::CapRL},
        {"cup>", GenKind::CupLR}, {"cup<", GenKind::CupRL}};

    std::optional<Signature> top;
    std::vector<Slice> slices;
    std::vector<int> slice_lines;

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);

        std::vector<std::pair<std::string, int>> words; // token, column
        size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
                ++i;
                continue;
            }
            size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            words.emplace_back(std::string(line.substr(i, j - i)), static_cast<int>(i + 1));
            i = j;
        }
        if (words.empty()) continue;

        if (!top) {
            if (words[0].first != "top:")
                throw Error("UnknownToken", "line " + std::to_string(lineno) +
                                                ": expected a 'top:' line first");
            Signature sig;
            for (size_t w = 1; w < words.size(); ++w) {
                if (words[w].first == "v") sig.push_back(Dir::Down);
                else if (words[w].first == "^") sig.push_back(Dir::Up);
                else
                    throw Error("UnknownToken",
                                "line " + std::to_string(lineno) + " col " +
                                    std::to_string(words[w].second) + ": bad orientation mark '" +
                                    words[w].first + "'");
            }
            top = std::move(sig);
            continue;
        }

        Slice s;
        if (words.size() == 1 && words[0].first == "-") {
            slices.push_back(s); // empty slice marker
            slice_lines.push_back(lineno);
            continue;
        }
        for (const auto& [w, col] : words) {
            auto it = tokens.find(w);
            if (it == tokens.end())
                throw Error("UnknownToken", "line " + std::to_string(lineno) + " col " +
                                                std::to_string(col) + ": unknown piece token '" +
                                                w + "'");
            s.pieces.push_back(it->second);
        }
        slices.push_back(std::move(s));
        slice_lines.push_back(lineno);
    }

    if (!top) throw Error("EmptyDiagram", "missing 'top:' line");
    if (slices.empty()) throw Error("EmptyDiagram", "diagram has no slices");

    // rebuild with line-aware signature errors
    Signature level = *top;
    for (size_t i = 0; i < slices.size(); ++i) {
        Signature expect = slice_top(slices[i]);
        if (expect != level)
            throw Error("SignatureMismatch",
                        "line " + std::to_string(slice_lines[i]) + ": slice expects top [" +
                            sig_to_string(expect) + "] but the level above is [" +
                            sig_to_string(level) + "]");
        level = slice_bottom(slices[i]);
    }
    return SlicedDiagram::make(std::move(*top), std::move(slices));
}

std::string diagram_serialize(const SlicedDiagram& d) {
    std::ostringstream os;
    os << "top:";
    for (Dir dir : d.top()) os << ' ' << (dir == Dir::Down ? 'v' : '^');
    os << '\n';
    for (const auto& s : d.slices()) {
        if (s.pieces.empty()) {
            os << "-\n";
            continue;
        }
        for (size_t i = 0; i < s.pieces.size(); ++i) {
            if (i) os << ' ';
            os << gen_token(s.pieces[i]);
        }
        os << '\n';
    }
    return os.str();
}

SlicedDiagram compose(const SlicedDiagram& d1, const SlicedDiagram& d2) {
    if (d1.bottom() != d2.top())
        throw Error("SignatureMismatch", "compose: bottom of the first diagram is [" +
                                             sig_to_string(d1.bottom()) +
                                             "] but top of the second is [" +
                                             sig_to_string(d2.top()) + "]");
    std::vector<Slice> slices = d1.slices();
    slices.insert(slices.end(), d2.slices().begin(), d2.slices().end());
    return SlicedDiagram::make(d1.top(), std::move(slices));
}

namespace {

Slice identity_slice(const Signature& sig) {
    Slice s;
    for (Dir d : sig) s.pieces.push_back(d == Dir::Down ? GenKind::IdDown : GenKind::IdUp);
    return s;
}

} // namespace

SlicedDiagram tensor(const SlicedDiagram& d1, const SlicedDiagram& d2) {
    std::vector<Slice> s1 = d1.slices();
    std::vector<Slice> s2 = d2.slices();
    while (s1.size() < s2.size()) s1.push_back(identity_slice(d1.bottom()));
    while (s2.size() < s1.size()) s2.push_back(identity_slice(d2.bottom()));
    std::vector<Slice> slices(s1.size());
    for (size_t i = 0; i < s1.size(); ++i) {
        slices[i] = s1[i];
        slices[i].pieces.insert(slices[i].pieces.end(), s2[i].pieces.begin(),
                                s2[i].pieces.end());
    }
    Signature top = d1.top();
    top.insert(top.end(), d2.top().begin(), d2.top().end());
    return SlicedDiagram::make(std::move(top), std::move(slices));
}

SlicedDiagram mirror(const SlicedDiagram& d) {
    std::vector<Slice> slices = d.slices();
    for (auto& s : slices)
        for (auto& p : s.pieces) {
            if (p == GenKind::XPlus) p = GenKind::XMinus;
            else if (p == GenKind::XMinus) p = GenKind::XPlus;
        }
    return SlicedDiagram::make(d.top(), std::move(slices));
}

SlicedDiagram normalize_single_generator(const SlicedDiagram& d) {
    std::vector<Slice> out;
    for (int k = 0; k < d.slice_count(); ++k) {
        const Slice& s = d.slice(k);
        int nontrivial = 0;
        for (GenKind p : s.pieces)
            if (p != GenKind::IdDown && p != GenKind::IdUp) ++nontrivial;
        if (nontrivial <= 1) {
            out.push_back(s);
            continue;
        }
        // peel off the non-identity pieces left to right
        Signature level = d.level(k);
        size_t col = 0;
        std::vector<GenKind> pending(s.pieces.begin(), s.pieces.end());
        for (size_t i = 0; i < pending.size(); ++i) {
            GenKind p = pending[i];
            size_t w_top = gen_top(p).size();
            if (p == GenKind::IdDown || p == GenKind::IdUp) {
                col += w_top;
                continue;
            }
            Slice step;
            for (size_t c = 0; c < col; ++c)
                step.pieces.push_back(level[c] == Dir::Down ? GenKind::IdDown : GenKind::IdUp);
            step.pieces.push_back(p);
            for (size_t c = col + w_top; c < level.size(); ++c)
                step.pieces.push_back(level[c] == Dir::Down ? GenKind::IdDown : GenKind::IdUp);
            out.push_back(step);
            // update the running signature past this piece
            Signature next(level.begin(), level.begin() + col);
            auto b = gen_bottom(p);
            next.insert(next.end(), b.begin(), b.end());
            next.insert(next.end(), level.begin() + col + w_top, level.end());
            col += b.size();
            level = std::move(next);
        }
    }
    return SlicedDiagram::make(d.top(), std::move(out));
}

int signed_crossing_count(const SlicedDiagram& d) {
    int n = 0;
    for (const auto& s : d.slices())
        for (GenKind p : s.pieces) {
            if (p == GenKind::XPlus) ++n;
            if (p == GenKind::XMinus) --n;
        }
    return n;
}

int crossing_count(const SlicedDiagram& d) {
    int n = 0;
    for (const auto& s : d.slices())
        for (GenKind p : s.pieces)
            if (p == GenKind::XPlus || p == GenKind::XMinus) ++n;
    return n;
}

namespace {

using K = GenKind;
const K ID = K::IdDown;
const K IU = K::IdUp;
const K XP = K::XPlus;
const K XM = K::XMinus;
const K CAPL = K::CapLR; // cap>
const K CAPR = K::CapRL; // cap<
const K CUPL = K::CupLR; // cup>
const K CUPR = K::CupRL; // cup<

SlicedDiagram diag(Signature top, std::vector<std::vector<K>> rows) {
    std::vector<Slice> slices;
    slices.reserve(rows.size());
    for (auto& r : rows) slices.push_back(Slice{std::move(r)});
    return SlicedDiagram::make(std::move(top), std::move(slices));
}

} // namespace

SlicedDiagram unknot_string() { return diag({Dir::Down}, {{ID}}); }

SlicedDiagram trefoil_plus_string() {
    return diag({Dir::Down}, {{ID, CUPR}, {XP, IU}, {XP, IU}, {XP, IU}, {ID, CAPL}});
}

SlicedDiagram trefoil_minus_string() { return mirror(trefoil_plus_string()); }

SlicedDiagram figure_eight_string() {
    return diag({Dir::Down}, {{ID, CUPR},
                              {ID, ID, CUPR, IU},
                              {XP, ID, IU, IU},
                              {ID, XM, IU, IU},
                              {XP, ID, IU, IU},
                              {ID, XM, IU, IU},
                              {ID, ID, CAPL, IU},
                              {ID, CAPL}});
}

SlicedDiagram closure(const SlicedDiagram& d) {
    const Signature one_down = {Dir::Down};
    if (d.top() != one_down || d.bottom() != one_down)
        throw Error("ClosureShapeMismatch",
                    "closure needs a string diagram with a single downward strand");
    std::vector<Slice> slices;
    slices.push_back(Slice{{CUPR}});
    for (const auto& s : d.slices()) {
        Slice padded = s;
        padded.pieces.push_back(IU);
        slices.push_back(std::move(padded));
    }
    slices.push_back(Slice{{CAPL}});
    return SlicedDiagram::make({}, std::move(slices));
}

std::string move_name(MoveId id) {
    switch (id) {
    case MoveId::R0A: return "R0A";
    case MoveId::R0B: return "R0B";
    case MoveId::R0C: return "R0C";
    case MoveId::R0D: return "R0D";
    case MoveId::R1: return "R1";
    case MoveId::R1p: return "R1'";
    case MoveId::R2A: return "R2A";
    case MoveId::R2B: return "R2B";
    case MoveId::R2C: return "R2C";
    case MoveId::R3: return "R3";
    case MoveId::Identity: return "Identity";
    case MoveId::Interchange: return "Interchange";
    }
    return "?";
}

namespace {

// Snakes.
SlicedDiagram snake_down_left() {
    return diag({Dir::Down}, {{CUPR, ID}, {ID, CAPR}});
}
SlicedDiagram snake_down_right() {
    return diag({Dir::Down}, {{ID, CUPL}, {CAPL, ID}});
}
SlicedDiagram snake_up_left() {
    return diag({Dir::Up}, {{CUPL, IU}, {IU, CAPL}});
}
SlicedDiagram snake_up_right() {
    return diag({Dir::Up}, {{IU, CUPR}, {CAPR, IU}});
}
SlicedDiagram strand_down() { return diag({Dir::Down}, {{ID}}); }
SlicedDiagram strand_up() { return diag({Dir::Up}, {{IU}}); }

// A downward strand crossing over an upward one (over = the downward strand),
// realized with one cup and one cap. Top [v ^], bottom [^ v].
SlicedDiagram rotated_over_plus() {
    return diag({Dir::Down, Dir::Up},
                {{CUPL, ID, IU}, {IU, XP, IU}, {IU, ID, CAPL}});
}
// Same strand shape with the downward strand passing under.
SlicedDiagram rotated_under_minus() {
    return diag({Dir::Down, Dir::Up},
                {{CUPL, ID, IU}, {IU, XM, IU}, {IU, ID, CAPL}});
}
// Mirror images; top [^ v], bottom [v ^].
SlicedDiagram rotated_over_minus() {
    return diag({Dir::Up, Dir::Down},
                {{IU, ID, CUPR}, {IU, XM, IU}, {CAPR, ID, IU}});
}
SlicedDiagram rotated_under_plus() {
    return diag({Dir::Up, Dir::Down},
                {{IU, ID, CUPR}, {IU, XP, IU}, {CAPR, ID, IU}});
}

SlicedDiagram kink(GenKind crossing) {
    return diag({Dir::Down}, {{ID, CUPR}, {crossing, IU}, {ID, CAPL}});
}

SlicedDiagram append_snake_up_on_left(const SlicedDiagram& d) {
    // d has bottom [^ v]: push an up-snake through the left strand
    auto tail = diag({Dir::Up, Dir::Down}, {{CUPL, IU, ID}, {IU, CAPL, ID}});
    return compose(d, tail);
}

SlicedDiagram append_snake_down_on_left(const SlicedDiagram& d) {
    // d has bottom [v ^]
    auto tail = diag({Dir::Down, Dir::Up}, {{CUPR, ID, IU}, {ID, CAPR, IU}});
    return compose(d, tail);
}

} // namespace

std::vector<MoveFixture> move_fixtures() {
    std::vector<MoveFixture> out;
    out.push_back({MoveId::R0A, snake_down_left(), strand_down()});
    out.push_back({MoveId::R0B, snake_up_left(), strand_up()});
    out.push_back({MoveId::R0C, rotated_over_plus(), append_snake_up_on_left(rotated_over_plus())});
    out.push_back({MoveId::R0D, rotated_over_minus(),
                   append_snake_down_on_left(rotated_over_minus())});
    out.push_back({MoveId::R1, kink(XP), strand_down()});
    out.push_back({MoveId::R1p, compose(kink(XP), kink(XM)), strand_down()});
    out.push_back({MoveId::R2A, diag({Dir::Down, Dir::Down}, {{XP}, {XM}}),
                   diag({Dir::Down, Dir::Down}, {{ID, ID}})});
    out.push_back({MoveId::R2B, compose(rotated_over_minus(), rotated_over_plus()),
                   diag({Dir::Up, Dir::Down}, {{IU, ID}})});
    out.push_back({MoveId::R2C, compose(rotated_over_plus(), rotated_over_minus()),
                   diag({Dir::Down, Dir::Up}, {{ID, IU}})});
    out.push_back({MoveId::R3,
                   diag({Dir::Down, Dir::Down, Dir::Down},
                        {{XM, ID}, {ID, XM}, {XM, ID}}),
                   diag({Dir::Down, Dir::Down, Dir::Down},
                        {{ID, XM}, {XM, ID}, {ID, XM}})});
    out.push_back({MoveId::Identity, diag({Dir::Down, Dir::Down}, {{XP}, {ID, ID}}),
                   diag({Dir::Down, Dir::Down}, {{XP}})});
    out.push_back({MoveId::Interchange,
                   diag({Dir::Down, Dir::Down, Dir::Down, Dir::Down},
                        {{XP, ID, ID}, {ID, ID, XM}}),
                   diag({Dir::Down, Dir::Down, Dir::Down, Dir::Down},
                        {{ID, ID, XM}, {XP, ID, ID}})});
    return out;
}

std::vector<RelationInstance> relation_instances(bool framed) {
    std::vector<RelationInstance> out;
    auto add = [&out](std::string label, MoveId id, SlicedDiagram lhs, SlicedDiagram rhs) {
        out.push_back({std::move(label), {id, std::move(lhs), std::move(rhs)}});
    };
    add("R0A.left", MoveId::R0A, snake_down_left(), strand_down());
    add("R0A.right", MoveId::R0A, snake_down_right(), strand_down());
    add("R0B.left", MoveId::R0B, snake_up_left(), strand_up());
    add("R0B.right", MoveId::R0B, snake_up_right(), strand_up());
    add("R0C", MoveId::R0C, rotated_over_plus(),
        append_snake_up_on_left(rotated_over_plus()));
    add("R0D", MoveId::R0D, rotated_over_minus(),
        append_snake_down_on_left(rotated_over_minus()));
    if (!framed) {
        add("R1.pos", MoveId::R1, kink(XP), strand_down());
        add("R1.neg", MoveId::R1, kink(XM), strand_down());
    } else {
        add("R1'.pn", MoveId::R1p, compose(kink(XP), kink(XM)), strand_down());
        add("R1'.np", MoveId::R1p, compose(kink(XM), kink(XP)), strand_down());
    }
    add("R2A.pm", MoveId::R2A, diag({Dir::Down, Dir::Down}, {{XP}, {XM}}),
        diag({Dir::Down, Dir::Down}, {{ID, ID}}));
    add("R2A.mp", MoveId::R2A, diag({Dir::Down, Dir::Down}, {{XM}, {XP}}),
        diag({Dir::Down, Dir::Down}, {{ID, ID}}));
    add("R2B.over", MoveId::R2B, compose(rotated_over_minus(), rotated_over_plus()),
        diag({Dir::Up, Dir::Down}, {{IU, ID}}));
    add("R2B.under", MoveId::R2B, compose(rotated_under_plus(), rotated_under_minus()),
        diag({Dir::Up, Dir::Down}, {{IU, ID}}));
    add("R2C.over", MoveId::R2C, compose(rotated_over_plus(), rotated_over_minus()),
        diag({Dir::Down, Dir::Up}, {{ID, IU}}));
    add("R2C.under", MoveId::R2C, compose(rotated_under_minus(), rotated_under_plus()),
        diag({Dir::Down, Dir::Up}, {{ID, IU}}));
    add("R3", MoveId::R3,
        diag({Dir::Down, Dir::Down, Dir::Down}, {{XM, ID}, {ID, XM}, {XM, ID}}),
        diag({Dir::Down, Dir::Down, Dir::Down}, {{ID, XM}, {XM, ID}, {ID, XM}}));
    return out;
}

} // namespace xmodlink
