#include "xmodlink/group_algebra.hpp"
#include "xmodlink/word.hpp"

#include <sstream>

namespace xmodlink {

GroupElement evaluate_word(const EnhancedWord& w) {
    int acc = w.group->identity();
    for (const auto& e : w.entries) {
        int v = e.starred ? w.group->inv(e.index) : e.index;
        acc = w.group->mult(acc, v);
    }
    return {w.group, acc};
}

EnhancedWord reverse_star(const EnhancedWord& w) {
    EnhancedWord out{w.group, {}};
    out.entries.reserve(w.entries.size());
    for (auto it = w.entries.rbegin(); it != w.entries.rend(); ++it)
        out.entries.push_back({it->index, !it->starred});
    return out;
}

EnhancedWord parse_word(const GroupPtr& g, const std::string& text) {
    EnhancedWord w{g, {}};
    std::string token;
    auto flush = [&](std::string t) {
        // trim
        size_t b = t.find_first_not_of(" \t");
        size_t e = t.find_last_not_of(" \t");
        if (b == std::string::npos) {
            throw Error("ParseError", "empty entry in word '" + text + "'");
        }
        t = t.substr(b, e - b + 1);
        bool starred = false;
        if (t.back() == '*') {
            starred = true;
            t.pop_back();
        }
        w.entries.push_back({g->element(t), starred});
    };
    std::string trimmed = text;
    if (trimmed.find_first_not_of(" \t") == std::string::npos) return w;
    size_t start = 0;
    while (true) {
        size_t comma = trimmed.find(',', start);
        if (comma == std::string::npos) {
            flush(trimmed.substr(start));
            break;
        }
        flush(trimmed.substr(start, comma - start));
        start = comma + 1;
    }
    return w;
}

std::string word_to_string(const EnhancedWord& w) {
    std::string out;
    for (size_t i = 0; i < w.entries.size(); ++i) {
        if (i) out += ",";
        out += w.group->name(w.entries[i].index);
        if (w.entries[i].starred) out += "*";
    }
    return out;
}

GroupAlgebraElement ga_zero(const GroupPtr& g) { return {g, {}}; }

GroupAlgebraElement ga_term(const GroupElement& e, const Integer& k) {
    GroupAlgebraElement a{e.group, {}};
    if (k != 0) a.coeffs[e.index] = k;
    return a;
}

GroupAlgebraElement ga_add(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    require_same_group(a.group, b.group, "group algebra addition");
    GroupAlgebraElement out = a;
    for (const auto& [i, k] : b.coeffs) {
        auto it = out.coeffs.find(i);
        if (it == out.coeffs.end()) {
            out.coeffs.emplace(i, k);
        } else {
            it->second += k;
            if (it->second == 0) out.coeffs.erase(it);
        }
    }
    return out;
}

GroupAlgebraElement ga_scale(const Integer& k, const GroupAlgebraElement& a) {
    GroupAlgebraElement out{a.group, {}};
    if (k == 0) return out;
    for (const auto& [i, c] : a.coeffs) out.coeffs.emplace(i, c * k);
    return out;
}

bool ga_equal(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    require_same_group(a.group, b.group, "group algebra comparison");
    return a.coeffs == b.coeffs;
}

std::string ga_to_string(const GroupAlgebraElement& a) {
    if (a.coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, k] : a.coeffs) {
        if (!first) os << " + ";
        first = false;
        if (k != 1) os << k.str();
        os << a.group->name(i);
    }
    return os.str();
}

GroupAlgebraElement ga_map(const GroupHom& h, const GroupAlgebraElement& a) {
    require_same_group(h.source(), a.group, "group algebra pushforward");
    GroupAlgebraElement out{h.target(), {}};
    for (const auto& [i, k] : a.coeffs) {
        auto& c = out.coeffs[h.apply(i)];
        c += k;
        if (c == 0) out.coeffs.erase(h.apply(i));
    }
    return out;
}

} // namespace xmodlink
