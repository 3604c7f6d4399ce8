#include "xmodlink/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace xmodlink {

namespace {

struct LineReader {
    std::string path;
    std::ifstream in;
    int lineno = 0;

    explicit LineReader(const std::string& p) : path(p), in(p) {
        if (!in) throw Error("FileNotFound", "cannot open " + p);
    }

    // next non-empty, non-comment line split into whitespace tokens
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos)
                line = line.substr(0, hash);
            tokens.clear();
            std::istringstream ls(line);
            std::string tok;
            while (ls >> tok) tokens.push_back(tok);
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& code, const std::string& msg) const {
        throw Error(code, path + ":" + std::to_string(lineno) + ": " + msg);
    }

    void expect(bool ok, const std::string& msg) const {
        if (!ok) fail("ParseError", msg);
    }
};

std::string sibling(const std::string& base_file, const std::string& rel) {
    std::filesystem::path p(rel);
    if (p.is_absolute()) return rel;
    return (std::filesystem::path(base_file).parent_path() / p).string();
}

} // namespace

GroupPtr load_group(const std::string& path) {
    LineReader r(path);
    std::vector<std::string> toks;
    r.expect(r.next(toks) && toks.size() == 3 && toks[0] == "group",
             "expected 'group <name> <order>'");
    int order = 0;
    try {
        order = std::stoi(toks[2]);
    } catch (const std::exception&) {
        r.fail("ParseError", "bad order '" + toks[2] + "'");
    }
    r.expect(order > 0, "order must be positive");

    r.expect(r.next(toks) && !toks.empty() && toks[0] == "elements",
             "expected an 'elements' line");
    r.expect(static_cast<int>(toks.size()) == order + 1,
             "elements line must list exactly " + std::to_string(order) + " names");
    std::vector<std::string> names(toks.begin() + 1, toks.end());
    std::map<std::string, int> index;
    for (int i = 0; i < order; ++i) {
        if (index.count(names[i])) r.fail("ParseError", "duplicate name '" + names[i] + "'");
        index[names[i]] = i;
    }

    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i) {
        r.expect(r.next(toks), "missing table row " + std::to_string(i + 1));
        r.expect(static_cast<int>(toks.size()) == order,
                 "table row " + std::to_string(i + 1) + " must have " +
                     std::to_string(order) + " entries");
        for (int j = 0; j < order; ++j) {
            auto it = index.find(toks[j]);
            if (it == index.end()) r.fail("ParseError", "unknown element '" + toks[j] + "'");
            table[i][j] = it->second;
        }
    }
    try {
        return FiniteGroup::from_cayley(names, table);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

void save_group(const std::string& path, const GroupPtr& g, const std::string& name) {
    for (const auto& n : g->names())
        if (n.find_first_of(" \t#") != std::string::npos)
            throw Error("ParseError", "element name '" + n + "' cannot be serialized");
    std::ofstream out(path);
    if (!out) throw Error("FileNotFound", "cannot write " + path);
    out << "group " << name << " " << g->order() << "\n";
    out << "elements";
    for (const auto& n : g->names()) out << " " << n;
    out << "\n";
    for (int i = 0; i < g->order(); ++i) {
        for (int j = 0; j < g->order(); ++j)
            out << (j ? " " : "") << g->name(g->mult(i, j));
        out << "\n";
    }
}

XmodPtr load_xmod(const std::string& path) {
    LineReader r(path);
    std::vector<std::string> toks;
    r.expect(r.next(toks) && toks.size() == 2 && toks[0] == "xmod", "expected 'xmod <name>'");
    r.expect(r.next(toks) && toks.size() == 2 && toks[0] == "base",
             "expected 'base <path.grp>'");
    GroupPtr base = load_group(sibling(path, toks[1]));
    r.expect(r.next(toks) && toks.size() == 2 && toks[0] == "fiber",
             "expected 'fiber <path.grp>'");
    GroupPtr fiber = load_group(sibling(path, toks[1]));

    r.expect(r.next(toks) && toks.size() == 1 && toks[0] == "boundary:",
             "expected a 'boundary:' block");
    std::vector<int> image(fiber->order(), -1);
    for (int i = 0; i < fiber->order(); ++i) {
        r.expect(r.next(toks), "boundary block is incomplete");
        r.expect(toks.size() == 3 && toks[1] == "->", "expected '<e> -> <g>'");
        auto e = fiber->find(toks[0]);
        auto g = base->find(toks[2]);
        if (!e) r.fail("ParseError", "unknown fiber element '" + toks[0] + "'");
        if (!g) r.fail("ParseError", "unknown base element '" + toks[2] + "'");
        if (image[*e] >= 0) r.fail("ParseError", "duplicate boundary for '" + toks[0] + "'");
        image[*e] = *g;
    }

    r.expect(r.next(toks) && toks.size() == 1 && toks[0] == "action:",
             "expected an 'action:' block");
    std::vector<std::vector<int>> action(base->order(), std::vector<int>(fiber->order(), -1));
    bool default_trivial = false;
    int specified = 0;
    while (r.next(toks)) {
        if (toks.size() == 2 && toks[0] == "default:" && toks[1] == "trivial") {
            default_trivial = true;
            continue;
        }
        r.expect(toks.size() == 4 && toks[2] == "->", "expected '<g> <e> -> <e'>'");
        auto g = base->find(toks[0]);
        auto e = fiber->find(toks[1]);
        auto v = fiber->find(toks[3]);
        if (!g) r.fail("ParseError", "unknown base element '" + toks[0] + "'");
        if (!e || !v) r.fail("ParseError", "unknown fiber element");
        r.expect(action[*g][*e] < 0, "duplicate action entry");
        action[*g][*e] = *v;
        ++specified;
    }
    for (int g = 0; g < base->order(); ++g)
        for (int e = 0; e < fiber->order(); ++e)
            if (action[g][e] < 0) {
                if (!default_trivial)
                    throw Error("ParseError",
                                path + ": action table incomplete at (" + base->name(g) +
                                    ", " + fiber->name(e) +
                                    ") and no 'default: trivial' line");
                action[g][e] = e;
            }
    (void)specified;
    try {
        return CrossedModule::make(base, fiber, GroupHom(fiber, base, image), action);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

RackPtr load_rack(const std::string& path) {
    LineReader r(path);
    std::vector<std::string> toks;
    r.expect(r.next(toks) && toks.size() == 3 && toks[0] == "rack",
             "expected 'rack <name> <size>'");
    int size = 0;
    try {
        size = std::stoi(toks[2]);
    } catch (const std::exception&) {
        r.fail("ParseError", "bad size '" + toks[2] + "'");
    }
    r.expect(size > 0, "size must be positive");
    r.expect(r.next(toks) && static_cast<int>(toks.size()) == size + 1 &&
                 toks[0] == "elements",
             "expected an 'elements' line with " + std::to_string(size) + " names");
    std::vector<std::string> names(toks.begin() + 1, toks.end());
    std::map<std::string, int> index;
    for (int i = 0; i < size; ++i) index[names[i]] = i;
    std::vector<std::vector<int>> left(size, std::vector<int>(size));
    for (int x = 0; x < size; ++x) {
        r.expect(r.next(toks), "missing rack row " + std::to_string(x + 1));
        r.expect(static_cast<int>(toks.size()) == size, "rack row has wrong length");
        for (int y = 0; y < size; ++y) {
            auto it = index.find(toks[y]);
            if (it == index.end()) r.fail("ParseError", "unknown element '" + toks[y] + "'");
            left[x][y] = it->second;
        }
    }
    try {
        return Rack::make(names, left);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

RackCocycle load_cocycle(const std::string& path) {
    LineReader r(path);
    std::vector<std::string> toks;
    r.expect(r.next(toks) && toks.size() == 2 && toks[0] == "cocycle",
             "expected 'cocycle <name>'");
    r.expect(r.next(toks) && toks.size() == 2 && toks[0] == "rack",
             "expected 'rack <path.rck>'");
    RackPtr rack = load_rack(sibling(path, toks[1]));
    r.expect(r.next(toks) && toks.size() == 2 && toks[0] == "values",
             "expected 'values <path.grp>'");
    GroupPtr values = load_group(sibling(path, toks[1]));
    r.expect(r.next(toks) && toks.size() == 1 && toks[0] == "w:", "expected a 'w:' block");
    const int n = rack->size();
    std::vector<std::vector<int>> w(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        r.expect(r.next(toks), "missing cocycle row " + std::to_string(x + 1));
        r.expect(static_cast<int>(toks.size()) == n, "cocycle row has wrong length");
        for (int y = 0; y < n; ++y) {
            auto v = values->find(toks[y]);
            if (!v) r.fail("ParseError", "unknown value element '" + toks[y] + "'");
            w[x][y] = *v;
        }
    }
    try {
        return RackCocycle::make(rack, values, w);
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

PairPtr load_pair(const std::string& path) {
    LineReader r(path);
    std::vector<std::string> toks;
    r.expect(r.next(toks) && toks.size() == 2 && toks[0] == "pair", "expected 'pair <name>'");
    r.expect(r.next(toks) && toks.size() == 2 && toks[0] == "xmod",
             "expected 'xmod <path.xmod>'");
    XmodPtr xm = load_xmod(sibling(path, toks[1]));
    const auto& g = xm->base();
    const auto& e = xm->fiber();
    const int n = g->order();

    auto read_block = [&](const char* header) {
        r.expect(r.next(toks) && toks.size() == 1 && toks[0] == header,
                 std::string("expected a '") + header + "' block");
        std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
        for (int k = 0; k < n * n; ++k) {
            r.expect(r.next(toks), std::string(header) + " block is incomplete");
            r.expect(toks.size() == 4 && toks[2] == "->", "expected '<X> <Y> -> <e>'");
            auto x = g->find(toks[0]);
            auto y = g->find(toks[1]);
            auto v = e->find(toks[3]);
            if (!x || !y) r.fail("ParseError", "unknown base element");
            if (!v) r.fail("ParseError", "unknown fiber element '" + toks[3] + "'");
            r.expect(t[*x][*y] < 0, "duplicate table entry");
            t[*x][*y] = *v;
        }
        return t;
    };
    auto psi = read_block("psi:");
    auto phi = read_block("phi:");
    try {
        return ReidemeisterPair::make(xm, psi, phi);
    } catch (const Error& err) {
        throw Error(err.code(), path + ": " + err.what());
    }
}

SlicedDiagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return diagram_parse(ss.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

void write_invariant_tsv(std::ostream& os, const InvariantResult& r, const GroupPtr& fiber) {
    os << "source:\t" << word_to_string(r.source_word) << "\n";
    os << "target:\t" << word_to_string(r.target_word) << "\n";
    for (const auto& [e, k] : r.terms) os << k.str() << "\t" << fiber->name(e) << "\n";
}

std::string invariant_tsv(const InvariantResult& r, const GroupPtr& fiber) {
    std::ostringstream os;
    write_invariant_tsv(os, r, fiber);
    return os.str();
}

} // namespace xmodlink
