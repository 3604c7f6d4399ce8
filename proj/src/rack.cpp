#include "xmodlink/rack.hpp"

#include <cmath>
#include <string>

namespace xmodlink {

RackPtr Rack::make(std::vector<std::string> names, const std::vector<std::vector<int>>& left) {
    const int n = static_cast<int>(names.size());
    if (n <= 0) throw Error("IndexOutOfRange", "rack must have at least one element");
    if (static_cast<int>(left.size()) != n)
        throw Error("IndexOutOfRange", "rack table must be square, same dimension as names");

    auto r = std::shared_ptr<Rack>(new Rack());
    r->size_ = n;
    r->left_.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(left[x].size()) != n)
            throw Error("IndexOutOfRange", "rack table row " + std::to_string(x) +
                                               " has wrong length");
        for (int y = 0; y < n; ++y) {
            int v = left[x][y];
            if (v < 0 || v >= n)
                throw Error("IndexOutOfRange", "rack table entry out of range");
            r->left_[static_cast<size_t>(x) * n + y] = v;
        }
    }
    r->names_ = std::move(names);

    // each column x -> x<|y must be a bijection; its inverse gives x -> y|>x
    r->right_.assign(static_cast<size_t>(n) * n, -1);
    for (int y = 0; y < n; ++y) {
        std::vector<int> seen(n, -1);
        for (int x = 0; x < n; ++x) {
            int v = r->lop(x, y);
            if (seen[v] >= 0)
                throw Error("NotBijective",
                            "column y=" + r->names_[y] + " is not a bijection: " +
                                r->names_[seen[v]] + "<|y = " + r->names_[x] + "<|y");
            seen[v] = x;
        }
        for (int v = 0; v < n; ++v) r->right_[static_cast<size_t>(y) * n + v] = seen[v];
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (r->lop(r->lop(x, y), z) != r->lop(r->lop(x, z), r->lop(y, z)))
                    throw Error("SelfDistributivityViolation",
                                "witness (" + r->names_[x] + ", " + r->names_[y] + ", " +
                                    r->names_[z] + ")");
    return r;
}

bool Rack::is_quandle() const {
    for (int x = 0; x < size_; ++x)
        if (lop(x, x) != x) return false;
    return true;
}

int Rack::element(std::string_view name) const {
    for (int i = 0; i < size_; ++i)
        if (names_[i] == name) return i;
    throw Error("UnknownElement", "no rack element named '" + std::string(name) + "'");
}

RackPtr dihedral_quandle(int n) {
    if (n <= 0) throw Error("IndexOutOfRange", "dihedral quandle size must be positive");
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> left(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        names[x] = std::to_string(x);
        for (int y = 0; y < n; ++y) left[x][y] = ((2 * y - x) % n + n) % n;
    }
    return Rack::make(std::move(names), left);
}

RackPtr cyclic_rack(int n) {
    if (n <= 0) throw Error("IndexOutOfRange", "cyclic rack size must be positive");
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> left(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x) {
        names[x] = std::to_string(x);
        for (int y = 0; y < n; ++y) left[x][y] = (x + 1) % n;
    }
    return Rack::make(std::move(names), left);
}

RackPtr conjugation_quandle(const GroupPtr& g, const std::vector<int>& elements) {
    const int n = static_cast<int>(elements.size());
    std::vector<int> pos(g->order(), -1);
    for (int i = 0; i < n; ++i) pos[elements[i]] = i;
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> left(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) names[i] = g->name(elements[i]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int v = g->conj(g->inv(elements[j]), elements[i]); // g^-1 h g
            if (pos[v] < 0)
                throw Error("NotClosed", "carrier not closed under conjugation: " +
                                             g->name(elements[i]) + " <| " +
                                             g->name(elements[j]) + " = " + g->name(v));
            left[i][j] = pos[v];
        }
    return Rack::make(std::move(names), left);
}

RackPtr eisermann_quandle(const GroupPtr& g, const GroupElement& x, bool restrict_to_derived) {
    require_same_group(g, x.group, "eisermann_quandle");
    std::vector<int> carrier;
    if (restrict_to_derived) {
        carrier = commutator_subgroup(g).second.image();
    } else {
        carrier.resize(g->order());
        for (int i = 0; i < g->order(); ++i) carrier[i] = i;
    }
    const int n = static_cast<int>(carrier.size());
    std::vector<int> pos(g->order(), -1);
    for (int i = 0; i < n; ++i) pos[carrier[i]] = i;

    std::vector<std::string> names(n);
    for (int i = 0; i < n; ++i) names[i] = g->name(carrier[i]);
    std::vector<std::vector<int>> left(n, std::vector<int>(n));
    const int xi = x.index;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int h = carrier[i], gg = carrier[j];
            // h <| g = x^-1 h g^-1 x g
            int v = g->mult(g->mult(g->mult(g->mult(g->inv(xi), h), g->inv(gg)), xi), gg);
            if (pos[v] < 0)
                throw Error("NotClosed", "carrier not closed under the operation at (" +
                                             names[i] + ", " + names[j] + ")");
            left[i][j] = pos[v];
        }
    return Rack::make(std::move(names), left);
}

RackCocycle RackCocycle::make(RackPtr rack, GroupPtr values,
                              const std::vector<std::vector<int>>& w) {
    if (!values->is_abelian())
        throw Error("NonAbelianV", "cocycle value group must be abelian");
    const int n = rack->size();
    if (static_cast<int>(w.size()) != n)
        throw Error("IndexOutOfRange", "cocycle table must be size x size");
    RackCocycle c;
    c.rack_ = std::move(rack);
    c.values_ = std::move(values);
    c.w_.assign(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(w[x].size()) != n)
            throw Error("IndexOutOfRange", "cocycle row has wrong length");
        for (int y = 0; y < n; ++y) {
            if (w[x][y] < 0 || w[x][y] >= c.values_->order())
                throw Error("IndexOutOfRange", "cocycle value out of range");
            c.w_[static_cast<size_t>(x) * n + y] = w[x][y];
        }
    }
    const auto& v = *c.values_;
    const auto& r = *c.rack_;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (v.mult(c.w(x, y), c.w(r.lop(x, y), z)) !=
                    v.mult(c.w(x, z), c.w(r.lop(x, z), r.lop(y, z))))
                    throw Error("CocycleViolation", "witness (" + r.name(x) + ", " + r.name(y) +
                                                        ", " + r.name(z) + ")");
    return c;
}

bool is_quandle_cocycle(const RackCocycle& c) {
    for (int x = 0; x < c.rack()->size(); ++x)
        if (c.w(x, x) != c.values()->identity()) return false;
    return true;
}

std::vector<RackCocycle> enumerate_quandle_cocycles(const RackPtr& rack, const GroupPtr& values) {
    const int n = rack->size();
    const int m = values->order();
    const int free_cells = n * n - n;
    if (free_cells * std::log(static_cast<double>(m)) > std::log(1e7))
        throw Error("BoundExceeded", "cocycle enumeration space too large");

    std::vector<std::pair<int, int>> cells;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) cells.emplace_back(x, y);

    std::vector<RackCocycle> out;
    std::vector<std::vector<int>> w(n, std::vector<int>(n, values->identity()));
    long long total = 1;
    for (int i = 0; i < free_cells; ++i) total *= m;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (const auto& [x, y] : cells) {
            w[x][y] = static_cast<int>(c % m);
            c /= m;
        }
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                for (int z = 0; z < n && ok; ++z)
                    ok = values->mult(w[x][y], w[rack->lop(x, y)][z]) ==
                         values->mult(w[x][z], w[rack->lop(x, z)][rack->lop(y, z)]);
        if (ok) out.push_back(RackCocycle::make(rack, values, w));
    }
    return out;
}

} // namespace xmodlink
