#include "xmodlink/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace xmodlink {

GroupPtr FiniteGroup::from_cayley(std::vector<std::string> names,
                                  const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(names.size());
    if (n <= 0)
        throw Error("IndexOutOfRange", "group must have at least one element");
    if (static_cast<int>(table.size()) != n)
        throw Error("IndexOutOfRange", "Cayley table must be square, same dimension as names");

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->mult_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw Error("IndexOutOfRange",
                        "Cayley table row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < n; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= n)
                throw Error("IndexOutOfRange",
                            "table entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") = " + std::to_string(v) + " is not an element index");
            g->mult_[static_cast<size_t>(i) * n + j] = v;
        }
    }

    for (int i = 0; i < n; ++i) {
        if (names[i].empty())
            throw Error("IndexOutOfRange", "element " + std::to_string(i) + " has empty name");
        if (g->name_index_.count(names[i]))
            throw Error("IndexOutOfRange", "duplicate element name '" + names[i] + "'");
        g->name_index_[names[i]] = i;
    }
    g->names_ = std::move(names);

    // identity
    int id = -1;
    for (int e = 0; e < n && id < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            ok = g->mult(e, a) == a && g->mult(a, e) == a;
        if (ok) id = e;
    }
    if (id < 0)
        throw Error("NoIdentity", "no two-sided identity element");
    g->identity_ = id;

    // associativity: exhaustive up to order 512, seeded random triples above
    auto check_triple = [&](int a, int b, int c) {
        if (g->mult(g->mult(a, b), c) != g->mult(a, g->mult(b, c)))
            throw Error("NonAssociative", "associativity fails at (" + g->names_[a] + ", " +
                                              g->names_[b] + ", " + g->names_[c] + ")");
    };
    if (n <= 512) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937 rng(0x5eed'ca71);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 500'000; ++t) check_triple(pick(rng), pick(rng), pick(rng));
    }

    // inverses
    g->inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (g->mult(a, b) == id && g->mult(b, a) == id) {
                g->inverse_[a] = b;
                break;
            }
        if (g->inverse_[a] < 0)
            throw Error("NoInverse", "no two-sided inverse for element " + g->names_[a]);
    }
    return g;
}

int FiniteGroup::power(int a, long long k) const {
    int r = identity_;
    int base = a;
    long long e = k;
    if (e < 0) {
        base = inv(a);
        e = -e;
    }
    while (e > 0) {
        if (e & 1) r = mult(r, base);
        base = mult(base, base);
        e >>= 1;
    }
    return r;
}

std::optional<int> FiniteGroup::find(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

int FiniteGroup::element(std::string_view name) const {
    auto i = find(name);
    if (!i)
        throw Error("UnknownElement", "no element named '" + std::string(name) + "'");
    return *i;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < order_; ++a)
        for (int b = a + 1; b < order_; ++b)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

int FiniteGroup::element_order(int a) const {
    int k = 1;
    int x = a;
    while (x != identity_) {
        x = mult(x, a);
        ++k;
    }
    return k;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a.get() == b.get(); }

void require_same_group(const GroupPtr& a, const GroupPtr& b, const char* what) {
    if (!same_group(a, b))
        throw Error("GroupMismatch", std::string("elements of different groups in ") + what);
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    require_same_group(a.group, b.group, "multiplication");
    return {a.group, a.group->mult(a.index, b.index)};
}

GroupElement inverse(const GroupElement& a) { return {a.group, a.group->inv(a.index)}; }

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<int> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
    const int n = source_->order();
    if (static_cast<int>(image_.size()) != n)
        throw Error("NotAHomomorphism", "image table has wrong length");
    for (int a = 0; a < n; ++a)
        if (image_[a] < 0 || image_[a] >= target_->order())
            throw Error("IndexOutOfRange", "hom image out of range at " + source_->name(a));
    if (image_[source_->identity()] != target_->identity())
        throw Error("NotAHomomorphism", "identity is not sent to identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (image_[source_->mult(a, b)] != target_->mult(image_[a], image_[b]))
                throw Error("NotAHomomorphism",
                            "f(ab) != f(a)f(b) at (" + source_->name(a) + ", " +
                                source_->name(b) + ")");
}

bool GroupHom::is_surjective() const {
    std::vector<char> hit(target_->order(), 0);
    for (int v : image_) hit[v] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<int> GroupHom::kernel() const {
    std::vector<int> k;
    for (int a = 0; a < source_->order(); ++a)
        if (image_[a] == target_->identity()) k.push_back(a);
    return k;
}

// --- constructions ---------------------------------------------------------

GroupPtr trivial_group() {
    return FiniteGroup::from_cayley({"1"}, {{0}});
}

GroupPtr cyclic_group(int n) {
    if (n <= 0) throw Error("IndexOutOfRange", "cyclic group order must be positive");
    std::vector<std::string> names(n);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        names[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return FiniteGroup::from_cayley(std::move(names), t);
}

GroupPtr dihedral_group(int n) {
    if (n <= 0) throw Error("IndexOutOfRange", "dihedral parameter must be positive");
    const int order = 2 * n;
    // elements r^i s^j, j in {0,1}; index = i + n*j
    auto mul = [n](int x, int y) {
        int xi = x % n, xj = x / n, yi = y % n, yj = y / n;
        // (r^xi s^xj)(r^yi s^yj): s r^k = r^-k s
        int i = xj == 0 ? (xi + yi) % n : ((xi - yi) % n + n) % n;
        int j = (xj + yj) % 2;
        return i + n * j;
    };
    std::vector<std::string> names(order);
    for (int i = 0; i < n; ++i) {
        names[i] = i == 0 ? "1" : (i == 1 ? "r" : "r" + std::to_string(i));
        names[n + i] = i == 0 ? "s" : (i == 1 ? "rs" : "r" + std::to_string(i) + "s");
    }
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) t[a][b] = mul(a, b);
    return FiniteGroup::from_cayley(std::move(names), t);
}

GroupPtr quaternion_group() {
    // 1, -1, i, -i, j, -j, k, -k
    const std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto neg = [](int a) { return a ^ 1; };
    auto mul = [&](int a, int b) -> int {
        if (a < 2) return a == 0 ? b : neg(b);
        if (b < 2) return b == 0 ? a : neg(a);
        int ua = (a - 2) / 2, sa = a & 1; // unit 0=i,1=j,2=k and sign bit
        int ub = (b - 2) / 2, sb = b & 1;
        int sign = sa ^ sb;
        if (ua == ub) return sign == 0 ? 1 : 0; // u*u = -1
        // i*j=k, j*k=i, k*i=j and anticommutativity
        int uc = 3 - ua - ub;
        bool cyclic = (ub == (ua + 1) % 3);
        if (!cyclic) sign ^= 1;
        return 2 + 2 * uc + sign;
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
    return FiniteGroup::from_cayley(names, t);
}

namespace {

std::string cycle_name(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> seen(n, 0);
    std::string out;
    for (int s = 0; s < n; ++s) {
        if (seen[s] || perm[s] == s) continue;
        out += '(';
        int x = s;
        while (!seen[x]) {
            seen[x] = 1;
            out += std::to_string(x + 1);
            x = perm[x];
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

} // namespace

GroupPtr symmetric_group(int n, int bound) {
    if (n <= 0) throw Error("IndexOutOfRange", "symmetric group degree must be positive");
    if (n > bound)
        throw Error("BoundExceeded", "symmetric_group(" + std::to_string(n) +
                                         ") exceeds bound " + std::to_string(bound));
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

    const int order = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    std::vector<int> c(n);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            // left-to-right action: (s.t)(i) = t(s(i))
            for (int i = 0; i < n; ++i) c[i] = perms[b][perms[a][i]];
            t[a][b] = index.at(c);
        }
    std::vector<std::string> names(order);
    for (int a = 0; a < order; ++a) names[a] = cycle_name(perms[a]);
    return FiniteGroup::from_cayley(std::move(names), t);
}

namespace {

Mat2 mat_mul(const Mat2& a, const Mat2& b, int p) {
    return {(a[0] * b[0] + a[1] * b[2]) % p, (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p, (a[2] * b[1] + a[3] * b[3]) % p};
}

int mat_det(const Mat2& a, int p) { return ((a[0] * a[3] - a[1] * a[2]) % p + p) % p; }

std::string mat_name(const Mat2& m) {
    std::ostringstream os;
    os << "[" << m[0] << "," << m[1] << ";" << m[2] << "," << m[3] << "]";
    return os.str();
}

} // namespace

std::pair<GroupPtr, std::vector<Mat2>>
matrix_group_with_elements(const std::vector<Mat2>& generators, int p, int cap) {
    if (p < 2) throw Error("IndexOutOfRange", "modulus must be at least 2");
    for (const auto& g : generators) {
        for (int v : g)
            if (v < 0 || v >= p)
                throw Error("IndexOutOfRange", "generator entries must lie in 0..p-1");
        if (mat_det(g, p) == 0)
            throw Error("SingularGenerator", "generator " + mat_name(g) + " is singular mod " +
                                                 std::to_string(p));
    }

    const Mat2 id = {1, 0, 0, 1};
    std::map<Mat2, int> index;
    std::vector<Mat2> elems;
    std::queue<Mat2> todo;
    index[id] = 0;
    elems.push_back(id);
    todo.push(id);
    while (!todo.empty()) {
        Mat2 cur = todo.front();
        todo.pop();
        for (const auto& g : generators) {
            Mat2 prod = mat_mul(cur, g, p);
            if (!index.count(prod)) {
                if (static_cast<int>(elems.size()) >= cap)
                    throw Error("BoundExceeded",
                                "matrix closure exceeds cap " + std::to_string(cap));
                index[prod] = static_cast<int>(elems.size());
                elems.push_back(prod);
                todo.push(prod);
            }
        }
    }

    const int order = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) t[a][b] = index.at(mat_mul(elems[a], elems[b], p));
    std::vector<std::string> names(order);
    for (int a = 0; a < order; ++a) names[a] = mat_name(elems[a]);
    return {FiniteGroup::from_cayley(std::move(names), t), elems};
}

GroupPtr group_from_matrix_generators(const std::vector<Mat2>& generators, int p, int cap) {
    return matrix_group_with_elements(generators, p, cap).first;
}

std::pair<GroupPtr, GroupHom> generated_subgroup(const GroupPtr& g,
                                                 const std::vector<int>& generators,
                                                 const std::string& name_prefix) {
    std::set<int> seen;
    std::queue<int> todo;
    seen.insert(g->identity());
    todo.push(g->identity());
    for (int x : generators)
        if (seen.insert(x).second) todo.push(x);
    while (!todo.empty()) {
        int cur = todo.front();
        todo.pop();
        for (int x : generators) {
            for (int prod : {g->mult(cur, x), g->mult(cur, g->inv(x))})
                if (seen.insert(prod).second) todo.push(prod);
        }
    }

    std::vector<int> elems(seen.begin(), seen.end()); // ascending parent indices
    std::unordered_map<int, int> sub_index;
    for (size_t i = 0; i < elems.size(); ++i) sub_index[elems[i]] = static_cast<int>(i);

    const int order = static_cast<int>(elems.size());
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            int prod = g->mult(elems[a], elems[b]);
            auto it = sub_index.find(prod);
            if (it == sub_index.end())
                throw Error("NotClosed", "subgroup closure bug"); // unreachable
            t[a][b] = it->second;
        }
    std::vector<std::string> names(order);
    for (int a = 0; a < order; ++a) names[a] = name_prefix + g->name(elems[a]);
    auto sub = FiniteGroup::from_cayley(std::move(names), t);
    return {sub, GroupHom(sub, g, elems)};
}

std::pair<GroupPtr, GroupHom> commutator_subgroup(const GroupPtr& g) {
    std::set<int> gens;
    for (int a = 0; a < g->order(); ++a)
        for (int b = 0; b < g->order(); ++b) gens.insert(g->comm(a, b));
    return generated_subgroup(g, std::vector<int>(gens.begin(), gens.end()));
}

std::pair<GroupPtr, GroupHom> centralizer(const GroupPtr& g, const GroupElement& x) {
    require_same_group(g, x.group, "centralizer");
    std::vector<int> elems;
    for (int h = 0; h < g->order(); ++h)
        if (g->mult(h, x.index) == g->mult(x.index, h)) elems.push_back(h);
    // the centralizer is already a subgroup; reuse the closure machinery
    return generated_subgroup(g, elems);
}

std::pair<GroupPtr, GroupHom>
quotient_by_central_subgroup(const GroupPtr& g, const std::vector<int>& subgroup,
                             const std::vector<std::string>& class_names) {
    std::set<int> sub(subgroup.begin(), subgroup.end());
    if (!sub.count(g->identity()))
        throw Error("IndexOutOfRange", "subgroup must contain the identity");
    for (int a : sub)
        for (int b : sub)
            if (!sub.count(g->mult(a, b)))
                throw Error("NotClosed", "quotient kernel is not a subgroup");
    for (int a : sub)
        for (int h = 0; h < g->order(); ++h)
            if (g->mult(a, h) != g->mult(h, a))
                throw Error("KernelNotCentral",
                            "subgroup element " + g->name(a) + " does not commute with " +
                                g->name(h));

    std::vector<int> class_of(g->order(), -1);
    std::vector<int> reps;
    for (int a = 0; a < g->order(); ++a) {
        if (class_of[a] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int z : sub) class_of[g->mult(a, z)] = c;
    }
    const int order = static_cast<int>(reps.size());
    std::vector<std::vector<int>> t(order, std::vector<int>(order));
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) t[a][b] = class_of[g->mult(reps[a], reps[b])];
    std::vector<std::string> names(order);
    if (!class_names.empty()) {
        if (static_cast<int>(class_names.size()) != order)
            throw Error("IndexOutOfRange", "wrong number of class names");
        names = class_names;
    } else {
        for (int a = 0; a < order; ++a) names[a] = "~" + g->name(reps[a]);
    }
    auto q = FiniteGroup::from_cayley(std::move(names), t);
    return {q, GroupHom(g, q, class_of)};
}

} // namespace xmodlink
