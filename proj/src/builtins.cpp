#include "xmodlink/builtins.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace xmodlink {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error("UnknownBuiltin", "bad " + what + " '" + s + "'");
    }
}

struct Gl25Data {
    GroupPtr gl;
    GroupPtr pgl;
    std::vector<Mat2> mats;
    std::unique_ptr<CentralExtension> ext;
};

const Gl25Data& gl25_data() {
    static Gl25Data data = [] {
        Gl25Data d;
        auto [gl, mats] = matrix_group_with_elements(
            {{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 0, 0, 1}}, 5);
        d.gl = gl;
        d.mats = mats;

        // scalar matrices form the center of GL(2,5)
        std::vector<int> scalars;
        for (int i = 0; i < gl->order(); ++i)
            if (d.mats[i][1] == 0 && d.mats[i][2] == 0 && d.mats[i][0] == d.mats[i][3])
                scalars.push_back(i);

        // class names: scale the representative so its first nonzero entry is 1
        std::vector<int> class_of(gl->order(), -1);
        std::vector<std::string> names;
        {
            std::vector<int> reps;
            for (int a = 0; a < gl->order(); ++a) {
                if (class_of[a] >= 0) continue;
                int c = static_cast<int>(reps.size());
                reps.push_back(a);
                for (int z : scalars) class_of[gl->mult(a, z)] = c;
            }
            names.reserve(reps.size());
            for (int rep : reps) {
                Mat2 m = d.mats[rep];
                int lead = 0;
                for (int v : m)
                    if (v != 0) {
                        lead = v;
                        break;
                    }
                int inv_lead = 1;
                for (int t = 1; t < 5; ++t)
                    if (lead * t % 5 == 1) inv_lead = t;
                std::ostringstream os;
                os << "~[" << m[0] * inv_lead % 5 << "," << m[1] * inv_lead % 5 << ";"
                   << m[2] * inv_lead % 5 << "," << m[3] * inv_lead % 5 << "]";
                names.push_back(os.str());
            }
        }
        auto [pgl, proj] = quotient_by_central_subgroup(gl, scalars, names);
        d.pgl = pgl;
        d.ext = std::make_unique<CentralExtension>(CentralExtension::make(gl, proj));
        return d;
    }();
    return data;
}

} // namespace

const CentralExtension& gl25_extension() { return *gl25_data().ext; }

GroupPtr builtin_group(const std::string& name) {
    static std::map<std::string, GroupPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;

    GroupPtr g;
    if (name == "trivial") g = trivial_group();
    else if (name == "S3") g = symmetric_group(3);
    else if (name == "S4") g = symmetric_group(4);
    else if (name == "S5") g = symmetric_group(5);
    else if (name == "D4") g = dihedral_group(4);
    else if (name == "Q8") g = quaternion_group();
    else if (name == "GL25") g = gl25_data().gl;
    else if (name == "PGL25") g = gl25_data().pgl;
    else if (name.size() > 1 && name[0] == 'Z')
        g = cyclic_group(parse_int(name.substr(1), "cyclic order"));
    else
        throw Error("UnknownBuiltin", "no built-in group '" + name + "'");
    cache[name] = g;
    return g;
}

RackPtr builtin_rack(const std::string& key) {
    auto parts = split(key, ':');
    if (parts.size() == 3 && parts[0] == "rack" && parts[1] == "dihedral")
        return dihedral_quandle(parse_int(parts[2], "rack size"));
    if (parts.size() == 3 && parts[0] == "rack" && parts[1] == "cyclic")
        return cyclic_rack(parse_int(parts[2], "rack size"));
    throw Error("UnknownBuiltin", "no built-in rack '" + key + "'");
}

namespace {

GroupElement parse_x(const GroupPtr& g, const std::string& field) {
    if (field.rfind("x=", 0) != 0)
        throw Error("UnknownBuiltin", "expected x=<element>, got '" + field + "'");
    std::string name = field.substr(2);
    auto idx = g->find(name);
    if (!idx && !name.empty() && name[0] == '[') {
        // matrix literal for a PGL class: normalize through the GL element
        const auto& d = gl25_data();
        auto gi = d.gl->find(name);
        if (gi) {
            int cls = gl25_extension().boundary().apply(*gi);
            if (same_group(g, d.pgl)) idx = cls;
        }
    }
    if (!idx) throw Error("UnknownBuiltin", "no element '" + name + "'");
    return {g, *idx};
}

} // namespace

PairPtr builtin_pair(const std::string& key) {
    auto parts = split(key, ':');
    if (parts.size() == 3 && (parts[0] == "eisermann" || parts[0] == "eisermann-derived")) {
        auto g = builtin_group(parts[1]);
        return eisermann_pair(g, parse_x(g, parts[2]), parts[0] == "eisermann-derived");
    }
    if (parts.size() == 3 && parts[0] == "rackpair") {
        auto rack = builtin_rack("rack:" + parts[1] + ":" + parts[2]);
        return pair_from_rack(rack, cyclic_group(rack->size()));
    }
    if (parts.size() == 3 && parts[0] == "lifted" && parts[1] == "gl25") {
        const auto& ext = gl25_extension();
        return lifted_eisermann_pair(ext, parse_x(ext.quotient(), parts[2]));
    }
    throw Error("UnknownBuiltin", "no built-in pair '" + key + "'");
}

SlicedDiagram builtin_diagram(const std::string& key) {
    std::string name = key;
    if (name.rfind("diagram:", 0) == 0) name = name.substr(8);
    if (name == "unknotstring") return unknot_string();
    if (name == "trefoil+string") return trefoil_plus_string();
    if (name == "trefoil-string") return trefoil_minus_string();
    if (name == "fig8string") return figure_eight_string();
    if (name == "unknotclosed") return closure(unknot_string());
    if (name == "trefoil+closed") return closure(trefoil_plus_string());
    if (name == "trefoil-closed") return closure(trefoil_minus_string());
    if (name == "fig8closed") return closure(figure_eight_string());
    throw Error("UnknownBuiltin", "no built-in diagram '" + key + "'");
}

std::vector<std::string> builtin_catalogue() {
    return {
        "group:trivial",
        "group:Z<n>",
        "group:S3  group:S4  group:S5",
        "group:D4  group:Q8",
        "group:GL25  group:PGL25",
        "rack:dihedral:<n>",
        "rack:cyclic:<n>",
        "eisermann:<group>:x=<element>",
        "eisermann-derived:<group>:x=<element>",
        "rackpair:dihedral:<n>   (cyclic group law)",
        "rackpair:cyclic:<n>     (cyclic group law)",
        "lifted:gl25:x=<matrix or class>",
        "diagram:unknotstring  diagram:trefoil+string  diagram:trefoil-string",
        "diagram:fig8string",
        "diagram:unknotclosed  diagram:trefoil+closed  diagram:trefoil-closed",
        "diagram:fig8closed",
    };
}

} // namespace xmodlink
