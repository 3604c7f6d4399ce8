#include "xmodlink/central_extension.hpp"

#include <cassert>

namespace xmodlink {

CentralExtension CentralExtension::make(GroupPtr total, GroupHom boundary) {
    const auto& g = boundary.target();
    std::vector<int> section(g->order(), -1);
    for (int e = 0; e < total->order(); ++e) {
        int& s = section[boundary.apply(e)];
        if (s < 0) s = e; // fiber elements visited in increasing index order
    }
    for (int v : section)
        if (v < 0) throw Error("NotSurjective", "boundary of the extension is not surjective");
    return make_with_section(std::move(total), std::move(boundary), std::move(section));
}

CentralExtension CentralExtension::make_with_section(GroupPtr total, GroupHom boundary,
                                                     std::vector<int> section) {
    if (!same_group(boundary.source(), total))
        throw Error("NotAHomomorphism", "boundary source must be the total group");
    GroupPtr quotient = boundary.target();
    if (!boundary.is_surjective())
        throw Error("NotSurjective", "boundary of the extension is not surjective");
    for (int e : boundary.kernel())
        for (int f = 0; f < total->order(); ++f)
            if (total->mult(e, f) != total->mult(f, e))
                throw Error("KernelNotCentral", "witness " + total->name(e) +
                                                    " does not commute with " + total->name(f));
    if (static_cast<int>(section.size()) != quotient->order())
        throw Error("IndexOutOfRange", "section has wrong length");
    for (int g = 0; g < quotient->order(); ++g)
        if (section[g] < 0 || section[g] >= total->order() ||
            boundary.apply(section[g]) != g)
            throw Error("IndexOutOfRange",
                        "section is not a section at " + quotient->name(g));
    return CentralExtension(std::move(total), std::move(quotient), std::move(boundary),
                            std::move(section));
}

int CentralExtension::bracket(int g, int h) const {
    return total_->comm(section_[g], section_[h]);
}

int CentralExtension::lifted_act(int g, int e) const {
    return total_->conj(section_[g], e);
}

CentralExtension central_extension_new(const GroupPtr& total, const GroupHom& boundary) {
    return CentralExtension::make(total, boundary);
}

GroupElement bracket(const CentralExtension& ext, const GroupElement& g, const GroupElement& h) {
    require_same_group(ext.quotient(), g.group, "bracket");
    require_same_group(ext.quotient(), h.group, "bracket");
    return {ext.total(), ext.bracket(g.index, h.index)};
}

XmodPtr xmod_from_central_extension(const CentralExtension& ext) {
    const auto& e = ext.total();
    const auto& g = ext.quotient();
    std::vector<std::vector<int>> action(g->order(), std::vector<int>(e->order()));
    for (int a = 0; a < g->order(); ++a)
        for (int x = 0; x < e->order(); ++x) action[a][x] = ext.lifted_act(a, x);
    // Peiffer validation cannot fail for a central extension; make() asserts it.
    return CrossedModule::make(g, e, ext.boundary(), action);
}

} // namespace xmodlink
