#pragma once

#include "xmodlink/group.hpp"
#include "xmodlink/xmod.hpp"

#include <vector>

namespace xmodlink {

// A central extension 1 -> A -> E -> G -> 1: a surjective boundary whose
// kernel is central in E, together with a set-theoretic section of it.
class CentralExtension {
public:
    // Section chosen deterministically: least fiber index in each fiber.
    // Throws NotSurjective or KernelNotCentral (with witness).
    static CentralExtension make(GroupPtr total, GroupHom boundary);
    // Same validation but with a caller-supplied section (property tests use
    // this to perturb the section).
    static CentralExtension make_with_section(GroupPtr total, GroupHom boundary,
                                              std::vector<int> section);

    const GroupPtr& total() const noexcept { return total_; }         // E
    const GroupPtr& quotient() const noexcept { return quotient_; }   // G
    const GroupHom& boundary() const noexcept { return boundary_; }
    int section(int g) const { return section_[g]; }

    // {g,h} = [s(g), s(h)]; independent of the section since ker is central.
    int bracket(int g, int h) const;
    // g acting on e as s(g) e s(g)^-1.
    int lifted_act(int g, int e) const;

private:
    CentralExtension(GroupPtr total, GroupPtr quotient, GroupHom boundary,
                     std::vector<int> section)
        : total_(std::move(total)), quotient_(std::move(quotient)),
          boundary_(std::move(boundary)), section_(std::move(section)) {}

    GroupPtr total_;
    GroupPtr quotient_;
    GroupHom boundary_;
    std::vector<int> section_;
};

CentralExtension central_extension_new(const GroupPtr& total, const GroupHom& boundary);
GroupElement bracket(const CentralExtension& ext, const GroupElement& g, const GroupElement& h);

// The crossed module with action g.e = s(g) e s(g)^-1; validation failures
// here would be a library bug, so they are asserted rather than reported.
XmodPtr xmod_from_central_extension(const CentralExtension& ext);

} // namespace xmodlink
