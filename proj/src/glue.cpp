#include "nzflow/glue.hpp"

#include <algorithm>
#include <string>

namespace nzflow {

FlowAssignment side_flow(const MultiGraph& g, const EdgeSubset& s, const GroupSpec& spec,
                         const std::optional<FlowAssignment>& supplied, const char* side_name) {
    MultiGraph view = g.restricted_to(s);
    if (supplied) {
        if (supplied->spec != spec) throw ValidationError("supplied flow uses a different group");
        VerifyReport rep = verify_flow(view, *supplied);
        if (!rep.nowhere_zero)
            throw ValidationError(std::string("supplied flow on ") + side_name +
                                  " is not a verified nowhere-zero flow");
        return *supplied;
    }
    SearchResult found = search_nowhere_zero(view, spec);
    if (!found.flow)
        throw FlowlessError(std::string(side_name) + " admits no nowhere-zero flow (proven after " +
                            std::to_string(found.candidates) + " candidates)");
    return *found.flow;
}

GlueResult glue_common(const GlueInstance& inst) {
    if (inst.graph == nullptr) throw ValidationError("glue instance has no graph");
    const MultiGraph& g = *inst.graph;
    if (!inst.spec.is_field()) throw ValidationError("gluing needs a field-kind group");
    if (!(set_union(inst.s1, inst.s2) == EdgeSubset::all(g)))
        throw ValidationError("subgraph union does not cover the graph");

    const EdgeSubset common = set_intersection(inst.s1, inst.s2);
    const int q = inst.spec.order();
    if (common.size() > q - 2)
        throw HypothesisError("common edges " + std::to_string(common.size()) +
                              " > p^n-2 = " + std::to_string(q - 2));

    FlowAssignment raw1 = side_flow(g, inst.s1, inst.spec, inst.f1, "subgraph 1");
    FlowAssignment raw2 = side_flow(g, inst.s2, inst.spec, inst.f2, "subgraph 2");

    const Orientation ambient = default_orientation(g);
    FlowAssignment phi1 = extend_by_zero(reorient_flow(raw1, ambient), g);
    FlowAssignment phi2 = extend_by_zero(reorient_flow(raw2, ambient), g);

    // each common edge excludes the single exponent j with b^j = phi1/phi2
    const GroupElement b = inst.spec.primitive_element();
    std::vector<char> excluded(q - 1, 0);
    for (int e : common.ids()) {
        const GroupElement ratio = inst.spec.mul(phi1.at(e), inst.spec.inv(phi2.at(e)));
        excluded[inst.spec.discrete_log(b, ratio)] = 1;
    }
    int j = -1;
    for (int cand = 0; cand < q - 1; ++cand)
        if (!excluded[cand]) {
            j = cand;
            break;
        }
    if (j < 0) throw ValidationError("no usable exponent found despite the common-edge bound");

    GlueResult out;
    out.exponent = j;
    const GroupElement scale = inst.spec.neg(inst.spec.pow(b, j));
    out.flow = module_combine(g, {{Scalar{inst.spec.one()}, phi1}, {Scalar{scale}, phi2}});
    VerifyReport rep = verify_flow(g, out.flow);
    if (!rep.nowhere_zero) throw ValidationError("glued flow failed verification");
    return out;
}

FlowAssignment glue_many(const MultiGraph& g, const std::vector<EdgeSubset>& parts,
                         const GroupSpec& spec) {
    if (parts.empty()) throw ValidationError("glue_many needs at least one part");
    const int q = spec.order();
    EdgeSubset acc = parts.front();
    FlowAssignment flow = side_flow(g, acc, spec, std::nullopt, "part 1");
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const EdgeSubset common = set_intersection(acc, parts[i]);
        if (common.size() > q - 2)
            throw HypothesisError("common edges " + std::to_string(common.size()) + " > p^n-2 = " +
                                  std::to_string(q - 2) + " at part " + std::to_string(i + 1));
        EdgeSubset next = set_union(acc, parts[i]);
        MultiGraph view = g.restricted_to(next);
        GlueInstance step;
        step.graph = &view;
        step.s1 = acc;
        step.s2 = parts[i];
        step.spec = spec;
        step.f1 = flow;
        flow = glue_common(step).flow;
        acc = next;
    }
    if (!(acc == EdgeSubset::all(g))) throw ValidationError("parts do not cover the graph");
    return flow;
}

GlueResult glue_k(const MultiGraph& g, const EdgeSubset& s1, const EdgeSubset& s2, int k,
                  const std::optional<FlowAssignment>& f1,
                  const std::optional<FlowAssignment>& f2) {
    GroupSpec spec;
    switch (k) {
        case 3: spec = GroupSpec::field(3, 1); break;
        case 4: spec = GroupSpec::field(2, 2); break;
        case 5: spec = GroupSpec::field(5, 1); break;
        default: throw ValidationError("glue_k supports k in {3,4,5}");
    }
    GlueInstance inst;
    inst.graph = &g;
    inst.s1 = s1;
    inst.s2 = s2;
    inst.spec = spec;
    inst.f1 = f1;
    inst.f2 = f2;
    return glue_common(inst);
}

} // namespace nzflow
