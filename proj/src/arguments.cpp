#include "bdcase/arguments.hpp"

#include <algorithm>

namespace bdcase {

std::string to_string(Polarity pol) {
    switch (pol) {
        case Polarity::Positive: return "positive";
        case Polarity::Negative: return "negative";
        case Polarity::Strong: return "strong";
    }
    throw Error("bad polarity");
}

Inner target(Polarity pol, const Argument& arg) {
    switch (pol) {
        case Polarity::Positive:
            return Inner::conj(arg.premise, Inner::delta(arg.conclusion));
        case Polarity::Negative:
            return Inner::conj(arg.premise,
                               Inner::neg(Inner::delta(Inner::neg(arg.conclusion))));
        case Polarity::Strong:
            return Inner::conj(arg.premise, make_probe(ProbeKind::t, arg.conclusion));
    }
    throw Error("bad polarity");
}

StatusResult coherent(const CaseModel& model, const Argument& arg, Polarity pol,
                      std::size_t var_cap) {
    Inner tgt = target(pol, arg);
    StatusResult res;
    for (const auto& c : model.cases())
        if (entails(c.formula, tgt, var_cap)) res.witnesses.push_back(c.name);
    res.holds = !res.witnesses.empty();
    return res;
}

StatusResult conclusive(const CaseModel& model, const Argument& arg, Polarity pol,
                        std::size_t var_cap) {
    StatusResult res = coherent(model, arg, pol, var_cap);
    if (!res.holds) return res;
    Inner tgt = target(pol, arg);
    for (const auto& c : model.cases())
        if (entails(c.formula, arg.premise, var_cap) && !entails(c.formula, tgt, var_cap))
            return {false, {}};
    return res;
}

StatusResult presumptively_valid(const CaseModel& model, const Argument& arg, Polarity pol,
                                 std::size_t var_cap) {
    Inner tgt = target(pol, arg);
    StatusResult res;
    for (const auto& name : most_preferred_supporting(model, arg.premise, var_cap))
        if (entails(model.case_of(name).formula, tgt, var_cap)) res.witnesses.push_back(name);
    res.holds = !res.witnesses.empty();
    return res;
}

ArgumentStatus classify(const CaseModel& model, const Argument& arg, std::size_t var_cap) {
    ArgumentStatus status;
    for (std::size_t i = 0; i < all_polarities.size(); ++i) {
        Polarity pol = all_polarities[i];
        status.coherent[i] = coherent(model, arg, pol, var_cap);
        status.presumptively_valid[i] = presumptively_valid(model, arg, pol, var_cap);
        status.conclusive[i] = conclusive(model, arg, pol, var_cap);
    }
    status.presumptive = !entails(arg.premise, arg.conclusion, var_cap);
    return status;
}

ClassicalStatus classify_classical(const ClassicalCaseModel& model, const Argument& arg,
                                   std::size_t var_cap) {
    if (arg.premise.contains_delta() || arg.conclusion.contains_delta()) throw DeltaPresent();
    Inner tgt = Inner::conj(arg.premise, arg.conclusion);
    ClassicalStatus out;

    std::vector<const CaseEntry*> supporters;
    for (const auto& c : model.cases()) {
        if (entails_classical(c.formula, tgt, var_cap)) {
            out.coherent.witnesses.push_back(c.name);
        }
        if (entails_classical(c.formula, arg.premise, var_cap)) supporters.push_back(&c);
    }
    out.coherent.holds = !out.coherent.witnesses.empty();

    out.conclusive.holds = out.coherent.holds &&
                           std::all_of(supporters.begin(), supporters.end(), [&](const CaseEntry* c) {
                               return entails_classical(c->formula, tgt, var_cap);
                           });
    if (out.conclusive.holds) out.conclusive.witnesses = out.coherent.witnesses;

    if (!supporters.empty()) {
        unsigned best = 0;
        for (const auto* c : supporters) best = std::max(best, c->rank);
        for (const auto* c : supporters)
            if (c->rank == best && entails_classical(c->formula, tgt, var_cap))
                out.presumptively_valid.witnesses.push_back(c->name);
    }
    out.presumptively_valid.holds = !out.presumptively_valid.witnesses.empty();
    return out;
}

} // namespace bdcase
