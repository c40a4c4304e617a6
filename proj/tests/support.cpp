#include "support.hpp"

#include <algorithm>
#include <set>

namespace testsupport {

using namespace bdcase;

Inner random_inner(Rng& rng, const std::vector<std::string>& vars, int depth, bool allow_delta) {
    if (depth <= 0 || rng.below(4) == 0)
        return Inner::var(vars[rng.below(static_cast<int>(vars.size()))]);
    switch (rng.below(allow_delta ? 4 : 3)) {
        case 0: return Inner::neg(random_inner(rng, vars, depth - 1, allow_delta));
        case 1:
            return Inner::conj(random_inner(rng, vars, depth - 1, allow_delta),
                               random_inner(rng, vars, depth - 1, allow_delta));
        case 2:
            return Inner::disj(random_inner(rng, vars, depth - 1, allow_delta),
                               random_inner(rng, vars, depth - 1, allow_delta));
        default: return Inner::delta(random_inner(rng, vars, depth - 1, allow_delta));
    }
}

Inner random_guarded(Rng& rng, const std::vector<std::string>& vars, int depth) {
    if (depth <= 0 || rng.below(4) == 0) {
        const std::string& v = vars[rng.below(static_cast<int>(vars.size()))];
        if (rng.coin()) {
            static const ProbeKind kinds[4] = {ProbeKind::t, ProbeKind::b, ProbeKind::n,
                                               ProbeKind::f};
            return make_probe(kinds[rng.below(4)], Inner::var(v));
        }
        return Inner::delta(random_inner(rng, vars, 2));
    }
    switch (rng.below(3)) {
        case 0: return Inner::neg(random_guarded(rng, vars, depth - 1));
        case 1:
            return Inner::conj(random_guarded(rng, vars, depth - 1),
                               random_guarded(rng, vars, depth - 1));
        default:
            return Inner::disj(random_guarded(rng, vars, depth - 1),
                               random_guarded(rng, vars, depth - 1));
    }
}

Inner random_classical(Rng& rng, const std::vector<std::string>& vars, int depth) {
    return random_inner(rng, vars, depth, /*allow_delta=*/false);
}

Valuation random_valuation(Rng& rng, const Signature& sig) {
    std::vector<FourValue> vals;
    vals.reserve(sig.size());
    for (std::size_t i = 0; i < sig.size(); ++i) vals.push_back(all_four_values[rng.below(4)]);
    return Valuation(sig, std::move(vals));
}

namespace {

bool naive_rec(const Inner& phi, const Inner& chi, const Signature& sig,
               std::vector<FourValue>& vals, std::size_t i) {
    if (i == sig.size()) {
        Valuation v(sig, vals);
        return le4(eval4(phi, v), eval4(chi, v));
    }
    for (FourValue x : all_four_values) {
        vals[i] = x;
        if (!naive_rec(phi, chi, sig, vals, i + 1)) return false;
    }
    return true;
}

} // namespace

bool naive_entails(const Inner& phi, const Inner& chi) {
    Signature sig = Signature::union_of(Signature::of_formula(phi), Signature::of_formula(chi));
    std::vector<FourValue> vals(sig.size(), FourValue::T);
    return naive_rec(phi, chi, sig, vals, 0);
}

namespace {

Signature sig_of(int nvars) {
    std::vector<std::string> names(small_vars().begin(), small_vars().begin() + nvars);
    return Signature(names);
}

std::vector<std::vector<int>> distinct_vectors(Rng& rng, int nvars, int ncases, int radix) {
    std::set<std::vector<int>> seen;
    while (static_cast<int>(seen.size()) < ncases) {
        std::vector<int> vec(nvars);
        for (int& x : vec) x = rng.below(radix);
        seen.insert(vec);
    }
    return {seen.begin(), seen.end()};
}

} // namespace

CaseModel random_probe_model(Rng& rng, int nvars, int ncases) {
    Signature sig = sig_of(nvars);
    static const ProbeKind kinds[4] = {ProbeKind::t, ProbeKind::b, ProbeKind::n, ProbeKind::f};
    std::vector<CaseEntry> cases;
    unsigned rank = 0;
    for (const auto& vec : distinct_vectors(rng, nvars, ncases, 4)) {
        Inner f;
        for (int j = 0; j < nvars; ++j) {
            Inner probe = make_probe(kinds[vec[j]], Inner::var(sig.names()[j]));
            f = f.valid() ? Inner::conj(f, probe) : probe;
        }
        cases.push_back({"c" + std::to_string(rank + 1), f, rank});
        ++rank;
    }
    return CaseModel(sig, std::move(cases));
}

CaseModel random_quasi_classical_model(Rng& rng, int nvars, int ncases) {
    Signature sig = sig_of(nvars);
    std::vector<CaseEntry> cases;
    unsigned rank = 0, idx = 0;
    for (const auto& vec : distinct_vectors(rng, nvars, ncases, 2)) {
        Inner f;
        for (int j = 0; j < nvars; ++j) {
            Inner lit = make_probe(ProbeKind::t, Inner::var(sig.names()[j]));
            if (vec[j] == 0) lit = Inner::neg(lit);
            f = f.valid() ? Inner::conj(f, lit) : lit;
        }
        cases.push_back({"c" + std::to_string(idx + 1), f, rank});
        ++idx;
        if (rng.coin()) ++rank; // ties allowed
    }
    return CaseModel(sig, std::move(cases));
}

ClassicalCaseModel random_classical_model(Rng& rng, int nvars, int ncases) {
    Signature sig = sig_of(nvars);
    std::vector<CaseEntry> cases;
    unsigned rank = 0, idx = 0;
    for (const auto& vec : distinct_vectors(rng, nvars, ncases, 2)) {
        Inner f;
        for (int j = 0; j < nvars; ++j) {
            Inner lit = Inner::var(sig.names()[j]);
            if (vec[j] == 0) lit = Inner::neg(lit);
            f = f.valid() ? Inner::conj(f, lit) : lit;
        }
        cases.push_back({"c" + std::to_string(idx + 1), f, rank});
        ++idx;
        if (rng.coin()) ++rank;
    }
    return ClassicalCaseModel(sig, std::move(cases));
}

const std::vector<std::string>& small_vars() {
    static const std::vector<std::string> vars = {"p", "q", "r", "u"};
    return vars;
}

LoadedModel robbery() {
    static const char* text =
        "vars l s b\n"
        "case c1 := t(l) & n(s) & f(b)\n"
        "case c2 := n(l) & b(s) & t(b)\n"
        "case c3 := t(l) & t(s) & b(b)\n"
        "prefs c1 < c2 < c3\n";
    return parse_model_file(text);
}

} // namespace testsupport
