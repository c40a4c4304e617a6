#ifndef TESTS_SUPPORT_HPP
#define TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bdcase/arguments.hpp"
#include "bdcase/case_model.hpp"

namespace testsupport {

struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
    bool coin() { return (eng() & 1u) != 0; }
    std::mt19937_64 eng;
};

// Random inner formula over the given variables, depth-bounded.
bdcase::Inner random_inner(Rng& rng, const std::vector<std::string>& vars, int depth,
                           bool allow_delta = true);

// As random_inner but every variable occurrence sits under a Delta (leaves
// are probes or Delta-wrapped subformulas).
bdcase::Inner random_guarded(Rng& rng, const std::vector<std::string>& vars, int depth);

// Delta-free formula (classical language).
bdcase::Inner random_classical(Rng& rng, const std::vector<std::string>& vars, int depth);

bdcase::Valuation random_valuation(Rng& rng, const bdcase::Signature& sig);

// Independent entailment oracle: recursive enumeration of all valuations,
// eval4 plus the truth-order comparison. Deliberately avoids the bit-parallel
// route used by the library.
bool naive_entails(const bdcase::Inner& phi, const bdcase::Inner& chi);

// Valid-by-construction case model whose cases are full probe conjunctions
// over the signature (hence determinate); ranks form a strict chain.
bdcase::CaseModel random_probe_model(Rng& rng, int nvars, int ncases);

// Quasi-classical model: cases are conjunctions of t(p) / !t(p) literals with
// pairwise distinct sign vectors; random ranks (ties allowed).
bdcase::CaseModel random_quasi_classical_model(Rng& rng, int nvars, int ncases);

// Classical model built the same way from p / !p literals.
bdcase::ClassicalCaseModel random_classical_model(Rng& rng, int nvars, int ncases);

const std::vector<std::string>& small_vars(); // p q r

// The running three-testimony fixture, built from an embedded model file.
bdcase::LoadedModel robbery();

} // namespace testsupport

#endif
