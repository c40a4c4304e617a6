#ifndef BDCASE_CASE_MODEL_HPP
#define BDCASE_CASE_MODEL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bdcase/bd_semantics.hpp"
#include "bdcase/classical.hpp"
#include "bdcase/formula.hpp"

namespace bdcase {

struct CaseEntry {
    std::string name;
    Inner formula;
    unsigned rank; // higher = more preferred; equal = tied
};

// Named cases with a total preorder encoded as integer ranks. Construction
// checks structure only; the exclusivity conditions live in validate().
class CaseModel {
public:
    CaseModel(Signature sig, std::vector<CaseEntry> cases);

    const Signature& signature() const { return sig_; }
    const std::vector<CaseEntry>& cases() const { return cases_; }
    std::size_t size() const { return cases_.size(); }

    const CaseEntry& case_of(const std::string& name) const;
    unsigned rank_of(const std::string& name) const { return case_of(name).rank; }

private:
    Signature sig_;
    std::vector<CaseEntry> cases_;
};

// As CaseModel but Delta-free formulas (classical language).
class ClassicalCaseModel {
public:
    ClassicalCaseModel(Signature sig, std::vector<CaseEntry> cases);

    const Signature& signature() const { return model_.signature(); }
    const std::vector<CaseEntry>& cases() const { return model_.cases(); }
    std::size_t size() const { return model_.size(); }

private:
    CaseModel model_;
};

enum class ViolationKind : unsigned char { Trivial, NotExclusive, RankGap };

struct Violation {
    ViolationKind kind;
    std::vector<std::string> case_names;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Well-formedness: every case nontrivial, every distinct pair exclusive.
ValidationReport validate(const CaseModel& model, std::size_t var_cap = kDefaultVarCap);
// Classical analogue: satisfiable cases, pairwise classical incompatibility.
ValidationReport validate_classical(const ClassicalCaseModel& model,
                                    std::size_t var_cap = kDefaultClassicalVarCap);

// Highest-ranked cases entailing phi; empty if no case entails phi.
std::vector<std::string> most_preferred_supporting(const CaseModel& model, const Inner& phi,
                                                   std::size_t var_cap = kDefaultVarCap);

// Every case built from t(p) probes via !, &, | (syntactic check).
bool is_quasi_classical(const CaseModel& model);

// Classical -> BD counterpart: each formula through substitute_t, names and
// ranks preserved.
CaseModel counterpart(const ClassicalCaseModel& model);

// --------------------------------------------------------------------------
// Line-oriented model file format:
//   [classical]
//   vars l s b
//   case c1 := t(l) & n(s) & f(b)
//   prefs c1 < c2 = c3
// prefs chain: leftmost least preferred, rank 0; `<` steps the rank, `=` ties.
// --------------------------------------------------------------------------

struct LoadedModel {
    bool classical = false;
    Signature sig;
    std::vector<CaseEntry> cases;

    CaseModel as_bd() const { return CaseModel(sig, cases); }
    ClassicalCaseModel as_classical() const { return ClassicalCaseModel(sig, cases); }
};

LoadedModel parse_model_file(const std::string& text);
std::string emit_model_file(const CaseModel& model, bool classical = false);

} // namespace bdcase

#endif
