#ifndef BDCASE_TWO_LAYERED_HPP
#define BDCASE_TWO_LAYERED_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bdcase/arguments.hpp"
#include "bdcase/case_model.hpp"
#include "bdcase/rational.hpp"

namespace bdcase {

// bi-Goedel operations on exact rationals in [0,1].
namespace godel {

inline Rational gand(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational gor(const Rational& a, const Rational& b) { return a <= b ? b : a; }
inline Rational imp(const Rational& a, const Rational& b) { return a <= b ? Rational(1) : b; }
inline Rational coimp(const Rational& a, const Rational& b) { return a <= b ? Rational(0) : a; }
inline Rational gneg(const Rational& a) { return a > Rational(0) ? Rational(0) : Rational(1); }
inline Rational gdelta(const Rational& a) { return a == Rational(1) ? Rational(1) : Rational(0); }

} // namespace godel

// Monotone normalized set function over a point set. Either an explicit table
// over all subsets or induced by positive additive masses.
class Capacity {
public:
    using Subset = std::set<std::string>;

    static Capacity explicit_table(std::map<Subset, Rational> table);
    static Capacity additive_masses(std::map<std::string, Rational> masses);

    bool additive() const { return additive_; }
    const std::map<std::string, Rational>& masses() const { return masses_; }

    Rational mu(const Subset& points) const;

    // mu(emptyset)=0, mu(W)=1, monotone under subset inclusion. Throws Error.
    void check_laws(const std::vector<std::string>& all_points) const;
    // Strictness on top: mu(A)<1 for proper subsets, mu(A)>0 for nonempty A.
    bool strict(const std::vector<std::string>& all_points) const;

private:
    Capacity() = default;

    bool additive_ = false;
    std::map<Subset, Rational> table_;
    std::map<std::string, Rational> masses_;
    Rational total_mass_;
};

struct QGModel {
    PointModel points;
    Capacity mu;

    QGModel(PointModel pts, Capacity cap);
};

// Outer evaluation: modal atoms through the capacity of the positive
// extension, connectives through the bi-Goedel table. Truth means value 1.
Rational eval_outer(const QGModel& model, const Outer& alpha);

// Per signature variable, the unique status probe the case entails; throws
// NotDeterminate if some variable has none.
Valuation canonical_valuation(const std::string& case_name, const Inner& formula,
                              const Signature& sig, std::size_t var_cap = kDefaultVarCap);

struct MuCounterpart {
    QGModel model;
    std::vector<std::string> point_names;          // w1.. in case order
    std::map<std::string, std::string> case_of;    // point -> case name
    std::map<std::string, std::string> point_of;   // case name -> point
};

// One point per case carrying its canonical valuation; additive capacity with
// mass rank+1 per case, normalized.
MuCounterpart mu_counterpart(const CaseModel& model, std::size_t var_cap = kDefaultVarCap);

enum class RepKind : unsigned char { Coherent, Conclusive, Presumptive };

// The representation formulas of the three structural theorems. Conclusive
// and Presumptive accept Positive/Negative only; Presumptive needs a witness
// case of the model.
Outer representation_formula(RepKind kind, Polarity pol, const Argument& arg,
                             const std::optional<std::string>& witness, const CaseModel& model);

struct RepInstance {
    std::string description;
    bool left;   // arguments-module verdict
    bool right;  // eval_outer on the mu-counterpart
    bool agree() const { return left == right; }
};

struct RepReport {
    bool all_agree = true;
    std::vector<RepInstance> instances;
    std::vector<std::string> warnings;
};

// Checks every theorem instance for the argument over the model's
// mu-counterpart; Presumptive quantifies over every case as candidate witness.
RepReport verify_representation(const CaseModel& model, const Argument& arg,
                                std::size_t var_cap = kDefaultVarCap);

// CLI `mu` export: one `point ... from ... mass ... val ...` line per point
// plus a `capacity additive` trailer.
std::string emit_mu_counterpart(const MuCounterpart& mc);

} // namespace bdcase

#endif
