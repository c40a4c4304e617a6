#ifndef BDCASE_BD_SEMANTICS_HPP
#define BDCASE_BD_SEMANTICS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bdcase/formula.hpp"
#include "bdcase/four_value.hpp"

namespace bdcase {

inline constexpr std::size_t kDefaultVarCap = 16;

// Total map from a signature's variables to four-values. The reserved `_c`
// is implicitly N and not part of the signature.
class Valuation {
public:
    Valuation(Signature sig, std::vector<FourValue> values);

    FourValue value_of(const std::string& name) const;
    const Signature& signature() const { return sig_; }
    const std::vector<FourValue>& values() const { return values_; }

    std::string to_string() const;

private:
    Signature sig_;
    std::vector<FourValue> values_;
};

// Frame model <W, v+, v-> over a finite signature; one valuation per point.
class PointModel {
public:
    PointModel(Signature sig, std::vector<std::string> point_names,
               std::vector<Valuation> valuations);

    const Signature& signature() const { return sig_; }
    const std::vector<std::string>& points() const { return points_; }
    const Valuation& valuation_of(const std::string& point) const;
    const Valuation& valuation_at(std::size_t i) const { return valuations_[i]; }
    std::size_t size() const { return points_.size(); }

private:
    Signature sig_;
    std::vector<std::string> points_;
    std::vector<Valuation> valuations_;
};

struct Extension {
    std::vector<std::string> pos;
    std::vector<std::string> neg;
};

// Truth-table route (direct recursion on the four operation tables).
FourValue eval4(const Inner& phi, const Valuation& v);

// Frame route (bilateral satisfaction clauses); (w |=+ phi, w |=- phi).
// Kept independent of eval4 so the two can cross-check each other.
std::pair<bool, bool> sat(const Inner& phi, const PointModel& model, const std::string& point);

Extension extension(const Inner& phi, const PointModel& model);

// Entailment by exhaustive bit-parallel enumeration of 4^n valuations over
// the union signature (two bitmask planes per subformula, 64 valuations per
// word). Throws CapacityExceeded past var_cap.
bool entails(const Inner& phi, const Inner& chi, std::size_t var_cap = kDefaultVarCap);

// As entails, but reports the first violating valuation in enumeration order.
struct EntailmentResult {
    bool holds;
    std::optional<Valuation> counter;
};
EntailmentResult entails_certified(const Inner& phi, const Inner& chi,
                                   std::size_t var_cap = kDefaultVarCap);

bool nontrivial(const Inner& phi, std::size_t var_cap = kDefaultVarCap);
bool jointly_exclusive(const Inner& phi, const Inner& psi, std::size_t var_cap = kDefaultVarCap);

} // namespace bdcase

#endif
