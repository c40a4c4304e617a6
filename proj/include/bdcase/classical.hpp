#ifndef BDCASE_CLASSICAL_HPP
#define BDCASE_CLASSICAL_HPP

#include <cstddef>
#include <vector>

#include "bdcase/formula.hpp"

namespace bdcase {

inline constexpr std::size_t kDefaultClassicalVarCap = 20;

// Total map from signature variables to bits.
class ClassicalValuation {
public:
    ClassicalValuation(Signature sig, std::vector<bool> bits);

    bool value_of(const std::string& name) const;
    const Signature& signature() const { return sig_; }

private:
    Signature sig_;
    std::vector<bool> bits_;
};

// Two-valued evaluation of a Delta-free formula. Throws DeltaPresent.
bool eval2(const Inner& phi, const ClassicalValuation& v);

// Classical entailment by enumeration over 2^n valuations.
bool entails_classical(const Inner& phi, const Inner& chi,
                       std::size_t var_cap = kDefaultClassicalVarCap);

} // namespace bdcase

#endif
