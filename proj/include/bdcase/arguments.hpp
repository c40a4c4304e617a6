#ifndef BDCASE_ARGUMENTS_HPP
#define BDCASE_ARGUMENTS_HPP

#include <array>
#include <string>
#include <vector>

#include "bdcase/case_model.hpp"

namespace bdcase {

struct Argument {
    Inner premise;
    Inner conclusion;
};

enum class Polarity : unsigned char { Positive, Negative, Strong };

inline constexpr std::array<Polarity, 3> all_polarities{Polarity::Positive, Polarity::Negative,
                                                        Polarity::Strong};

std::string to_string(Polarity pol);

// The polarity's conclusion wrapper conjoined with the premise:
//   Positive  premise & @conclusion
//   Negative  premise & !@!conclusion
//   Strong    premise & t(conclusion)
Inner target(Polarity pol, const Argument& arg);

struct StatusResult {
    bool holds = false;
    std::vector<std::string> witnesses;
};

// Some case entails target(pol, arg); witnesses are all such cases.
StatusResult coherent(const CaseModel& model, const Argument& arg, Polarity pol,
                      std::size_t var_cap = kDefaultVarCap);

// Coherent, and every case entailing the premise also entails the target.
StatusResult conclusive(const CaseModel& model, const Argument& arg, Polarity pol,
                        std::size_t var_cap = kDefaultVarCap);

// Some most-preferred case supporting the premise entails the target.
StatusResult presumptively_valid(const CaseModel& model, const Argument& arg, Polarity pol,
                                 std::size_t var_cap = kDefaultVarCap);

struct ArgumentStatus {
    // Indexed by Polarity (Positive, Negative, Strong).
    std::array<StatusResult, 3> coherent;
    std::array<StatusResult, 3> presumptively_valid;
    std::array<StatusResult, 3> conclusive;
    bool presumptive = false; // premise does not already entail the conclusion
};

ArgumentStatus classify(const CaseModel& model, const Argument& arg,
                        std::size_t var_cap = kDefaultVarCap);

struct ClassicalStatus {
    StatusResult coherent;
    StatusResult presumptively_valid;
    StatusResult conclusive;
};

// Classical statuses (single target premise & conclusion, two-valued entailment).
ClassicalStatus classify_classical(const ClassicalCaseModel& model, const Argument& arg,
                                   std::size_t var_cap = kDefaultClassicalVarCap);

} // namespace bdcase

#endif
