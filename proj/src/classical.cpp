#include "bdcase/classical.hpp"

#include <cstdint>

#include "bdcase/errors.hpp"

namespace bdcase {

ClassicalValuation::ClassicalValuation(Signature sig, std::vector<bool> bits)
    : sig_(std::move(sig)), bits_(std::move(bits)) {
    if (sig_.size() != bits_.size())
        throw Error("classical valuation size does not match signature");
}

bool ClassicalValuation::value_of(const std::string& name) const {
    return bits_[sig_.index_of(name)];
}

bool eval2(const Inner& phi, const ClassicalValuation& v) {
    switch (phi.kind()) {
        case Inner::Kind::Var: return v.value_of(phi.var_name());
        case Inner::Kind::Neg: return !eval2(phi.sub(), v);
        case Inner::Kind::And: return eval2(phi.left(), v) && eval2(phi.right(), v);
        case Inner::Kind::Or: return eval2(phi.left(), v) || eval2(phi.right(), v);
        case Inner::Kind::Delta: throw DeltaPresent();
    }
    throw Error("malformed formula");
}

bool entails_classical(const Inner& phi, const Inner& chi, std::size_t var_cap) {
    if (phi.contains_delta() || chi.contains_delta()) throw DeltaPresent();
    Signature sig = Signature::union_of(Signature::of_formula(phi), Signature::of_formula(chi));
    if (sig.size() > var_cap) throw CapacityExceeded(sig.size(), var_cap);
    std::uint64_t total = std::uint64_t{1} << sig.size();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<bool> bits(sig.size());
        for (std::size_t j = 0; j < sig.size(); ++j) bits[j] = (idx >> j) & 1u;
        ClassicalValuation v(sig, bits);
        if (eval2(phi, v) && !eval2(chi, v)) return false;
    }
    return true;
}

} // namespace bdcase
