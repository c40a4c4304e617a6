#include "bdcase/bd_semantics.hpp"

#include <cstdint>

namespace bdcase {

Valuation::Valuation(Signature sig, std::vector<FourValue> values)
    : sig_(std::move(sig)), values_(std::move(values)) {
    if (sig_.size() != values_.size())
        throw Error("valuation size does not match signature");
}

FourValue Valuation::value_of(const std::string& name) const {
    if (name == kReservedVar) return FourValue::N;
    return values_[sig_.index_of(name)];
}

std::string Valuation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sig_.size(); ++i) {
        if (i) out += " ";
        out += sig_.names()[i] + "=" + bdcase::to_string(values_[i]);
    }
    return out;
}

PointModel::PointModel(Signature sig, std::vector<std::string> point_names,
                       std::vector<Valuation> valuations)
    : sig_(std::move(sig)), points_(std::move(point_names)), valuations_(std::move(valuations)) {
    if (points_.size() != valuations_.size())
        throw Error("point/valuation count mismatch");
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = i + 1; j < points_.size(); ++j)
            if (points_[i] == points_[j]) throw Error("duplicate point name: " + points_[i]);
}

const Valuation& PointModel::valuation_of(const std::string& point) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i] == point) return valuations_[i];
    throw UnknownPoint(point);
}

FourValue eval4(const Inner& phi, const Valuation& v) {
    switch (phi.kind()) {
        case Inner::Kind::Var: return v.value_of(phi.var_name());
        case Inner::Kind::Neg: return neg4(eval4(phi.sub(), v));
        case Inner::Kind::Delta: return delta4(eval4(phi.sub(), v));
        case Inner::Kind::And: return and4(eval4(phi.left(), v), eval4(phi.right(), v));
        case Inner::Kind::Or: return or4(eval4(phi.left(), v), eval4(phi.right(), v));
    }
    throw Error("malformed formula");
}

namespace {

// Frame clauses, written directly off the bilateral satisfaction relation.
std::pair<bool, bool> sat_rec(const Inner& phi, const Valuation& v) {
    switch (phi.kind()) {
        case Inner::Kind::Var: {
            FourValue x = v.value_of(phi.var_name());
            return {pos_bit(x), neg_bit(x)};
        }
        case Inner::Kind::Neg: {
            auto [p, n] = sat_rec(phi.sub(), v);
            return {n, p};
        }
        case Inner::Kind::And: {
            auto [lp, ln] = sat_rec(phi.left(), v);
            auto [rp, rn] = sat_rec(phi.right(), v);
            return {lp && rp, ln || rn};
        }
        case Inner::Kind::Or: {
            auto [lp, ln] = sat_rec(phi.left(), v);
            auto [rp, rn] = sat_rec(phi.right(), v);
            return {lp || rp, ln && rn};
        }
        case Inner::Kind::Delta: {
            auto [p, n] = sat_rec(phi.sub(), v);
            (void)n;
            return {p, !p};
        }
    }
    throw Error("malformed formula");
}

} // namespace

std::pair<bool, bool> sat(const Inner& phi, const PointModel& model, const std::string& point) {
    return sat_rec(phi, model.valuation_of(point));
}

Extension extension(const Inner& phi, const PointModel& model) {
    Extension ext;
    for (std::size_t i = 0; i < model.size(); ++i) {
        auto [p, n] = sat_rec(phi, model.valuation_at(i));
        if (p) ext.pos.push_back(model.points()[i]);
        if (n) ext.neg.push_back(model.points()[i]);
    }
    return ext;
}

namespace {

struct Planes {
    std::uint64_t pos;
    std::uint64_t neg;
};

// 64 consecutive valuations per call. Valuation index digits (base 4, first
// signature variable least significant) map through all_four_values, so
// digit 0=T, 1=B, 2=N, 3=F.
Planes var_planes(std::size_t var_index, std::uint64_t base) {
    Planes pl{0, 0};
    for (unsigned k = 0; k < 64; ++k) {
        std::uint64_t idx = base + k;
        FourValue val = all_four_values[(idx >> (2 * var_index)) & 3u];
        if (pos_bit(val)) pl.pos |= std::uint64_t{1} << k;
        if (neg_bit(val)) pl.neg |= std::uint64_t{1} << k;
    }
    return pl;
}

Planes eval_planes(const Inner& phi, const Signature& sig, std::uint64_t base) {
    switch (phi.kind()) {
        case Inner::Kind::Var: {
            if (phi.var_name() == kReservedVar) return {0, 0}; // pinned to N
            return var_planes(sig.index_of(phi.var_name()), base);
        }
        case Inner::Kind::Neg: {
            Planes s = eval_planes(phi.sub(), sig, base);
            return {s.neg, s.pos};
        }
        case Inner::Kind::Delta: {
            Planes s = eval_planes(phi.sub(), sig, base);
            return {s.pos, ~s.pos};
        }
        case Inner::Kind::And: {
            Planes l = eval_planes(phi.left(), sig, base);
            Planes r = eval_planes(phi.right(), sig, base);
            return {l.pos & r.pos, l.neg | r.neg};
        }
        case Inner::Kind::Or: {
            Planes l = eval_planes(phi.left(), sig, base);
            Planes r = eval_planes(phi.right(), sig, base);
            return {l.pos | r.pos, l.neg & r.neg};
        }
    }
    throw Error("malformed formula");
}

Valuation decode(const Signature& sig, std::uint64_t idx) {
    std::vector<FourValue> vals;
    vals.reserve(sig.size());
    for (std::size_t j = 0; j < sig.size(); ++j)
        vals.push_back(all_four_values[(idx >> (2 * j)) & 3u]);
    return Valuation(sig, std::move(vals));
}

Signature capped_union(const Inner& phi, const Inner& chi, std::size_t var_cap) {
    Signature sig = Signature::union_of(Signature::of_formula(phi), Signature::of_formula(chi));
    if (sig.size() > var_cap) throw CapacityExceeded(sig.size(), var_cap);
    if (sig.size() > 31) throw CapacityExceeded(sig.size(), 31); // 4^n index must fit 64 bits
    return sig;
}

} // namespace

EntailmentResult entails_certified(const Inner& phi, const Inner& chi, std::size_t var_cap) {
    Signature sig = capped_union(phi, chi, var_cap);
    std::uint64_t total = std::uint64_t{1} << (2 * sig.size());
    for (std::uint64_t base = 0; base < total; base += 64) {
        Planes a = eval_planes(phi, sig, base);
        Planes b = eval_planes(chi, sig, base);
        std::uint64_t violation = (a.pos & ~b.pos) | (b.neg & ~a.neg);
        if (total - base < 64) violation &= (std::uint64_t{1} << (total - base)) - 1;
        if (violation) {
            std::uint64_t idx = base + static_cast<unsigned>(__builtin_ctzll(violation));
            return {false, decode(sig, idx)};
        }
    }
    return {true, std::nullopt};
}

bool entails(const Inner& phi, const Inner& chi, std::size_t var_cap) {
    return entails_certified(phi, chi, var_cap).holds;
}

bool nontrivial(const Inner& phi, std::size_t var_cap) {
    return !entails(phi, make_bot(), var_cap);
}

bool jointly_exclusive(const Inner& phi, const Inner& psi, std::size_t var_cap) {
    return entails(Inner::conj(phi, psi), make_bot(), var_cap);
}

} // namespace bdcase
