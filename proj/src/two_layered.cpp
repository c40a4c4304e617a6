#include "bdcase/two_layered.hpp"

#include <algorithm>
#include <sstream>

namespace bdcase {

// Capacity --------------------------------------------------------------

Capacity Capacity::explicit_table(std::map<Subset, Rational> table) {
    Capacity c;
    c.additive_ = false;
    c.table_ = std::move(table);
    return c;
}

Capacity Capacity::additive_masses(std::map<std::string, Rational> masses) {
    Capacity c;
    c.additive_ = true;
    c.total_mass_ = Rational(0);
    for (const auto& [p, m] : masses) {
        if (m <= Rational(0)) throw Error("additive capacity needs positive mass for " + p);
        c.total_mass_ = c.total_mass_ + m;
    }
    if (masses.empty()) throw Error("additive capacity over empty point set");
    c.masses_ = std::move(masses);
    return c;
}

Rational Capacity::mu(const Subset& points) const {
    if (additive_) {
        Rational sum(0);
        for (const auto& p : points) {
            auto it = masses_.find(p);
            if (it == masses_.end()) throw UnknownPoint(p);
            sum = sum + it->second;
        }
        return sum / total_mass_;
    }
    auto it = table_.find(points);
    if (it == table_.end()) throw Error("capacity table has no entry for the requested subset");
    return it->second;
}

namespace {

std::vector<Capacity::Subset> all_subsets(const std::vector<std::string>& points) {
    std::vector<Capacity::Subset> out(std::size_t{1} << points.size());
    for (std::size_t mask = 0; mask < out.size(); ++mask)
        for (std::size_t j = 0; j < points.size(); ++j)
            if (mask & (std::size_t{1} << j)) out[mask].insert(points[j]);
    return out;
}

bool subset_of(const Capacity::Subset& a, const Capacity::Subset& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

void Capacity::check_laws(const std::vector<std::string>& all_points) const {
    auto subsets = all_subsets(all_points);
    if (mu({}) != Rational(0)) throw Error("capacity violates mu(emptyset)=0");
    if (mu(Subset(all_points.begin(), all_points.end())) != Rational(1))
        throw Error("capacity violates mu(W)=1");
    for (const auto& a : subsets) {
        Rational ma = mu(a);
        if (ma < Rational(0) || ma > Rational(1)) throw Error("capacity value outside [0,1]");
        for (const auto& b : subsets)
            if (subset_of(a, b) && mu(b) < ma) throw Error("capacity not monotone");
    }
}

bool Capacity::strict(const std::vector<std::string>& all_points) const {
    Subset whole(all_points.begin(), all_points.end());
    for (const auto& a : all_subsets(all_points)) {
        if (!a.empty() && mu(a) == Rational(0)) return false;
        if (a != whole && mu(a) == Rational(1)) return false;
    }
    return true;
}

QGModel::QGModel(PointModel pts, Capacity cap) : points(std::move(pts)), mu(std::move(cap)) {
    mu.check_laws(points.points());
}

// Evaluation ------------------------------------------------------------

Rational eval_outer(const QGModel& model, const Outer& alpha) {
    switch (alpha.kind()) {
        case Outer::Kind::ModalAtom: {
            Extension ext = extension(alpha.inner(), model.points);
            return model.mu.mu(Capacity::Subset(ext.pos.begin(), ext.pos.end()));
        }
        case Outer::Kind::GNeg: return godel::gneg(eval_outer(model, alpha.sub()));
        case Outer::Kind::GDelta: return godel::gdelta(eval_outer(model, alpha.sub()));
        case Outer::Kind::GAnd:
            return godel::gand(eval_outer(model, alpha.left()), eval_outer(model, alpha.right()));
        case Outer::Kind::GOr:
            return godel::gor(eval_outer(model, alpha.left()), eval_outer(model, alpha.right()));
        case Outer::Kind::GImp:
            return godel::imp(eval_outer(model, alpha.left()), eval_outer(model, alpha.right()));
        case Outer::Kind::GCoimp:
            return godel::coimp(eval_outer(model, alpha.left()), eval_outer(model, alpha.right()));
    }
    throw Error("malformed outer formula");
}

// mu-counterpart --------------------------------------------------------

Valuation canonical_valuation(const std::string& case_name, const Inner& formula,
                              const Signature& sig, std::size_t var_cap) {
    std::vector<FourValue> vals;
    vals.reserve(sig.size());
    for (const auto& name : sig.names()) {
        std::optional<FourValue> found;
        for (auto [probe, value] : {std::pair{ProbeKind::t, FourValue::T},
                                    std::pair{ProbeKind::b, FourValue::B},
                                    std::pair{ProbeKind::n, FourValue::N},
                                    std::pair{ProbeKind::f, FourValue::F}}) {
            if (entails(formula, make_probe(probe, Inner::var(name)), var_cap)) {
                found = value;
                break;
            }
        }
        if (!found) throw NotDeterminate(case_name, name);
        vals.push_back(*found);
    }
    return Valuation(sig, std::move(vals));
}

MuCounterpart mu_counterpart(const CaseModel& model, std::size_t var_cap) {
    std::vector<std::string> names;
    std::vector<Valuation> vals;
    std::map<std::string, Rational> masses;
    std::map<std::string, std::string> case_of, point_of;
    for (std::size_t i = 0; i < model.cases().size(); ++i) {
        const CaseEntry& c = model.cases()[i];
        std::string point = "w" + std::to_string(i + 1);
        names.push_back(point);
        vals.push_back(canonical_valuation(c.name, c.formula, model.signature(), var_cap));
        masses[point] = Rational(static_cast<std::int64_t>(c.rank) + 1);
        case_of[point] = c.name;
        point_of[c.name] = point;
    }
    PointModel pts(model.signature(), names, std::move(vals));
    return MuCounterpart{QGModel(std::move(pts), Capacity::additive_masses(std::move(masses))),
                         std::move(names), std::move(case_of), std::move(point_of)};
}

// Representation formulas ------------------------------------------------

namespace {

Outer not_not_b(const Inner& phi) { return Outer::gneg(Outer::gneg(Outer::atom(phi))); }

} // namespace

Outer representation_formula(RepKind kind, Polarity pol, const Argument& arg,
                             const std::optional<std::string>& witness, const CaseModel& model) {
    switch (kind) {
        case RepKind::Coherent:
            return not_not_b(target(pol, arg));
        case RepKind::Conclusive: {
            Inner refuter; // premise cases that miss the conclusion wrapper
            switch (pol) {
                case Polarity::Positive:
                    refuter = Inner::conj(arg.premise,
                                          Inner::neg(Inner::delta(arg.conclusion)));
                    break;
                case Polarity::Negative:
                    refuter = Inner::conj(arg.premise,
                                          Inner::delta(Inner::neg(arg.conclusion)));
                    break;
                case Polarity::Strong:
                    throw Error("conclusive representation is positive/negative only");
            }
            return Outer::gand(Outer::gneg(Outer::atom(refuter)), not_not_b(target(pol, arg)));
        }
        case RepKind::Presumptive: {
            if (pol == Polarity::Strong)
                throw Error("presumptive representation is positive/negative only");
            if (!witness) throw UnknownWitness("(none)");
            const Inner& chi = model.case_of(*witness).formula; // throws on unknown name
            Inner wrapper = target(pol, arg);
            Outer alpha = Outer::gand(
                not_not_b(wrapper),
                Outer::gdelta(Outer::atom(make_internal_entailment(chi, wrapper))));
            for (const auto& c : model.cases()) {
                Outer guard = Outer::gdelta(
                    Outer::atom(make_internal_entailment(c.formula, arg.premise)));
                Outer pref = Outer::gdelta(
                    Outer::gimp(Outer::atom(c.formula), Outer::atom(chi)));
                alpha = Outer::gand(alpha, Outer::gimp(guard, pref));
            }
            return alpha;
        }
    }
    throw Error("bad representation kind");
}

// Verification -----------------------------------------------------------

RepReport verify_representation(const CaseModel& model, const Argument& arg,
                                std::size_t var_cap) {
    MuCounterpart mc = mu_counterpart(model, var_cap);
    RepReport report;
    if (!mc.model.mu.strict(mc.model.points.points()))
        report.warnings.push_back("capacity is not strict; converse directions are not guaranteed");

    auto add = [&](std::string desc, bool left, bool right) {
        report.instances.push_back({std::move(desc), left, right});
        if (left != right) report.all_agree = false;
    };
    auto truth = [&](const Outer& alpha) {
        return eval_outer(mc.model, alpha) == Rational(1);
    };

    for (Polarity pol : all_polarities)
        add("coherent " + to_string(pol),
            coherent(model, arg, pol, var_cap).holds,
            truth(representation_formula(RepKind::Coherent, pol, arg, std::nullopt, model)));

    for (Polarity pol : {Polarity::Positive, Polarity::Negative})
        add("conclusive " + to_string(pol),
            conclusive(model, arg, pol, var_cap).holds,
            truth(representation_formula(RepKind::Conclusive, pol, arg, std::nullopt, model)));

    for (Polarity pol : {Polarity::Positive, Polarity::Negative}) {
        StatusResult left = presumptively_valid(model, arg, pol, var_cap);
        for (const auto& c : model.cases()) {
            bool left_witness =
                std::find(left.witnesses.begin(), left.witnesses.end(), c.name) !=
                left.witnesses.end();
            add("presumptive " + to_string(pol) + " witness " + c.name, left_witness,
                truth(representation_formula(RepKind::Presumptive, pol, arg, c.name, model)));
        }
    }
    return report;
}

std::string emit_mu_counterpart(const MuCounterpart& mc) {
    std::ostringstream out;
    for (std::size_t i = 0; i < mc.point_names.size(); ++i) {
        const std::string& point = mc.point_names[i];
        out << "point " << point << " from " << mc.case_of.at(point) << " mass "
            << mc.model.mu.mu({point}).to_string() << " val "
            << mc.model.points.valuation_at(i).to_string() << "\n";
    }
    out << "capacity additive\n";
    return out.str();
}

} // namespace bdcase
