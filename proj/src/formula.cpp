#include "bdcase/formula.hpp"

#include <algorithm>

namespace bdcase {

Inner Inner::var(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Var;
    n->var = std::move(name);
    return Inner(std::move(n));
}

Inner Inner::neg(Inner sub) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Neg;
    n->left = sub.node_;
    return Inner(std::move(n));
}

Inner Inner::conj(Inner l, Inner r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::And;
    n->left = l.node_;
    n->right = r.node_;
    return Inner(std::move(n));
}

Inner Inner::disj(Inner l, Inner r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Or;
    n->left = l.node_;
    n->right = r.node_;
    return Inner(std::move(n));
}

Inner Inner::delta(Inner sub) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Delta;
    n->left = sub.node_;
    return Inner(std::move(n));
}

bool Inner::equal(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case Kind::Var: return a->var == b->var;
        case Kind::Neg:
        case Kind::Delta: return equal(a->left, b->left);
        case Kind::And:
        case Kind::Or: return equal(a->left, b->left) && equal(a->right, b->right);
    }
    return false;
}

namespace {

void collect_vars(const Inner::NodePtr& n, std::vector<std::string>& out) {
    if (!n) return;
    if (n->kind == Inner::Kind::Var) {
        if (n->var != kReservedVar && std::find(out.begin(), out.end(), n->var) == out.end())
            out.push_back(n->var);
        return;
    }
    collect_vars(n->left, out);
    collect_vars(n->right, out);
}

bool has_delta(const Inner::NodePtr& n) {
    if (!n) return false;
    if (n->kind == Inner::Kind::Delta) return true;
    return has_delta(n->left) || has_delta(n->right);
}

} // namespace

std::vector<std::string> Inner::variables() const {
    std::vector<std::string> out;
    collect_vars(node_, out);
    return out;
}

bool Inner::contains_delta() const { return has_delta(node_); }

Inner make_probe(ProbeKind kind, Inner phi) {
    Inner dp = Inner::delta(phi);
    Inner dnp = Inner::delta(Inner::neg(phi));
    switch (kind) {
        case ProbeKind::t: return Inner::conj(dp, Inner::neg(dnp));
        case ProbeKind::b: return Inner::conj(dp, dnp);
        case ProbeKind::n: return Inner::conj(Inner::neg(dp), Inner::neg(dnp));
        case ProbeKind::f: return Inner::conj(Inner::neg(dp), dnp);
    }
    return Inner();
}

Inner make_top() {
    Inner c = Inner::var(kReservedVar);
    return Inner::disj(Inner::delta(c), Inner::neg(Inner::delta(c)));
}

Inner make_bot() { return Inner::neg(make_top()); }

Inner make_internal_entailment(const Inner& phi, const Inner& chi) {
    // pairs (x, x') with x <=4 x'
    static const std::pair<ProbeKind, ProbeKind> pairs[] = {
        {ProbeKind::f, ProbeKind::f}, {ProbeKind::f, ProbeKind::b},
        {ProbeKind::f, ProbeKind::n}, {ProbeKind::f, ProbeKind::t},
        {ProbeKind::b, ProbeKind::b}, {ProbeKind::b, ProbeKind::t},
        {ProbeKind::n, ProbeKind::n}, {ProbeKind::n, ProbeKind::t},
        {ProbeKind::t, ProbeKind::t}};
    Inner acc;
    for (const auto& [x, xp] : pairs) {
        Inner d = Inner::conj(make_probe(x, phi), make_probe(xp, chi));
        acc = acc.valid() ? Inner::disj(acc, d) : d;
    }
    return acc;
}

Inner substitute_t(const Inner& phi) {
    if (phi.contains_delta()) throw DeltaPresent();
    switch (phi.kind()) {
        case Inner::Kind::Var: return make_probe(ProbeKind::t, phi);
        case Inner::Kind::Neg: return Inner::neg(substitute_t(phi.sub()));
        case Inner::Kind::And: return Inner::conj(substitute_t(phi.left()), substitute_t(phi.right()));
        case Inner::Kind::Or: return Inner::disj(substitute_t(phi.left()), substitute_t(phi.right()));
        case Inner::Kind::Delta: throw DeltaPresent();
    }
    return Inner();
}

Outer Outer::atom(Inner phi) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ModalAtom;
    n->inner = std::move(phi);
    return Outer(std::move(n));
}

Outer Outer::gneg(Outer sub) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::GNeg;
    n->left = sub.node_;
    return Outer(std::move(n));
}

Outer Outer::gdelta(Outer sub) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::GDelta;
    n->left = sub.node_;
    return Outer(std::move(n));
}

Outer Outer::gand(Outer l, Outer r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::GAnd;
    n->left = l.node_;
    n->right = r.node_;
    return Outer(std::move(n));
}

Outer Outer::gor(Outer l, Outer r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::GOr;
    n->left = l.node_;
    n->right = r.node_;
    return Outer(std::move(n));
}

Outer Outer::gimp(Outer l, Outer r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::GImp;
    n->left = l.node_;
    n->right = r.node_;
    return Outer(std::move(n));
}

Outer Outer::gcoimp(Outer l, Outer r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::GCoimp;
    n->left = l.node_;
    n->right = r.node_;
    return Outer(std::move(n));
}

bool Outer::equal(const NodePtr& a, const NodePtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind) return false;
    if (a->kind == Kind::ModalAtom) return a->inner == b->inner;
    return equal(a->left, b->left) && equal(a->right, b->right);
}

namespace {
void collect_outer_vars(const Outer::NodePtr& n, std::vector<std::string>& out) {
    if (!n) return;
    if (n->kind == Outer::Kind::ModalAtom) {
        for (const auto& v : n->inner.variables())
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        return;
    }
    collect_outer_vars(n->left, out);
    collect_outer_vars(n->right, out);
}
} // namespace

std::vector<std::string> Outer::variables() const {
    std::vector<std::string> out;
    collect_outer_vars(node_, out);
    return out;
}

Signature::Signature(std::vector<std::string> names) : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == kReservedVar)
            throw Error("reserved variable " + kReservedVar + " cannot appear in a signature");
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j])
                throw Error("duplicate variable in signature: " + names_[i]);
    }
}

Signature Signature::union_of(const Signature& a, const Signature& b) {
    std::vector<std::string> names = a.names_;
    for (const auto& n : b.names_)
        if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
    return Signature(std::move(names));
}

Signature Signature::of_formula(const Inner& phi) { return Signature(phi.variables()); }

Signature Signature::of_formulas(const std::vector<Inner>& phis) {
    Signature acc;
    for (const auto& phi : phis) acc = union_of(acc, of_formula(phi));
    return acc;
}

bool Signature::contains(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t Signature::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw UnboundVariable(name);
    return static_cast<std::size_t>(it - names_.begin());
}

} // namespace bdcase
