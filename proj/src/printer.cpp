#include "bdcase/printer.hpp"

namespace bdcase {

namespace {

bool is_delta_of(const Inner& f, Inner& out) {
    if (!f.valid() || f.kind() != Inner::Kind::Delta) return false;
    out = f.sub();
    return true;
}

bool is_neg_of(const Inner& f, Inner& out) {
    if (!f.valid() || f.kind() != Inner::Kind::Neg) return false;
    out = f.sub();
    return true;
}

// Matches @x (positive) or !@x (negated); sets phi to x's argument sense.
// Probe shapes are And(L, R) where L in {@x, !@x} and R in {@!x, !@!x}.
bool match_probe_half_left(const Inner& f, bool& negated, Inner& phi) {
    Inner inner = f;
    negated = false;
    Inner tmp;
    if (is_neg_of(inner, tmp)) {
        negated = true;
        inner = tmp;
    }
    if (!is_delta_of(inner, tmp)) return false;
    phi = tmp;
    return true;
}

bool match_probe_half_right(const Inner& f, bool& negated, Inner& phi) {
    Inner inner = f;
    negated = false;
    Inner tmp;
    if (is_neg_of(inner, tmp)) {
        negated = true;
        inner = tmp;
    }
    if (!is_delta_of(inner, tmp)) return false;
    if (!is_neg_of(tmp, phi)) return false;
    return true;
}

} // namespace

std::optional<std::pair<ProbeKind, Inner>> match_probe(const Inner& phi) {
    if (!phi.valid() || phi.kind() != Inner::Kind::And) return std::nullopt;
    bool lneg = false, rneg = false;
    Inner larg, rarg;
    if (!match_probe_half_left(phi.left(), lneg, larg)) return std::nullopt;
    if (!match_probe_half_right(phi.right(), rneg, rarg)) return std::nullopt;
    if (larg != rarg) return std::nullopt;
    ProbeKind kind;
    if (!lneg && rneg) kind = ProbeKind::t;
    else if (!lneg && !rneg) kind = ProbeKind::b;
    else if (lneg && rneg) kind = ProbeKind::n;
    else kind = ProbeKind::f;
    // confirm against the defining expansion (guards against e.g. shared
    // subtrees that merely look similar)
    if (make_probe(kind, larg) != phi) return std::nullopt;
    return std::make_pair(kind, larg);
}

bool is_top_shape(const Inner& phi) { return phi == make_top(); }

bool is_bot_shape(const Inner& phi) { return phi == make_bot(); }

std::optional<std::pair<Inner, Inner>> match_internal_entailment(const Inner& phi) {
    // left-associated Or chain of 9 disjuncts; the first is f(a) & f(b)
    Inner cur = phi;
    int disjuncts = 1;
    while (cur.valid() && cur.kind() == Inner::Kind::Or && disjuncts < 9) {
        cur = cur.left();
        ++disjuncts;
    }
    if (disjuncts != 9 || !cur.valid() || cur.kind() != Inner::Kind::And) return std::nullopt;
    auto lp = match_probe(cur.left());
    auto rp = match_probe(cur.right());
    if (!lp || !rp) return std::nullopt;
    if (lp->first != ProbeKind::f || rp->first != ProbeKind::f) return std::nullopt;
    if (make_internal_entailment(lp->second, rp->second) != phi) return std::nullopt;
    return std::make_pair(lp->second, rp->second);
}

namespace {

// precedence: 0 = =>> level, 1 = |, 2 = &, 3 = unary/atom
std::string print_at(const Inner& f, int level);

std::string wrap(std::string s, bool parens) {
    return parens ? "(" + std::move(s) + ")" : std::move(s);
}

std::string print_at(const Inner& f, int level) {
    if (is_top_shape(f)) return "top";
    if (is_bot_shape(f)) return "bot";
    if (auto probe = match_probe(f))
        return std::string(to_string(probe->first)) + "(" + print_at(probe->second, 0) + ")";
    if (auto ent = match_internal_entailment(f))
        return wrap(print_at(ent->first, 1) + " =>> " + print_at(ent->second, 1), level > 0);
    switch (f.kind()) {
        case Inner::Kind::Var: return f.var_name();
        case Inner::Kind::Neg: return "!" + print_at(f.sub(), 3);
        case Inner::Kind::Delta: return "@" + print_at(f.sub(), 3);
        case Inner::Kind::And:
            return wrap(print_at(f.left(), 2) + " & " + print_at(f.right(), 3), level > 2);
        case Inner::Kind::Or:
            return wrap(print_at(f.left(), 1) + " | " + print_at(f.right(), 2), level > 1);
    }
    return "?";
}

// outer precedence: 0 = ->, 1 = -<, 2 = |, 3 = &, 4 = unary/atom
std::string print_outer_at(const Outer& a, int level) {
    switch (a.kind()) {
        case Outer::Kind::ModalAtom: return "B{ " + print_at(a.inner(), 0) + " }";
        case Outer::Kind::GNeg: return "~" + print_outer_at(a.sub(), 4);
        case Outer::Kind::GDelta: return "@" + print_outer_at(a.sub(), 4);
        case Outer::Kind::GAnd:
            return wrap(print_outer_at(a.left(), 3) + " & " + print_outer_at(a.right(), 4), level > 3);
        case Outer::Kind::GOr:
            return wrap(print_outer_at(a.left(), 2) + " | " + print_outer_at(a.right(), 3), level > 2);
        case Outer::Kind::GCoimp:
            return wrap(print_outer_at(a.left(), 1) + " -< " + print_outer_at(a.right(), 2), level > 1);
        case Outer::Kind::GImp:
            return wrap(print_outer_at(a.left(), 1) + " -> " + print_outer_at(a.right(), 0), level > 0);
    }
    return "?";
}

} // namespace

std::string print_inner(const Inner& phi) { return print_at(phi, 0); }

std::string print_outer(const Outer& alpha) { return print_outer_at(alpha, 0); }

} // namespace bdcase
