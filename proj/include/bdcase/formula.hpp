#ifndef BDCASE_FORMULA_HPP
#define BDCASE_FORMULA_HPP

#include <memory>
#include <string>
#include <vector>

#include "bdcase/errors.hpp"

namespace bdcase {

// Reserved variable backing the top/bot expansions. Never part of a user
// signature; every valuation pins it to N.
inline const std::string kReservedVar = "_c";

// ---------------------------------------------------------------------------
// Inner language: p | !phi | phi & phi | phi | phi | @phi
// ---------------------------------------------------------------------------

class Inner {
public:
    enum class Kind : unsigned char { Var, Neg, And, Or, Delta };

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        Kind kind;
        std::string var;   // Kind::Var
        NodePtr left;      // Neg/Delta sub, And/Or left
        NodePtr right;     // And/Or right
    };

    Inner() = default;

    static Inner var(std::string name);
    static Inner neg(Inner sub);
    static Inner conj(Inner l, Inner r);
    static Inner disj(Inner l, Inner r);
    static Inner delta(Inner sub);

    bool valid() const { return node_ != nullptr; }
    Kind kind() const { return node_->kind; }
    const std::string& var_name() const { return node_->var; }
    Inner sub() const { return Inner(node_->left); }
    Inner left() const { return Inner(node_->left); }
    Inner right() const { return Inner(node_->right); }

    bool operator==(const Inner& other) const { return equal(node_, other.node_); }
    bool operator!=(const Inner& other) const { return !(*this == other); }

    // Variables in first-occurrence order, reserved `_c` excluded.
    std::vector<std::string> variables() const;
    bool contains_delta() const;

private:
    explicit Inner(NodePtr n) : node_(std::move(n)) {}
    static bool equal(const NodePtr& a, const NodePtr& b);

    NodePtr node_;
};

enum class ProbeKind : unsigned char { t, b, n, f };

inline const char* to_string(ProbeKind k) {
    switch (k) {
        case ProbeKind::t: return "t";
        case ProbeKind::b: return "b";
        case ProbeKind::n: return "n";
        case ProbeKind::f: return "f";
    }
    return "?";
}

// Status probes as defining expansions:
//   t(x) = @x & !@!x   b(x) = @x & @!x   n(x) = !@x & !@!x   f(x) = !@x & @!x
Inner make_probe(ProbeKind kind, Inner phi);

// top = @_c | !@_c, bot = !top
Inner make_top();
Inner make_bot();

// The 9-disjunct internalisation of entailment, pair order
// ff, fb, fn, ft, bb, bt, nn, nt, tt.
Inner make_internal_entailment(const Inner& phi, const Inner& chi);

// Replaces every variable leaf p with t(p). Input must be Delta-free.
Inner substitute_t(const Inner& phi);

// ---------------------------------------------------------------------------
// Outer language: B{phi} | ~a | a & a | a | a | a -> a | a -< a | @a
// ---------------------------------------------------------------------------

class Outer {
public:
    enum class Kind : unsigned char { ModalAtom, GNeg, GAnd, GOr, GImp, GCoimp, GDelta };

    struct Node;
    using NodePtr = std::shared_ptr<const Node>;

    struct Node {
        Kind kind;
        Inner inner;   // ModalAtom
        NodePtr left;
        NodePtr right;
    };

    Outer() = default;

    static Outer atom(Inner phi);
    static Outer gneg(Outer sub);
    static Outer gand(Outer l, Outer r);
    static Outer gor(Outer l, Outer r);
    static Outer gimp(Outer l, Outer r);
    static Outer gcoimp(Outer l, Outer r);
    static Outer gdelta(Outer sub);

    bool valid() const { return node_ != nullptr; }
    Kind kind() const { return node_->kind; }
    const Inner& inner() const { return node_->inner; }
    Outer sub() const { return Outer(node_->left); }
    Outer left() const { return Outer(node_->left); }
    Outer right() const { return Outer(node_->right); }

    bool operator==(const Outer& other) const { return equal(node_, other.node_); }
    bool operator!=(const Outer& other) const { return !(*this == other); }

    // Union of the modal atoms' inner variables, first-occurrence order.
    std::vector<std::string> variables() const;

private:
    explicit Outer(NodePtr n) : node_(std::move(n)) {}
    static bool equal(const NodePtr& a, const NodePtr& b);

    NodePtr node_;
};

// ---------------------------------------------------------------------------

// Ordered list of distinct variable names; the canonical enumeration order.
class Signature {
public:
    Signature() = default;
    explicit Signature(std::vector<std::string> names);

    static Signature union_of(const Signature& a, const Signature& b);
    static Signature of_formula(const Inner& phi);
    static Signature of_formulas(const std::vector<Inner>& phis);

    bool contains(const std::string& name) const;
    // Index of a name; throws UnboundVariable if absent.
    std::size_t index_of(const std::string& name) const;

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
};

} // namespace bdcase

#endif
