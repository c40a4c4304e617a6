#include <doctest.h>

#include <algorithm>

#include "bdcase/bd_semantics.hpp"
#include "bdcase/parser.hpp"
#include "support.hpp"

using namespace bdcase;

namespace {

Valuation single(const char* name, FourValue x) {
    return Valuation(Signature({name}), {x});
}

} // namespace

TEST_CASE("truth tables of the connectives") {
    Inner p = Inner::var("p");
    CHECK(eval4(Inner::neg(p), single("p", FourValue::T)) == FourValue::F);
    CHECK(eval4(Inner::neg(p), single("p", FourValue::B)) == FourValue::B);
    CHECK(eval4(Inner::neg(p), single("p", FourValue::N)) == FourValue::N);
    CHECK(eval4(Inner::delta(p), single("p", FourValue::T)) == FourValue::T);
    CHECK(eval4(Inner::delta(p), single("p", FourValue::B)) == FourValue::T);
    CHECK(eval4(Inner::delta(p), single("p", FourValue::N)) == FourValue::F);
    CHECK(eval4(Inner::delta(p), single("p", FourValue::F)) == FourValue::F);
    // meet/join in the truth order
    CHECK(and4(FourValue::B, FourValue::N) == FourValue::F);
    CHECK(or4(FourValue::B, FourValue::N) == FourValue::T);
    CHECK(and4(FourValue::T, FourValue::B) == FourValue::B);
    CHECK(or4(FourValue::F, FourValue::N) == FourValue::N);
}

TEST_CASE("top is constantly T, bot constantly F") {
    testsupport::Rng rng(7);
    Signature sig(testsupport::small_vars());
    for (int i = 0; i < 50; ++i) {
        Valuation v = testsupport::random_valuation(rng, sig);
        CHECK(eval4(make_top(), v) == FourValue::T);
        CHECK(eval4(make_bot(), v) == FourValue::F);
    }
}

TEST_CASE("probes single out their value") {
    static const std::pair<ProbeKind, FourValue> table[] = {
        {ProbeKind::t, FourValue::T},
        {ProbeKind::b, FourValue::B},
        {ProbeKind::n, FourValue::N},
        {ProbeKind::f, FourValue::F},
    };
    for (auto [kind, hit] : table)
        for (FourValue x : all_four_values) {
            FourValue got = eval4(make_probe(kind, Inner::var("p")), single("p", x));
            CHECK(got == (x == hit ? FourValue::T : FourValue::F));
        }
}

TEST_CASE("sat frame clauses agree with eval4 on random pairs") {
    testsupport::Rng rng(8);
    Signature sig(testsupport::small_vars());
    for (int i = 0; i < 10000; ++i) {
        Inner f = testsupport::random_inner(rng, testsupport::small_vars(), 6);
        Valuation v = testsupport::random_valuation(rng, sig);
        PointModel m(sig, {"w"}, {v});
        auto [pos, neg] = sat(f, m, "w");
        FourValue x = eval4(f, v);
        CHECK(pos == pos_bit(x));
        CHECK(neg == neg_bit(x));
    }
}

TEST_CASE("entailment basics") {
    CHECK(entails(parse_inner("p & !p & q"), parse_inner("p & !p")));
    CHECK_FALSE(entails(parse_inner("p & !p"), parse_inner("q")));
    CHECK_FALSE(entails(parse_inner("q"), parse_inner("p | !p")));
    CHECK(entails(parse_inner("p"), parse_inner("p | q")));
    CHECK(entails(parse_inner("bot"), parse_inner("p")));
    CHECK(entails(parse_inner("p"), parse_inner("top")));
}

TEST_CASE("counter-valuations certify failures") {
    EntailmentResult res = entails_certified(parse_inner("p & !p"), parse_inner("q"));
    REQUIRE_FALSE(res.holds);
    REQUIRE(res.counter.has_value());
    const Valuation& v = *res.counter;
    CHECK_FALSE(le4(eval4(parse_inner("p & !p"), v), eval4(parse_inner("q"), v)));
}

TEST_CASE("bit-parallel entailment agrees with the naive oracle") {
    testsupport::Rng rng(9);
    for (int i = 0; i < 3000; ++i) {
        Inner a = testsupport::random_inner(rng, testsupport::small_vars(), 5);
        Inner b = testsupport::random_inner(rng, testsupport::small_vars(), 5);
        CHECK(entails(a, b) == testsupport::naive_entails(a, b));
    }
}

TEST_CASE("entailment equals double extension inclusion over point models") {
    // phi entails chi iff on every model |phi|+ subset of |chi|+ and
    // |chi|- subset of |phi|-. Random multi-point models can only refute;
    // the single-point model over a counter-valuation always does.
    testsupport::Rng rng(10);
    Signature sig(testsupport::small_vars());
    for (int i = 0; i < 1000; ++i) {
        Inner a = testsupport::random_inner(rng, testsupport::small_vars(), 4);
        Inner b = testsupport::random_inner(rng, testsupport::small_vars(), 4);
        EntailmentResult res = entails_certified(a, b);

        int npoints = 1 + rng.below(4);
        std::vector<std::string> names;
        std::vector<Valuation> vals;
        for (int j = 0; j < npoints; ++j) {
            names.push_back("w" + std::to_string(j));
            vals.push_back(testsupport::random_valuation(rng, sig));
        }
        if (!res.holds) {
            names.push_back("cx");
            vals.push_back(*res.counter);
        }
        PointModel m(sig, names, vals);
        Extension ea = extension(a, m);
        Extension eb = extension(b, m);
        auto subset = [](const std::vector<std::string>& x, const std::vector<std::string>& y) {
            for (const auto& n : x)
                if (std::find(y.begin(), y.end(), n) == y.end()) return false;
            return true;
        };
        bool included = subset(ea.pos, eb.pos) && subset(eb.neg, ea.neg);
        if (res.holds)
            CHECK(included);
        else
            CHECK_FALSE(included);
    }
}

TEST_CASE("internal entailment is valid exactly when entailment holds") {
    testsupport::Rng rng(11);
    std::vector<std::string> vars(testsupport::small_vars().begin(),
                                  testsupport::small_vars().begin() + 3);
    for (int i = 0; i < 1000; ++i) {
        Inner a = testsupport::random_inner(rng, vars, 4);
        Inner b = testsupport::random_inner(rng, vars, 4);
        bool internal_valid = entails(make_top(), make_internal_entailment(a, b));
        CHECK(internal_valid == entails(a, b));
    }
}

TEST_CASE("delta-guarded formulas are exactly-valued") {
    // Every variable occurrence under Delta forces exactly one of sat+/sat-.
    testsupport::Rng rng(12);
    Signature sig(testsupport::small_vars());
    for (int i = 0; i < 1000; ++i) {
        Inner f = testsupport::random_guarded(rng, testsupport::small_vars(), 4);
        Valuation v = testsupport::random_valuation(rng, sig);
        PointModel m(sig, {"w"}, {v});
        auto [pos, neg] = sat(f, m, "w");
        CHECK(pos != neg);
    }
}

TEST_CASE("variable cap is enforced") {
    Inner f;
    for (int i = 0; i < 5; ++i) {
        Inner v = Inner::var("x" + std::to_string(i));
        f = f.valid() ? Inner::conj(f, v) : v;
    }
    CHECK_THROWS_AS(entails(f, f, 4), CapacityExceeded);
    CHECK_NOTHROW(entails(f, f, 5));
}
