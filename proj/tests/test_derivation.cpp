#include "doctest.h"

#include "curveflow/derivation.hpp"
#include "curveflow/expr.hpp"
#include "curveflow/hamiltonian.hpp"
#include "test_support.hpp"

using namespace curveflow;
using testsupport::Rng;
using testsupport::random_poly;

namespace {

DiffPoly k(unsigned order = 0) { return DiffPoly::k(order); }

// Independent chain-rule oracle: peel one variable off a term and recurse via
// the product rule, with d_a(k^(m)) = D_s^m a as the base case.
DiffPoly oracle_apply(const DiffPoly& a, const DiffPoly& p) {
    DiffPoly out;
    for (const auto& [mono, coeff] : p.terms()) {
        if (mono.factors().empty()) continue;
        const auto [order, exp] = mono.factors().front();
        const DiffPoly rest =
            DiffPoly::term(coeff, mono.with_exponent(order, exp - 1));
        const DiffPoly head = k(order);
        // d(head * rest) = d(head) rest + head d(rest)
        out += total_derivative(a, order) * rest + head * oracle_apply(a, rest);
    }
    return out;
}

}  // namespace

TEST_CASE("derivation action on hand inputs") {
    CHECK(apply(Characteristic(k(1)), k()) == k(1));
    CHECK(apply(Characteristic(k(1)), k() * k()) == k().scaled(2) * k(1));
    CHECK(apply(Characteristic(k()), k(1) * k(2)) == (k(1) * k(2)).scaled(2));
    CHECK(apply(Characteristic(k()), DiffPoly(5L)) == DiffPoly{});
    CHECK(apply(Characteristic(k()), DiffPoly::g()) == DiffPoly{});
    // The derivation with characteristic k' is D_s itself.
    Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const DiffPoly p = random_poly(rng, 3, 3, 3, 1);
        CHECK(apply(Characteristic(k(1)), p) == total_derivative(p));
    }
}

TEST_CASE("derivation action matches the chain-rule oracle") {
    Rng rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const DiffPoly a = random_poly(rng, 3, 3, 2, 0);
        const DiffPoly p = random_poly(rng, 3, 3, 3, 1);
        CHECK(apply(Characteristic(a), p) == oracle_apply(a, p));
    }
}

TEST_CASE("derivations commute with the total derivative") {
    Rng rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const Characteristic a(random_poly(rng, 3, 3, 2, 1));
        const DiffPoly p = random_poly(rng, 3, 3, 3, 1);
        CHECK(apply(a, total_derivative(p)) == total_derivative(apply(a, p)));
    }
}

TEST_CASE("commutator on hand inputs") {
    Rng rng(44);
    const Characteristic a(random_poly(rng, 3, 3, 3, 0));
    CHECK(commutator(a, a).is_zero());
    CHECK(commutator(Characteristic(k()), Characteristic(k() * k())) ==
          Characteristic(k() * k()));
    // Second hierarchy flow commutes with the first.
    const std::vector<Characteristic> flows = mkdv_hierarchy(1);
    CHECK(commutator(flows[0], flows[1]).is_zero());
}

TEST_CASE("commutator is bilinear and antisymmetric and satisfies Jacobi") {
    Rng rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        const Characteristic a(random_poly(rng, 2, 2, 2, 0));
        const Characteristic b(random_poly(rng, 2, 2, 2, 0));
        const Characteristic c(random_poly(rng, 2, 2, 2, 0));
        CHECK(commutator(a, b).generator_image() == -commutator(b, a).generator_image());
        const DiffPoly jacobi = commutator(a, commutator(b, c)).generator_image() +
                                commutator(b, commutator(c, a)).generator_image() +
                                commutator(c, commutator(a, b)).generator_image();
        CHECK(jacobi == DiffPoly{});
        const Characteristic sum(a.generator_image() + b.generator_image());
        CHECK(commutator(sum, c).generator_image() ==
              commutator(a, c).generator_image() + commutator(b, c).generator_image());
    }
}

TEST_CASE("action on functionals") {
    Rng rng(46);
    // Any derivation kills int k' ds.
    CHECK(apply_to_functional(Characteristic(random_poly(rng, 3, 3, 3, 0)), Functional(k(1)))
              .is_zero());
    // The mKdV flow conserves H0, and so does reparametrization.
    CHECK(apply_to_functional(Characteristic(mkdv_characteristic()), h0()).is_zero());
    CHECK(apply_to_functional(Characteristic(k(1)), h0()).is_zero());
}

TEST_CASE("functional action agrees with the derivation route") {
    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const Characteristic a(random_poly(rng, 3, 3, 2, 0));
        const Functional f(random_poly(rng, 3, 3, 3, 0));
        CHECK(functional_equal(apply_to_functional(a, f),
                               Functional(apply(a, f.representative()))));
    }
}
