#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "curveflow/errors.hpp"

namespace curveflow {

using Rational = boost::multiprecision::cpp_rational;

/// G^{g_power} * prod_m (k^(m))^{e_m}.  Factor list is sorted by derivative
/// order and never holds a zero exponent; the coefficient lives in DiffPoly.
class Monomial {
public:
    using Factors = std::vector<std::pair<unsigned, unsigned>>;  // (order, exponent)

    Monomial() = default;  // the unit monomial

    static Monomial k(unsigned order, unsigned exponent = 1);
    static Monomial g(unsigned power);

    unsigned g_power() const noexcept { return g_power_; }
    const Factors& factors() const noexcept { return factors_; }

    bool is_unit() const noexcept { return g_power_ == 0 && factors_.empty(); }
    bool is_constant() const noexcept { return factors_.empty(); }  // pure Q[G] element
    unsigned degree() const noexcept;                               // total k-degree
    unsigned max_order() const noexcept;                            // 0 when k-free
    unsigned exponent_of(unsigned order) const noexcept;

    Monomial times(const Monomial& other) const;
    Monomial with_exponent(unsigned order, unsigned exponent) const;  // 0 erases

    friend bool operator==(const Monomial&, const Monomial&) = default;

    /// Canonical term order: total k-degree ascending, then G-power ascending,
    /// then derivative-order-major comparison of the exponent vectors (at the
    /// smallest order where they differ, the larger exponent sorts first).
    static bool canonical_less(const Monomial& a, const Monomial& b);

private:
    unsigned g_power_ = 0;
    Factors factors_;
};

/// Element of the differential algebra of polynomials in k, k', k'', ... with
/// coefficients in Q[G].  Terms are kept merged and canonically ordered, so
/// structural equality is algebraic equality.  Values are immutable in spirit:
/// every operation returns a fresh polynomial.
class DiffPoly {
public:
    using Term = std::pair<Monomial, Rational>;

    DiffPoly() = default;  // zero
    explicit DiffPoly(Rational constant);
    explicit DiffPoly(long constant);

    static DiffPoly k(unsigned order = 0);
    static DiffPoly g();
    static DiffPoly term(Rational coeff, Monomial mono);
    static DiffPoly from_terms(std::vector<Term> terms);  // merges and normalizes

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    unsigned degree() const noexcept;     // max total k-degree over terms
    unsigned max_order() const noexcept;  // max derivative order over terms
    bool depends_on_k() const noexcept;
    bool depends_on_g() const noexcept;

    Rational coefficient(const Monomial& mono) const;

    DiffPoly operator-() const;
    DiffPoly operator+(const DiffPoly& other) const;
    DiffPoly operator-(const DiffPoly& other) const;
    DiffPoly operator*(const DiffPoly& other) const;
    DiffPoly& operator+=(const DiffPoly& other);
    DiffPoly& operator-=(const DiffPoly& other);
    DiffPoly& operator*=(const DiffPoly& other);
    DiffPoly scaled(const Rational& c) const;
    DiffPoly pow(unsigned exponent) const;

    friend bool operator==(const DiffPoly&, const DiffPoly&) = default;

    /// Partial derivative with respect to the single variable k^(order).
    DiffPoly partial(unsigned order) const;
    /// Polynomial antiderivative with respect to the variable k^(order).
    DiffPoly integrate_in(unsigned order) const;

    /// The k-free part (an element of Q[G]); "constant" in the sense of the
    /// total derivative.
    DiffPoly constant_part() const;
    DiffPoly without_constant() const;

    /// Coefficient polynomial of (k^(order))^power in the expansion by powers
    /// of that one variable.
    DiffPoly coeff_of_power(unsigned order, unsigned power) const;
    unsigned degree_in(unsigned order) const noexcept;

    DiffPoly substitute_g(const Rational& value) const;

private:
    std::vector<Term> terms_;  // canonically ordered, coefficients nonzero
};

inline DiffPoly operator*(const Rational& c, const DiffPoly& p) { return p.scaled(c); }

/// D_s: sends k^(m) to k^(m+1), annihilates constants and G, obeys Leibniz.
DiffPoly total_derivative(const DiffPoly& p);
DiffPoly total_derivative(const DiffPoly& p, unsigned times);

/// Variational derivative sum_m (-D_s)^m ( d p / d k^(m) ).
DiffPoly euler_derivative(const DiffPoly& p);

/// Integration-by-parts decomposition p = D_s(integral) + residual + constant,
/// with the residual free of terms that are affine in their top derivative.
struct PartsReduction {
    DiffPoly integral;
    DiffPoly residual;  // zero constant part
    DiffPoly constant;
};
PartsReduction reduce_by_parts(const DiffPoly& p);

/// Membership in Im(D_s): zero constant part and vanishing Euler derivative.
bool is_exact(const DiffPoly& p);

/// The q with D_s q = p and zero constant term; throws NotExactError (with the
/// Euler witness) when no such q exists.  `where` names the caller in errors.
DiffPoly antiderivative(const DiffPoly& p, const std::string& where = "antiderivative");

/// Pointwise evaluation on a uniform periodic grid with spacing h, derivatives
/// of k taken spectrally; G is replaced by g_value.
std::vector<double> evaluate(const DiffPoly& p, std::span<const double> k_samples, double h,
                             double g_value);

double to_double(const Rational& r);

}  // namespace curveflow
