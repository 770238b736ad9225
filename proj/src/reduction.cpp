#include "curveflow/diffpoly.hpp"
#include "curveflow/expr.hpp"
#include "curveflow/functional.hpp"

namespace curveflow {

PartsReduction reduce_by_parts(const DiffPoly& p) {
    PartsReduction out;
    DiffPoly cur = p;
    out.constant = cur.constant_part();
    cur = cur.without_constant();
    while (!cur.is_zero()) {
        const unsigned n = cur.max_order();
        if (n == 0) {
            // Nonconstant polynomial in k alone: nothing here is a total
            // derivative (D_s raises the top order of any nonconstant input).
            out.residual += cur;
            break;
        }
        DiffPoly affine = cur.coeff_of_power(n, 1);
        if (!affine.is_zero()) {
            DiffPoly q0 = affine.integrate_in(n - 1);
            out.integral += q0;
            cur -= total_derivative(q0);
            continue;
        }
        // Terms of degree >= 2 in the top derivative are irreducible residue.
        DiffPoly lower = cur.coeff_of_power(n, 0);
        out.residual += cur - lower;
        cur = lower;
    }
    return out;
}

bool is_exact(const DiffPoly& p) {
    return p.constant_part().is_zero() && euler_derivative(p).is_zero();
}

DiffPoly antiderivative(const DiffPoly& p, const std::string& where) {
    PartsReduction red = reduce_by_parts(p);
    if (red.residual.is_zero() && red.constant.is_zero()) return red.integral;
    const DiffPoly witness = euler_derivative(p);
    throw NotExactError(where, print(witness.is_zero() ? red.constant : witness));
}

Functional::Functional(DiffPoly representative) : representative_(std::move(representative)) {
    normal_form_ = reduce_by_parts(representative_).residual;
}

bool Functional::is_zero() const { return is_exact(representative_.without_constant()); }

Functional Functional::operator+(const Functional& other) const {
    return Functional(representative_ + other.representative_);
}

Functional Functional::operator-(const Functional& other) const {
    return Functional(representative_ - other.representative_);
}

Functional Functional::operator-() const { return Functional(-representative_); }

Functional Functional::scaled(const Rational& c) const {
    return Functional(representative_.scaled(c));
}

bool functional_equal(const Functional& a, const Functional& b) {
    return is_exact((a.representative() - b.representative()).without_constant());
}

}  // namespace curveflow
