#pragma once

#include "curveflow/diffpoly.hpp"

namespace curveflow {

/// Equivalence class of an integrand modulo Im(D_s) and constants.  The
/// normal form is the integration-by-parts residue of the representative; it
/// has zero constant part and no term that is affine in its top derivative.
class Functional {
public:
    Functional() = default;
    explicit Functional(DiffPoly representative);

    const DiffPoly& representative() const noexcept { return representative_; }
    const DiffPoly& normal_form() const noexcept { return normal_form_; }

    bool is_zero() const;  // Euler-kernel test, not normal-form comparison

    Functional operator+(const Functional& other) const;
    Functional operator-(const Functional& other) const;
    Functional operator-() const;
    Functional scaled(const Rational& c) const;

private:
    DiffPoly representative_;
    DiffPoly normal_form_;
};

/// Representatives differ by an exact element plus a constant.
bool functional_equal(const Functional& a, const Functional& b);

}  // namespace curveflow
