#pragma once

#include <vector>

#include "curveflow/diffpoly.hpp"
#include "curveflow/functional.hpp"

namespace curveflow {

/// The derivation commuting with D_s that sends k to `a`; acts on any p as
/// sum_m a^(m) dp/dk^(m).  Only the generator image is stored, prolongations
/// a^(m) are produced on demand.
class Characteristic {
public:
    Characteristic() = default;  // the zero derivation
    explicit Characteristic(DiffPoly a) : a_(std::move(a)) {}

    const DiffPoly& generator_image() const noexcept { return a_; }
    bool is_zero() const noexcept { return a_.is_zero(); }

    friend bool operator==(const Characteristic&, const Characteristic&) = default;

private:
    DiffPoly a_;
};

DiffPoly apply(const Characteristic& a, const DiffPoly& p);

/// [d_a, d_b] = d_{d_a b - d_b a}.
Characteristic commutator(const Characteristic& a, const Characteristic& b);

/// d_a (int f ds) = int a * (delta f / delta k) ds.
Functional apply_to_functional(const Characteristic& a, const Functional& f);

}  // namespace curveflow
