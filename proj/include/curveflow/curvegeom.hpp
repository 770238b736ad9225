#pragma once

#include <vector>

#include "curveflow/derivation.hpp"
#include "curveflow/functional.hpp"
#include "curveflow/hamiltonian.hpp"

namespace curveflow {

/// v = f T + g N along an arc-length-parametrized curve of curvature k in a
/// surface of constant sectional curvature G.
struct VariationField {
    DiffPoly f;  // tangential component
    DiffPoly g;  // normal component

    friend bool operator==(const VariationField&, const VariationField&) = default;
};

/// Normal component of the covariant derivative of v along the curve:
/// phi_v = g' + k f.
DiffPoly phi_of(const VariationField& v);

/// Tangential component: rho_v = f' - k g; zero exactly when v preserves the
/// arc-length parameter.
DiffPoly rho_of(const VariationField& v);

/// Induced curvature variation v(k) = phi_v' - k rho_v + G g_v.
DiffPoly v_of_k(const VariationField& v);

/// Arc-length-preserving field: f is the zero-constant antiderivative of k g,
/// so rho vanishes identically.
class ArcPreservingField {
public:
    ArcPreservingField() = default;  // zero field

    const DiffPoly& f() const noexcept { return f_; }
    const DiffPoly& g() const noexcept { return g_; }
    VariationField field() const { return {f_, g_}; }

    friend bool operator==(const ArcPreservingField&, const ArcPreservingField&) = default;

    friend ArcPreservingField lift(const DiffPoly& g);

private:
    DiffPoly f_;
    DiffPoly g_;
};

/// Builds the arc-preserving field with normal component g; throws
/// NotExactError when k g has no antiderivative in the algebra.
ArcPreservingField lift(const DiffPoly& g);

/// The derivation on the algebra induced by v: on k it is v(k), on k^(m+1) it
/// is D_s(v(k^(m))) - rho_v k^(m+1), extended by linearity and Leibniz.  The
/// rho term is the arc-length reparametrization drag; it vanishes on
/// arc-preserving fields, where the action reduces to the derivation with
/// characteristic v(k).
DiffPoly apply_field(const VariationField& v, const DiffPoly& p);

/// D_v w = (v(f_w) - g_w phi_v) T + (v(g_w) + f_w phi_v) N.
VariationField covariant_d(const VariationField& v, const VariationField& w);

/// [v,w] = D_v w - D_w v.
VariationField bracket(const VariationField& v, const VariationField& w);
ArcPreservingField bracket(const ArcPreservingField& v, const ArcPreservingField& w);

/// Phi(v) = d_{v(k)}; a Lie-algebra homomorphism on arc-preserving fields.
Characteristic phi_hom(const ArcPreservingField& v);

/// Hamiltonian operator on plane curves: pibar(alpha_p) = lift(D_s p).
ArcPreservingField pibar(const DiffPoly& p);

/// Recursion operator on plane curves: rbar(v) = lift(a'' + k^2 a + k' D_s^{-1}(k a))
/// with a = g_v, the conjugate of the curvature-level recursion under Phi.
ArcPreservingField rbar(const ArcPreservingField& v);

/// [V_0, rbar(V_0), ...] starting from the planar filament field 1/2 k^2 T + k' N.
std::vector<ArcPreservingField> pf_hierarchy(unsigned n,
                                             unsigned depth_limit = kDefaultHierarchyDepth);

/// (dS)(v) = int (phi_v' + G g_v) (dL/dk) ds.
Functional first_variation(const DiffPoly& lagrangian, const VariationField& v);

/// Plane-curve Hamiltonian field of int L ds: pibar applied to dL/dk.
ArcPreservingField hamiltonian_field(const DiffPoly& lagrangian);

}  // namespace curveflow
