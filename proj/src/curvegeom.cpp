#include "curveflow/curvegeom.hpp"

#include <stdexcept>

namespace curveflow {

DiffPoly phi_of(const VariationField& v) { return total_derivative(v.g) + DiffPoly::k() * v.f; }

DiffPoly rho_of(const VariationField& v) { return total_derivative(v.f) - DiffPoly::k() * v.g; }

DiffPoly v_of_k(const VariationField& v) {
    return total_derivative(phi_of(v)) - DiffPoly::k() * rho_of(v) + DiffPoly::g() * v.g;
}

ArcPreservingField lift(const DiffPoly& g) {
    ArcPreservingField out;
    out.f_ = antiderivative(DiffPoly::k() * g, "lift: D_s^{-1}(k g)");
    out.g_ = g;
    return out;
}

namespace {

/// Images v(k^(m)) for m = 0..top under the rho-corrected chain rule
/// v(x') = v(x)' - rho_v x' (variation of the arc-length derivative picks up
/// the speed change).
std::vector<DiffPoly> prolongation(const VariationField& v, unsigned top) {
    std::vector<DiffPoly> images;
    images.reserve(top + 1);
    images.push_back(v_of_k(v));
    const DiffPoly rho = rho_of(v);
    for (unsigned m = 1; m <= top; ++m)
        images.push_back(total_derivative(images.back()) - rho * DiffPoly::k(m));
    return images;
}

}  // namespace

DiffPoly apply_field(const VariationField& v, const DiffPoly& p) {
    const unsigned top = p.max_order();
    const std::vector<DiffPoly> images = prolongation(v, top);
    DiffPoly out;
    for (unsigned m = 0; m <= top; ++m) {
        DiffPoly slot = p.partial(m);
        if (!slot.is_zero()) out += slot * images[m];
    }
    return out;
}

VariationField covariant_d(const VariationField& v, const VariationField& w) {
    const DiffPoly phi = phi_of(v);
    return {apply_field(v, w.f) - w.g * phi, apply_field(v, w.g) + w.f * phi};
}

VariationField bracket(const VariationField& v, const VariationField& w) {
    const DiffPoly phi_v = phi_of(v);
    const DiffPoly phi_w = phi_of(w);
    return {apply_field(v, w.f) - apply_field(w, v.f) + v.g * phi_w - w.g * phi_v,
            apply_field(v, w.g) - apply_field(w, v.g) + w.f * phi_v - v.f * phi_w};
}

ArcPreservingField bracket(const ArcPreservingField& v, const ArcPreservingField& w) {
    const VariationField br = bracket(v.field(), w.field());
    if (!rho_of(br).is_zero())
        throw std::logic_error("bracket of arc-preserving fields failed closure");
    ArcPreservingField out = lift(br.g);
    if (out.f() != br.f) throw std::logic_error("bracket tangential component is not the lift");
    return out;
}

Characteristic phi_hom(const ArcPreservingField& v) { return Characteristic(v_of_k(v.field())); }

ArcPreservingField pibar(const DiffPoly& p) { return lift(total_derivative(p)); }

ArcPreservingField rbar(const ArcPreservingField& v) {
    const DiffPoly& a = v.g();
    const DiffPoly inner = antiderivative(DiffPoly::k() * a, "rbar: D_s^{-1}(k g)");
    return lift(total_derivative(a, 2) + DiffPoly::k().pow(2) * a + DiffPoly::k(1) * inner);
}

std::vector<ArcPreservingField> pf_hierarchy(unsigned n, unsigned depth_limit) {
    if (n > depth_limit)
        throw std::invalid_argument("hierarchy depth " + std::to_string(n) + " exceeds limit " +
                                    std::to_string(depth_limit));
    std::vector<ArcPreservingField> out;
    out.reserve(n + 1);
    out.push_back(lift(DiffPoly::k(1)));
    for (unsigned j = 0; j < n; ++j) out.push_back(rbar(out.back()));
    return out;
}

Functional first_variation(const DiffPoly& lagrangian, const VariationField& v) {
    const DiffPoly weight = total_derivative(phi_of(v)) + DiffPoly::g() * v.g;
    return Functional(weight * euler_derivative(lagrangian));
}

ArcPreservingField hamiltonian_field(const DiffPoly& lagrangian) {
    return pibar(euler_derivative(lagrangian));
}

}  // namespace curveflow
