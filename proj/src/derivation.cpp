#include "curveflow/derivation.hpp"

namespace curveflow {

DiffPoly apply(const Characteristic& a, const DiffPoly& p) {
    DiffPoly out;
    DiffPoly prolonged = a.generator_image();  // a^(m), starting at m = 0
    const unsigned top = p.max_order();
    for (unsigned m = 0; m <= top; ++m) {
        DiffPoly slot = p.partial(m);
        if (!slot.is_zero()) out += slot * prolonged;
        if (m < top) prolonged = total_derivative(prolonged);
    }
    return out;
}

Characteristic commutator(const Characteristic& a, const Characteristic& b) {
    return Characteristic(apply(a, b.generator_image()) - apply(b, a.generator_image()));
}

Functional apply_to_functional(const Characteristic& a, const Functional& f) {
    return Functional(a.generator_image() * euler_derivative(f.representative()));
}

}  // namespace curveflow
