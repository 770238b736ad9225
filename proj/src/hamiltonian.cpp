#include "curveflow/hamiltonian.hpp"

#include <stdexcept>

namespace curveflow {

DiffPoly mkdv_characteristic() {
    return DiffPoly::k(3) + DiffPoly::term(Rational(3, 2), Monomial::k(0, 2).times(Monomial::k(1)));
}

Functional h0() { return Functional(DiffPoly::term(Rational(1, 2), Monomial::k(0, 2))); }

Functional h1() {
    return Functional(DiffPoly::term(Rational(1, 2), Monomial::k(1, 2)) -
                      DiffPoly::term(Rational(1, 8), Monomial::k(0, 4)));
}

Characteristic pi0(const CovectorField& alpha) {
    return Characteristic(total_derivative(alpha.p));
}

DiffPoly apply_D(const DiffPoly& p) {
    const DiffPoly dp = total_derivative(p);
    const DiffPoly inner = antiderivative(DiffPoly::k() * dp, "D: D_s^{-1}(k D_s p)");
    return total_derivative(dp, 2) + DiffPoly::k(1) * inner + DiffPoly::k().pow(2) * dp;
}

Characteristic pi1(const CovectorField& alpha) { return Characteristic(apply_D(alpha.p)); }

Characteristic recursion(const Characteristic& a) {
    const DiffPoly& g = a.generator_image();
    antiderivative(g, "R: D_s^{-1} a");  // verifies a is exact; value unused
    const DiffPoly inner = antiderivative(DiffPoly::k() * g, "R: D_s^{-1}(k a)");
    return Characteristic(total_derivative(g, 2) + DiffPoly::k().pow(2) * g +
                          DiffPoly::k(1) * inner);
}

std::vector<Characteristic> mkdv_hierarchy(unsigned n, unsigned depth_limit) {
    if (n > depth_limit)
        throw std::invalid_argument("hierarchy depth " + std::to_string(n) + " exceeds limit " +
                                    std::to_string(depth_limit));
    std::vector<Characteristic> out;
    out.reserve(n + 1);
    out.emplace_back(mkdv_characteristic());
    for (unsigned j = 0; j < n; ++j) out.push_back(recursion(out.back()));
    return out;
}

Functional poisson_pi1(const Functional& f, const Functional& g) {
    const DiffPoly df = euler_derivative(f.representative());
    const DiffPoly dg = euler_derivative(g.representative());
    const DiffPoly dfp = total_derivative(df);
    const DiffPoly dgp = total_derivative(dg);
    const DiffPoly inner = antiderivative(DiffPoly::k() * dfp, "poisson: D_s^{-1}(k (dF)')");
    return Functional(total_derivative(dfp) * dgp + inner * DiffPoly::k() * dgp);
}

BiHamiltonianReport check_bihamiltonian() {
    BiHamiltonianReport report;
    report.c0 = pi0({euler_derivative(h1().representative())});
    report.c1 = pi1({euler_derivative(h0().representative())});
    report.c1_matches_mkdv = report.c1.generator_image() == mkdv_characteristic();
    if (report.c0 == report.c1)
        report.sigma = 1;
    else if (report.c0.generator_image() == -report.c1.generator_image())
        report.sigma = -1;
    else
        report.sigma = 0;
    return report;
}

}  // namespace curveflow
