#include "rankone/perturbation.hpp"

#include <cmath>

namespace rankone {

namespace {

void requireShiftPower(const OperatorExpr& V) {
    if (!V.asShiftPower()) {
        throw NotAnIsometryError("V must be a structural shift power");
    }
}

struct CoreQuantities {
    GeomTailSeq u;  // V*f
    double nf2, nu2, ng2;
    Complex beta;
    double c;
};

CoreQuantities coreQuantities(const OperatorExpr& V, const GeomTailSeq& f,
                              const GeomTailSeq& g) {
    requireShiftPower(V);
    CoreQuantities q;
    q.u = V.adjoint().apply(f);
    q.nf2 = normSq(f);
    q.nu2 = normSq(q.u);
    q.ng2 = normSq(g);
    q.beta = innerProduct(q.u, g);

    const double direct =
        (q.nf2 - q.nu2) * q.ng2 + std::norm(Complex(1.0) + q.beta);
    const double expanded = 1.0 + q.nf2 * q.ng2 + 2.0 * q.beta.real() +
                            std::norm(q.beta) - q.nu2 * q.ng2;
    if (std::abs(direct - expanded) > 1e-12 * std::max(1.0, std::abs(direct))) {
        throw InternalCheckError("c formulas disagree");
    }
    if (direct < -1e-13) {
        throw InternalCheckError("c is nonnegative by construction but evaluated negative");
    }
    q.c = direct < 0.0 ? 0.0 : direct;
    return q;
}

std::array<Complex, 4> coefficientsFrom(const CoreQuantities& q) {
    const Complex onePlusB = Complex(1.0) + q.beta;
    const Complex onePlusBbar = Complex(1.0) + std::conj(q.beta);
    const Complex mixed = q.nu2 + std::conj(q.beta) * q.nf2;  // ||V*f||^2 + conj(beta)||f||^2
    const Complex common = onePlusB + q.nf2 * q.ng2;
    const Complex a1 =
        q.nf2 + ((q.nu2 - q.nf2) * common - onePlusB * mixed) / q.c;
    const Complex a2 = 1.0 + (q.ng2 * mixed - onePlusBbar * common) / q.c;
    const Complex a3 =
        1.0 + (-onePlusB * onePlusBbar + (q.nu2 - q.nf2) * q.ng2) / q.c;
    const Complex a4 = (q.ng2 * onePlusBbar - onePlusBbar * q.ng2) / q.c;
    return {a1, a2, a3, a4};
}

} // namespace

OperatorExpr perturbed(const OperatorExpr& V, const GeomTailSeq& f, const GeomTailSeq& g) {
    return OperatorExpr::sum({V, OperatorExpr::rankOne(f, g)});
}

double cValue(const OperatorExpr& V, const GeomTailSeq& f, const GeomTailSeq& g) {
    return coreQuantities(V, f, g).c;
}

PerturbationDiagnostics perturbationVerdict(const OperatorExpr& V, const GeomTailSeq& f,
                                            const GeomTailSeq& g, double tol) {
    const CoreQuantities q = coreQuantities(V, f, g);
    PerturbationDiagnostics d;
    d.c = q.c;
    d.beta = q.beta;
    d.normF2 = q.nf2;
    d.normVstarF2 = q.nu2;
    d.normG2 = q.ng2;
    d.verdict = q.c > tol ? Verdict::LeftInvertible : Verdict::NotLeftInvertible;
    d.witnessNormEquality = (q.nf2 - q.nu2) * q.ng2 <= tol;
    d.witnessBetaMinusOne = std::norm(Complex(1.0) + q.beta) <= tol;
    if (d.verdict == Verdict::NotLeftInvertible &&
        !(d.witnessNormEquality && d.witnessBetaMinusOne)) {
        // c <= tol forces both nonnegative summands of c under tol.
        throw InternalCheckError("negative verdict without both witness conditions");
    }
    if (d.verdict == Verdict::LeftInvertible) {
        d.coefficients = coefficientsFrom(q);
    }
    return d;
}

OperatorExpr leftInverse(const OperatorExpr& V, const GeomTailSeq& f, const GeomTailSeq& g,
                         double tol) {
    const CoreQuantities q = coreQuantities(V, f, g);
    if (q.c <= tol) {
        throw NotLeftInvertibleError("c <= tolerance; no left inverse exists");
    }
    const Complex onePlusB = Complex(1.0) + q.beta;
    const Complex onePlusBbar = Complex(1.0) + std::conj(q.beta);
    const OperatorExpr X = OperatorExpr::sum({
        OperatorExpr::identity(),
        OperatorExpr::scale(q.ng2 / q.c, OperatorExpr::rankOne(q.u, q.u)),
        OperatorExpr::scale((q.nu2 - q.nf2) / q.c, OperatorExpr::rankOne(g, g)),
        OperatorExpr::scale(-onePlusBbar / q.c, OperatorExpr::rankOne(q.u, g)),
        OperatorExpr::scale(-onePlusB / q.c, OperatorExpr::rankOne(g, q.u)),
    });
    return OperatorExpr::compose(X, perturbed(V, f, g).adjoint());
}

std::array<Complex, 4> verificationCoefficients(const OperatorExpr& V, const GeomTailSeq& f,
                                                const GeomTailSeq& g, double tol) {
    const CoreQuantities q = coreQuantities(V, f, g);
    if (q.c <= tol) {
        throw NotLeftInvertibleError("verification coefficients need c > tolerance");
    }
    return coefficientsFrom(q);
}

NakamuraPerturbation nakamuraPerturbation(const OperatorExpr& V, const GeomTailSeq& h,
                                          Complex alpha) {
    requireShiftPower(V);
    if (std::abs(norm(h) - 1.0) > 1e-12) {
        throw NotUnitVectorError("h must be a unit vector");
    }
    if (std::abs(std::abs(alpha) - 1.0) > 1e-12) {
        throw NotUnimodularError("alpha must have modulus one");
    }
    NakamuraPerturbation out;
    out.f = scaled(alpha - Complex(1.0), h);
    out.g = V.adjoint().apply(h);
    out.op = perturbed(V, out.f, out.g);
    return out;
}

} // namespace rankone
