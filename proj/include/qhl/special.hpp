// Complex special functions and smooth weights: Gamma/digamma, Hurwitz and
// Riemann zeta, Kronecker-symbol Dirichlet L over Q, Dedekind zeta of the
// nine fields (optionally with the Euler factors above 2 removed), the
// residue r_K, and the two test weights with their Mellin transforms.
//
// Everything targets <= 1e-10 relative error in the harness range so that
// moment residuals at the 1e-2 level are never numerical artifacts.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qhl/field.hpp"

namespace qhl {

using cplx = std::complex<double>;

// Relative error <= 1e-12 for Re(s) >= 1/2; reflection formula below that.
cplx gamma_fn(cplx s);
cplx log_gamma(cplx s);  // principal branch, Re(s) > 0
cplx digamma_fn(cplx s);

// Euler-Maclaurin; a in (0, 1]; s != 1.
cplx hurwitz_zeta(cplx s, double a);
cplx riemann_zeta(cplx s);

// L(s, (D/.)) via |D|^{-s} sum_a (D/a) zeta(s, a/|D|); D a fundamental
// discriminant (or 1, giving zeta).
cplx dirichlet_l_rational(cplx s, long long D);

// zeta_K = zeta * L(., (D_K/.)); remove_two multiplies by
// prod_{p | 2} (1 - N(p)^{-s}).
cplx dedekind_zeta(cplx s, FieldId field, bool remove_two);

// prod_{p | 2} (1 - N(p)^{-s}), the factor removed by remove_two.
cplx two_euler_factor(cplx s, FieldId field);

// Numeric limit (s-1) zeta_K(s) at s -> 1, Richardson-extrapolated; equals
// 2*pi / (|U_K| sqrt(|D_K|)).
double residue_rK(FieldId field);

// Gauss-Legendre nodes/weights on [-1, 1], cached per n.
const std::vector<std::pair<double, double>>& gl_rule(int n);

// Composite Gauss-Legendre of f over [a, b] with `panels` panels of `nodes`
// points each.
cplx integrate_gl(const std::function<cplx(double)>& f, double a, double b, int panels,
                  int nodes);

struct WeightSpec {
  enum class Kind { gamma_weight, bump };  // t^2 e^{-t}, or smooth on (1,2)
  Kind kind;

  static WeightSpec gamma_weight() { return {Kind::gamma_weight}; }
  static WeightSpec bump() { return {Kind::bump}; }
  bool compact_support() const { return kind == Kind::bump; }
};

double weight_value(const WeightSpec& w, double t);

// Mellin transform: exactly Gamma(s+2) for the gamma weight (Re(s) > -2);
// quadrature on (1,2) with absolute error <= 1e-12 for the bump.
cplx mellin_weight(const WeightSpec& w, cplx s);

}  // namespace qhl
