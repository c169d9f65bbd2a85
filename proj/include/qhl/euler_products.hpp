// Arithmetic factors of the main terms: a(n), the two-variable Euler product
// P(w,z), its one-variable limit P(w), the log-weighted prime sums, and the
// log-derivative of zeta_K^(2).
//
// All products and sums run over odd prime elements.  Each is evaluated as
// an explicit head over prime norms up to a bound plus an analytic tail:
// the log-factors are expanded into Dirichlet monomials N^{-s} and the tail
// sums of N^{-s} over prime norms are computed through the prime zeta
// function P_K(s) = sum_k mu(k)/k log zeta_K^(2)(ks).  That keeps every
// evaluation accurate near the convergence boundary (e.g. P(1/4)), where a
// direct product would need astronomically many primes.

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qhl/field.hpp"

namespace qhl {

using cplx = std::complex<double>;

// Sorted (norm, multiplicity) for odd prime elements with norm <= bound:
// split p gives (p, 2), inert p gives (p^2, 1), ramified odd p gives (p, 1).
struct PrimeNormStream {
  FieldId field;
  int64 bound;
  std::vector<std::pair<int64, int>> entries;
};

const PrimeNormStream& prime_norm_stream(FieldId field, int64 bound);

// Exact rational prod_{p | n} (1 + 1/N(p))^{-1}.
struct Rational {
  int64 num, den;
};
Rational a_factor(const QuadInt& n);
double a_factor_value(const QuadInt& n);

// Prime zeta over odd prime elements, Re(s) > 1.
cplx prime_zeta_K2(cplx s, FieldId field);

// P(w,z) = prod (1 + (1 - N^{z-w}) / ((N+1)(N^{z+w} - 1))); needs
// Re(w) > 0 and Re(w+z) > 1.
cplx euler_P2(cplx w, cplx z, FieldId field, double rel_eps = 1e-10, int64 head_bound = 20000);

// P(w) = lim_{z->inf} P(w,z) = prod (1 - 1/((N+1) N^{2w})); Re(w) > 0.
cplx euler_P1(cplx w, FieldId field, double rel_eps = 1e-10, int64 head_bound = 20000);

// sum log N / (N (N^{1+2r} - 1)); Re(r) > -1/4.
cplx prime_log_sum(cplx r, FieldId field, double rel_eps = 1e-10, int64 head_bound = 20000);

// sum log N / ((N+1)(N^{1+2r} - 1)) = d/dalpha log P(1/2+alpha, 1/2+beta) at
// alpha = beta = r; the log-derivative main term uses this variant.
cplx p_diag_log_sum(cplx r, FieldId field, double rel_eps = 1e-10, int64 head_bound = 20000);

// (zeta_K^(2))' / zeta_K^(2) by central difference with one Richardson step.
cplx zetaK2_logderiv(cplx s, FieldId field);

}  // namespace qhl
