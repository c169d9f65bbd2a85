// Family enumeration over odd square-free primary c and the three
// experiments: the one-shift ratio average, the smoothed first moment, and
// the log-derivative moment, each confronted with its predicted main terms
// M1, M2 and error exponent.

#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "qhl/field.hpp"
#include "qhl/special.hpp"

namespace qhl {

enum class MomentMode { first_moment, ratios, logderiv };

struct MomentRequest {
  FieldId field{-1};
  double X;
  MomentMode mode;
  cplx alpha{0.0, 0.0};  // first_moment, ratios
  cplx beta{0.0, 0.0};   // ratios
  cplx r{0.0, 0.0};      // logderiv
  WeightSpec weight = WeightSpec::bump();
  double eps_l = 1e-9;
  int workers = 1;
};

// Throws std::invalid_argument naming the violated theorem constraint.
void validate_request(const MomentRequest& req);

// All odd square-free primary c with lo < N(c) <= hi, sorted by (N, a, b);
// one representative (the primary one) per ideal.
std::vector<QuadInt> enumerate_c(FieldId field, double lo, double hi);

// Independent count of the same set through the Moebius sieve
// sum_d mu(d) #{odd ideals of norm <= X / N(d)^2}.
int64 squarefree_count_sieve(FieldId field, double X);

struct FamilyStats {
  int64 num_c = 0;
  int64 skipped_c = 0;
};

// sum over the support window of T(c) w(N(c)/X); deterministic for any
// worker count (fixed summation order).
cplx family_sum(const MomentRequest& req, FamilyStats* stats);

std::pair<cplx, cplx> main_terms_first(const MomentRequest& req);
std::pair<cplx, cplx> main_terms_ratios(const MomentRequest& req);
std::pair<cplx, cplx> main_terms_logderiv(const MomentRequest& req);

// E(alpha,beta), E(alpha), or 1-2Re(r) per mode.
double error_exponent(MomentMode mode, cplx alpha, cplx beta_or_r);

// Least-squares slope of log|residual| against log X.
double fit_exponent(const std::vector<std::pair<double, double>>& points);

struct CentralPolyFit {
  double q0, q1;
  double max_rel_residual;        // of the linear fit over the X grid
  double extrapolation_stability; // relative h vs h/2 disagreement
};

// alpha -> 0 limit of the first-moment main terms, Richardson-extrapolated
// over alpha = +-h, +-2h, fitted as X (q0 + q1 log X) over the grid
// {X/4, X/2, X, 2X, 4X}.
CentralPolyFit central_value_poly(FieldId field, double X, const WeightSpec& weight);

struct MomentReport {
  MomentRequest request;
  cplx lhs;
  cplx main1;
  cplx main2;
  cplx residual;
  double predicted_exponent;
  int64 num_c;
  int64 skipped_c;
  double fitted_constant;  // |lhs| / |main1 + main2|
};

MomentReport run_moment(const MomentRequest& req);

// r_K |U_K|^2 a(2) / zeta_K(2) as printed, divided by |U_K|^2: the
// coefficient that matches the family's ideal count (see the alpha = beta
// counting identity).
double family_density_constant(FieldId field);

}  // namespace qhl
