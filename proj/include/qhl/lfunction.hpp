// L(s, chi^(c_K c)) for odd square-free primary c: Dirichlet coefficients
// over ideals by norm, completed-L evaluation through the theta integral
//   Lambda(s) = int_1^inf theta(u) (u^{s-1} + u^{-s}) du,
//   theta(u) = sum_n r(n) exp(-n u / Q),  Q = sqrt(|D_K| N(c_K c)) / (2 pi),
// central-difference derivatives, and functional-equation residuals.
//
// The symmetric integral uses W = 1 (the root-number lemma); fe_residual
// makes that checkable by evaluating the Re(s) >= 1.8 side through the
// plain Dirichlet series instead.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qhl/field.hpp"

namespace qhl {

using cplx = std::complex<double>;

struct CoeffTable {
  QuadInt c;
  int64 conductor_norm;        // N(c_K c)
  std::vector<int> r;          // r[n], n <= r.size()-1; r[0] unused
};

// Multiplicative build from Euler data at each rational prime.
CoeffTable coeff_table(const QuadInt& c, std::size_t N);

struct LValue {
  cplx s;
  cplx value;
  double abs_error_estimate;
  int64 terms_used;
};

// Central difference with one Richardson step; the same differencer the
// derivative path uses, exposed so tests can drive it with model functions.
cplx central_diff(const std::function<cplx(cplx)>& f, cplx s, double h, double* err_estimate);

class HeckeL {
 public:
  // c odd, square-free, primary
  explicit HeckeL(const QuadInt& c);

  const QuadInt& c() const { return c_; }
  double Q() const { return Q_; }
  int64 conductor_norm() const { return conductor_norm_; }

  // theta(u) with tail below eps; u > 0 (small u is increasingly expensive)
  double theta(double u, double eps) const;

  LValue value(cplx s, double eps = 1e-9) const;
  // completed Lambda(s) by the symmetric theta integral
  cplx lambda_value(cplx s, double eps = 1e-9) const;
  // truncated sum_{n<=terms} r(n) n^{-s}
  cplx dirichlet_series(cplx s, std::size_t terms) const;

  cplx derivative(cplx s, double* err_estimate = nullptr) const;
  double fe_residual(cplx s) const;

  // ensure the table covers n <= upto, then expose it
  const CoeffTable& coefficients(std::size_t upto) const;

 private:
  int64 theta_terms(double u, double eps) const;

  QuadInt c_;
  int64 conductor_norm_;
  double Q_;
  mutable CoeffTable table_;  // grown on demand; one HeckeL per worker thread
  mutable double quad_err_ = 0.0;
};

}  // namespace qhl
