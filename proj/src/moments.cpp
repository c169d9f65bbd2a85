#include "qhl/moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "qhl/euler_products.hpp"
#include "qhl/ideal.hpp"
#include "qhl/intops.hpp"
#include "qhl/lfunction.hpp"
#include "qhl/primary.hpp"

namespace qhl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx pow_c(double base, cplx e) { return std::exp(e * std::log(base)); }

}  // namespace

void validate_request(const MomentRequest& req) {
  if (req.X <= 0.0) throw std::invalid_argument("X must be positive");
  if (req.workers < 1) throw std::invalid_argument("workers must be >= 1");
  switch (req.mode) {
    case MomentMode::first_moment: {
      const double ra = std::abs(req.alpha.real());
      if (!(ra > 0.0 && ra < 0.5)) {
        throw std::invalid_argument("first moment needs 0 < |Re(alpha)| < 1/2");
      }
      break;
    }
    case MomentMode::ratios: {
      const double ra = std::abs(req.alpha.real());
      if (!(ra > 0.0 && ra < 0.5)) {
        throw std::invalid_argument("ratios need 0 < |Re(alpha)| < 1/2");
      }
      if (!(req.beta.real() > 0.0)) throw std::invalid_argument("ratios need Re(beta) > 0");
      break;
    }
    case MomentMode::logderiv: {
      if (!(req.r.real() > 0.0 && req.r.real() < 0.5)) {
        throw std::invalid_argument("log-derivative needs 0 < Re(r) < 1/2");
      }
      break;
    }
  }
  if (!req.weight.compact_support()) {
    throw std::invalid_argument("family sums need the compactly supported bump weight");
  }
}

std::vector<QuadInt> enumerate_c(FieldId field, double lo, double hi) {
  if (!(lo >= 0.0) || !(hi >= lo)) throw std::invalid_argument("bad enumeration window");
  std::vector<QuadInt> out;
  if (hi < 1.0) return out;
  const int64 hi_n = static_cast<int64>(std::floor(hi));
  const int64 box_b = isqrt64(static_cast<int64>(
                          4 * hi_n / (-field.discriminant()))) + 1;
  const int64 box_a = isqrt64(hi_n) + (field.half_integral() ? box_b / 2 + 2 : 1);
  for (int64 a = -box_a; a <= box_a; ++a) {
    for (int64 b = -box_b; b <= box_b; ++b) {
      const QuadInt x(a, b, field);
      if (x.is_zero()) continue;
      const int64 n = norm(x);
      if (!(static_cast<double>(n) > lo) || n > hi_n) continue;
      if (!is_odd(x) || !is_primary(x)) continue;
      if (!is_squarefree(x)) continue;
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

int64 squarefree_count_sieve(FieldId field, double X) {
  if (X < 1.0) return 0;
  // #odd ideals of norm <= Y via the divisor-sum identity
  // #ideals(norm n) = sum_{d | n} (D_K/d)
  auto odd_ideal_count = [&](double Y) -> int64 {
    const int64 yn = static_cast<int64>(std::floor(Y));
    int64 total = 0;
    for (int64 n = 1; n <= yn; n += 2) {
      for (int64 d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        total += kronecker(field.discriminant(), d);
        if (d * d != n) total += kronecker(field.discriminant(), n / d);
      }
    }
    return total;
  };
  // sum over odd squarefree ideals d with N(d)^2 <= X of mu(d) A(X/N(d)^2),
  // d enumerated through primary representatives
  const auto ds = enumerate_c(field, 0.0, std::sqrt(X));
  int64 total = odd_ideal_count(X);  // d = 1 term
  for (const QuadInt& d : ds) {
    if (is_unit(d)) continue;
    const int mu = mobius_element(d);
    if (mu == 0) continue;
    const double nd = static_cast<double>(norm(d));
    total += mu * odd_ideal_count(X / (nd * nd));
  }
  return total;
}

namespace {

cplx evaluate_T(const MomentRequest& req, const QuadInt& c, bool* skipped) {
  *skipped = false;
  HeckeL L(c);
  switch (req.mode) {
    case MomentMode::first_moment:
      return L.value(0.5 + req.alpha, req.eps_l).value;
    case MomentMode::ratios: {
      const LValue num = L.value(0.5 + req.alpha, req.eps_l);
      const LValue den = L.value(0.5 + req.beta, req.eps_l);
      if (std::abs(den.value) < 10.0 * den.abs_error_estimate) {
        *skipped = true;
        return {0.0, 0.0};
      }
      return num.value / den.value;
    }
    case MomentMode::logderiv:
    default: {
      const LValue den = L.value(0.5 + req.r, req.eps_l);
      if (std::abs(den.value) < 10.0 * den.abs_error_estimate) {
        *skipped = true;
        return {0.0, 0.0};
      }
      return L.derivative(0.5 + req.r) / den.value;
    }
  }
}

}  // namespace

cplx family_sum(const MomentRequest& req, FamilyStats* stats) {
  validate_request(req);
  const auto cs = enumerate_c(req.field, req.X, 2.0 * req.X);
  std::vector<cplx> values(cs.size(), cplx{0.0, 0.0});
  std::vector<char> skip(cs.size(), 0);

  auto worker = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < cs.size();
         i += static_cast<std::size_t>(req.workers)) {
      bool sk = false;
      const cplx t = evaluate_T(req, cs[i], &sk);
      if (sk) {
        skip[i] = 1;
        continue;
      }
      const double wgt = weight_value(req.weight, static_cast<double>(norm(cs[i])) / req.X);
      values[i] = t * wgt;
    }
  };
  if (req.workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < req.workers; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  cplx total{0.0, 0.0};
  int64 skipped = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    total += values[i];
    skipped += skip[i];
  }
  if (stats) {
    stats->num_c = static_cast<int64>(cs.size());
    stats->skipped_c = skipped;
  }
  return total;
}

double family_density_constant(FieldId field) {
  const double rk = residue_rK(field);
  const double a2 = a_factor_value(QuadInt{2, 0, field});
  const double zk2 = dedekind_zeta({2.0, 0.0}, field, false).real();
  return rk * a2 / zk2;
}

std::pair<cplx, cplx> main_terms_first(const MomentRequest& req) {
  const cplx alpha = req.alpha;
  const FieldId f = req.field;
  const double C = family_density_constant(f);
  const double dn = static_cast<double>(-f.discriminant()) *
                    static_cast<double>(field_params(f).norm_c_K);
  const cplx m1 = req.X * mellin_weight(req.weight, {1.0, 0.0}) * C *
                  dedekind_zeta(1.0 + 2.0 * alpha, f, true) * euler_P1(0.5 + alpha, f);
  const cplx m2 = pow_c(req.X, 1.0 - alpha) * mellin_weight(req.weight, 1.0 - alpha) *
                  pow_c(dn, -alpha) * pow_c(kTwoPi, 2.0 * alpha) *
                  (gamma_fn(0.5 - alpha) / gamma_fn(0.5 + alpha)) * C *
                  dedekind_zeta(1.0 - 2.0 * alpha, f, true) * euler_P1(0.5 - alpha, f);
  return {m1, m2};
}

std::pair<cplx, cplx> main_terms_ratios(const MomentRequest& req) {
  const cplx alpha = req.alpha, beta = req.beta;
  const FieldId f = req.field;
  const double C = family_density_constant(f);
  const double dn = static_cast<double>(-f.discriminant()) *
                    static_cast<double>(field_params(f).norm_c_K);
  const cplx m1 = req.X * mellin_weight(req.weight, {1.0, 0.0}) * C *
                  (dedekind_zeta(1.0 + 2.0 * alpha, f, true) /
                   dedekind_zeta(1.0 + alpha + beta, f, true)) *
                  euler_P2(0.5 + alpha, 0.5 + beta, f);
  const cplx m2 = pow_c(req.X, 1.0 - alpha) * mellin_weight(req.weight, 1.0 - alpha) *
                  pow_c(dn, -alpha) * pow_c(kTwoPi, 2.0 * alpha) *
                  (gamma_fn(0.5 - alpha) / gamma_fn(0.5 + alpha)) * C *
                  (dedekind_zeta(1.0 - 2.0 * alpha, f, true) /
                   dedekind_zeta(1.0 - alpha + beta, f, true)) *
                  euler_P2(0.5 - alpha, 0.5 + beta, f);
  return {m1, m2};
}

std::pair<cplx, cplx> main_terms_logderiv(const MomentRequest& req) {
  const cplx r = req.r;
  const FieldId f = req.field;
  const double C = family_density_constant(f);
  const double a2 = a_factor_value(QuadInt{2, 0, f});
  const double zk2 = dedekind_zeta({2.0, 0.0}, f, false).real();
  const double dn = static_cast<double>(-f.discriminant()) *
                    static_cast<double>(field_params(f).norm_c_K);

  const cplx m1 = req.X * mellin_weight(req.weight, {1.0, 0.0}) * C *
                  (zetaK2_logderiv(1.0 + 2.0 * r, f) + p_diag_log_sum(r, f));

  // alpha-derivative of the reflected ratios term at alpha = beta = r: only
  // the 1/zeta_K^(2)(1 - alpha + beta) factor contributes through its zero,
  // leaving -1/(r_K e_2(1)) times the remaining factors
  const double e2_at_1 = two_euler_factor({1.0, 0.0}, f).real();
  const cplx m2 = -pow_c(req.X, 1.0 - r) * mellin_weight(req.weight, 1.0 - r) * pow_c(dn, -r) *
                  pow_c(kTwoPi, 2.0 * r) * (gamma_fn(0.5 - r) / gamma_fn(0.5 + r)) *
                  (a2 / (zk2 * e2_at_1)) * dedekind_zeta(1.0 - 2.0 * r, f, true) *
                  euler_P2(0.5 - r, 0.5 + r, f);
  return {m1, m2};
}

double error_exponent(MomentMode mode, cplx alpha, cplx beta_or_r) {
  switch (mode) {
    case MomentMode::ratios: {
      const double a = alpha.real(), b = beta_or_r.real();
      return std::max({0.5, 1.0 - a - b, 1.0 - 0.5 * a - 0.5 * b, 0.5 - 0.5 * a, 0.5 - a});
    }
    case MomentMode::first_moment: {
      const double a = alpha.real();
      return std::max({0.5, 0.5 - 0.5 * a, 0.5 - a});
    }
    case MomentMode::logderiv:
    default:
      return 1.0 - 2.0 * beta_or_r.real();
  }
}

double fit_exponent(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("fit_exponent needs >= 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [X, res] : points) {
    if (!(X > 0.0) || !(res > 0.0)) throw std::invalid_argument("fit_exponent needs positive data");
    const double lx = std::log(X), ly = std::log(res);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(points.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CentralPolyFit central_value_poly(FieldId field, double X, const WeightSpec& weight) {
  if (!(X > 0.0)) throw std::invalid_argument("central_value_poly needs X > 0");
  const double h = 1e-3;

  auto sum_at = [&](double alpha, double Xv) {
    MomentRequest req;
    req.field = field;
    req.X = Xv;
    req.mode = MomentMode::first_moment;
    req.alpha = {alpha, 0.0};
    req.weight = weight;
    const auto [m1, m2] = main_terms_first(req);
    return (m1 + m2).real();
  };
  auto extrapolate = [&](double step, double Xv) {
    const double g1 = 0.5 * (sum_at(step, Xv) + sum_at(-step, Xv));
    const double g2 = 0.5 * (sum_at(2.0 * step, Xv) + sum_at(-2.0 * step, Xv));
    return (4.0 * g1 - g2) / 3.0;
  };

  std::vector<double> xs = {X / 4.0, X / 2.0, X, 2.0 * X, 4.0 * X};
  std::vector<double> f0(xs.size());
  double stability = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double a = extrapolate(h, xs[i]);
    const double b = extrapolate(h / 2.0, xs[i]);
    f0[i] = b;
    stability = std::max(stability, std::abs(a - b) / std::abs(b));
  }

  // least squares for f0/X = q0 + q1 log X
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]), y = f0[i] / xs[i];
    sx += lx;
    sy += y;
    sxx += lx * lx;
    sxy += lx * y;
  }
  const double n = static_cast<double>(xs.size());
  const double q1 = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double q0 = (sy - q1 * sx) / n;

  double max_rel = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double fit = xs[i] * (q0 + q1 * std::log(xs[i]));
    max_rel = std::max(max_rel, std::abs(fit - f0[i]) / std::abs(f0[i]));
  }
  return {q0, q1, max_rel, stability};
}

MomentReport run_moment(const MomentRequest& req) {
  validate_request(req);
  FamilyStats stats;
  const cplx lhs = family_sum(req, &stats);
  std::pair<cplx, cplx> mains;
  cplx shift_b;
  switch (req.mode) {
    case MomentMode::first_moment:
      mains = main_terms_first(req);
      shift_b = req.alpha;
      break;
    case MomentMode::ratios:
      mains = main_terms_ratios(req);
      shift_b = req.beta;
      break;
    case MomentMode::logderiv:
    default:
      mains = main_terms_logderiv(req);
      shift_b = req.r;
      break;
  }
  MomentReport rep{req,
                   lhs,
                   mains.first,
                   mains.second,
                   lhs - mains.first - mains.second,
                   error_exponent(req.mode, req.mode == MomentMode::logderiv ? req.r : req.alpha,
                                  shift_b),
                   stats.num_c,
                   stats.skipped_c,
                   0.0};
  const double denom = std::abs(mains.first + mains.second);
  rep.fitted_constant = denom > 0.0 ? std::abs(lhs) / denom : 0.0;
  return rep;
}

}  // namespace qhl
