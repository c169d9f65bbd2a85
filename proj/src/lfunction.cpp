#include "qhl/lfunction.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qhl/ideal.hpp"
#include "qhl/primary.hpp"
#include "qhl/special.hpp"
#include "qhl/symbols.hpp"

namespace qhl {

namespace {

// chi^(c_K c) at the prime element p (zero at primes above 2 and primes
// dividing c).
int chi_at_prime(const QuadInt& cKc, const PrimeElem& p) {
  if (!is_odd(p.generator)) return 0;
  return field_is_euclidean(cKc.field) ? symbol_fast(cKc, p.generator)
                                       : symbol(cKc, p.generator);
}

}  // namespace

CoeffTable coeff_table(const QuadInt& c, std::size_t N) {
  if (c.is_zero() || !is_odd(c)) throw std::invalid_argument("coeff_table: c must be odd");
  if (!is_primary(c)) throw std::invalid_argument("coeff_table: c must be primary");
  if (!is_squarefree(c)) throw std::invalid_argument("coeff_table: c must be square-free");
  if (N < 1) throw std::invalid_argument("coeff_table: N >= 1");

  const FieldParams& fp = field_params(c.field);
  const QuadInt cKc = fp.c_K * c;

  CoeffTable t{c, checked_i64(static_cast<int128>(fp.norm_c_K) * norm(c)),
               std::vector<int>(N + 1, 0)};
  t.r[1] = 1;

  // sieve rational primes <= N
  std::vector<bool> composite(N + 1, false);
  for (std::size_t p = 2; p <= N; ++p) {
    if (composite[p]) continue;
    for (std::size_t q = p * p; q <= N; q += p) composite[q] = true;
    if (p == 2) continue;  // chi vanishes at the primes above 2

    // local coefficients on norms p^j
    const auto primes = split_prime(static_cast<int64>(p), c.field);
    std::vector<int> local;  // local[j] = coefficient at norm p^j, j >= 1
    const std::size_t jmax = [&] {
      std::size_t j = 0;
      std::size_t pw = 1;
      while (pw <= N / p) {
        pw *= p;
        ++j;
      }
      return j;
    }();
    if (jmax == 0) continue;
    local.assign(jmax + 1, 0);
    local[0] = 1;
    if (primes.size() == 2) {
      const int x1 = chi_at_prime(cKc, primes[0]);
      const int x2 = chi_at_prime(cKc, primes[1]);
      for (std::size_t j = 1; j <= jmax; ++j) {
        int v = 0;
        for (std::size_t i = 0; i <= j; ++i) {
          int term = 1;
          for (std::size_t k = 0; k < i; ++k) term *= x1;
          for (std::size_t k = 0; k < j - i; ++k) term *= x2;
          v += term;
        }
        local[j] = v;
      }
    } else if (primes[0].residue_degree == 2) {
      const int x = chi_at_prime(cKc, primes[0]);
      // ideals above p have norms p^{2m}
      for (std::size_t j = 1; j <= jmax; ++j) {
        if (j % 2 == 0) {
          int v = 1;
          for (std::size_t k = 0; k < j / 2; ++k) v *= x;
          local[j] = v;
        }
      }
    } else {  // ramified
      const int x = chi_at_prime(cKc, primes[0]);
      for (std::size_t j = 1; j <= jmax; ++j) {
        int v = 1;
        for (std::size_t k = 0; k < j; ++k) v *= x;
        local[j] = v;
      }
    }

    // multiply the local factor in: n coprime to p expands to n p^j
    for (std::size_t n = 1; n <= N; ++n) {
      if (n % p == 0 || t.r[n] == 0) continue;
      std::size_t npj = n;
      for (std::size_t j = 1; j <= jmax; ++j) {
        if (npj > N / p) break;
        npj *= p;
        if (local[j] != 0) t.r[npj] = t.r[n] * local[j];
      }
    }
  }
  return t;
}

cplx central_diff(const std::function<cplx(cplx)>& f, cplx s, double h, double* err_estimate) {
  auto d = [&](double step) { return (f(s + step) - f(s - step)) / (2.0 * step); };
  const cplx d1 = d(h);
  const cplx d2 = d(h / 2.0);
  const cplx rich = (4.0 * d2 - d1) / 3.0;
  if (err_estimate) *err_estimate = std::abs(rich - d2);
  return rich;
}

HeckeL::HeckeL(const QuadInt& c)
    : c_(c),
      conductor_norm_(checked_i64(static_cast<int128>(field_params(c.field).norm_c_K) * norm(c))),
      Q_(std::sqrt(static_cast<double>(-c.field.discriminant()) *
                   static_cast<double>(conductor_norm_)) /
         (2.0 * std::numbers::pi)),
      table_(coeff_table(c, 16)) {}

const CoeffTable& HeckeL::coefficients(std::size_t upto) const {
  if (table_.r.size() <= upto) {
    table_ = coeff_table(c_, std::max(upto, 2 * (table_.r.size() - 1)));
  }
  return table_;
}

int64 HeckeL::theta_terms(double u, double eps) const {
  // |r(n)| <= d(n) <= n; tail bound sum_{n>T} n x^n with x = e^{-u/Q}
  const double x = std::exp(-u / Q_);
  if (x >= 1.0) throw std::invalid_argument("theta needs u > 0");
  const double lx = std::log(x);
  auto tail = [&](double T) {
    return std::exp((T + 1.0) * lx) * ((T + 1.0) * (1.0 - x) + x) / ((1.0 - x) * (1.0 - x));
  };
  double T = std::max(8.0, Q_ / u * std::log(1.0 / eps));
  while (tail(T) > eps) T *= 1.3;
  return static_cast<int64>(T) + 1;
}

double HeckeL::theta(double u, double eps) const {
  const int64 T = theta_terms(u, eps);
  const auto& tab = coefficients(static_cast<std::size_t>(T));
  const double rate = u / Q_;
  double acc = 0.0;
  const int64 hi = std::min<int64>(T, static_cast<int64>(tab.r.size()) - 1);
  for (int64 n = 1; n <= hi; ++n) {
    if (tab.r[n] != 0) acc += tab.r[n] * std::exp(-rate * n);
  }
  return acc;
}

cplx HeckeL::lambda_value(cplx s, double eps) const {
  // integration limit: |theta(u)| <= 2.5 e^{-u/Q} for u >= Q
  const double sigma = std::max(std::abs(s.real() - 0.5) + 0.5, 1.0);
  double U = Q_ * (std::log(2.5 / eps) + 2.0);
  for (int i = 0; i < 8; ++i) {
    const double bound = 2.5 * Q_ * std::exp(-U / Q_) * std::pow(U, sigma - 1.0 + 1e-12) * 2.0;
    if (bound < 0.5 * eps) break;
    U *= 1.25;
  }
  const double theta_eps = eps / (4.0 * U);
  auto integrand = [&](double u) {
    const double th = theta(u, theta_eps);
    const double lu = std::log(u);
    return th * (std::exp((s - 1.0) * lu) + std::exp(-s * lu));
  };
  const int panels = std::max(8, static_cast<int>(std::ceil((U - 1.0) / (Q_ / 2.0))));
  const cplx coarse = integrate_gl(integrand, 1.0, U, panels, 24);
  const cplx fine = integrate_gl(integrand, 1.0, U, panels, 48);
  // stash the quadrature discrepancy for value(); callers wanting the
  // error decompose through value()'s estimate
  quad_err_ = std::abs(fine - coarse);
  return fine;
}

LValue HeckeL::value(cplx s, double eps) const {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    throw std::domain_error("L-value at a Gamma pole");
  }
  const cplx lam = lambda_value(s, eps);
  const cplx scale = std::exp(-s * std::log(Q_)) / gamma_fn(s);
  const cplx v = lam * scale;
  const double err = (quad_err_ + eps) * std::abs(scale);
  const int64 terms = theta_terms(1.0, eps / 4.0);
  return LValue{s, v, err, terms};
}

cplx HeckeL::dirichlet_series(cplx s, std::size_t terms) const {
  const auto& tab = coefficients(terms);
  cplx acc{0.0, 0.0};
  const std::size_t hi = std::min(terms, tab.r.size() - 1);
  for (std::size_t n = 1; n <= hi; ++n) {
    if (tab.r[n] != 0) {
      acc += static_cast<double>(tab.r[n]) * std::exp(-s * std::log(static_cast<double>(n)));
    }
  }
  return acc;
}

cplx HeckeL::derivative(cplx s, double* err_estimate) const {
  return central_diff([this](cplx z) { return value(z).value; }, s, 1e-3, err_estimate);
}

double HeckeL::fe_residual(cplx s) const {
  auto lambda_side = [&](cplx z) -> cplx {
    if (z.real() >= 1.8) {
      // convergent regime: plain Dirichlet series, no reflection involved
      const auto terms = static_cast<std::size_t>(
          std::max(100000.0, std::min(400000.0, Q_ * Q_)));
      return std::exp(z * std::log(Q_)) * gamma_fn(z) * dirichlet_series(z, terms);
    }
    return lambda_value(z, 1e-10);
  };
  const cplx a = lambda_side(s);
  const cplx b = lambda_side(1.0 - s);
  return std::abs(a - b) / (std::abs(a) + std::abs(b) + 1e-300);
}

}  // namespace qhl
