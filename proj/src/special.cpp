#include "qhl/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "qhl/intops.hpp"

namespace qhl {

namespace {

constexpr double kPi = std::numbers::pi;

// B_2 .. B_30 as exact rationals.
constexpr double kBernoulli[] = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

// Spouge approximation, a = 13, long double accumulation.
constexpr int kSpougeA = 13;

const long double* spouge_coeffs() {
  static const long double* coeffs = [] {
    static long double c[kSpougeA];
    c[0] = sqrtl(2.0L * std::numbers::pi_v<long double>);
    long double fact = 1.0L;
    for (int k = 1; k < kSpougeA; ++k) {
      if (k > 1) fact *= -(k - 1);
      c[k] = powl((long double)(kSpougeA - k), k - 0.5L) * expl((long double)(kSpougeA - k)) / fact;
    }
    return c;
  }();
  return coeffs;
}

std::complex<long double> to_ld(cplx z) { return {(long double)z.real(), (long double)z.imag()}; }
cplx to_d(std::complex<long double> z) { return {(double)z.real(), (double)z.imag()}; }

cplx gamma_core(cplx s) {
  // Re(s) >= 1/2 assumed
  const long double a = kSpougeA;
  const std::complex<long double> z = to_ld(s) - 1.0L;
  const long double* c = spouge_coeffs();
  std::complex<long double> sum = c[0];
  for (int k = 1; k < kSpougeA; ++k) sum += c[k] / (z + (long double)k);
  const std::complex<long double> t = z + a;
  const std::complex<long double> r = std::exp((z + 0.5L) * std::log(t) - t) * sum;
  return to_d(r);
}

}  // namespace

cplx gamma_fn(cplx s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    throw std::domain_error("gamma pole at non-positive integer");
  }
  if (s.real() >= 0.5) return gamma_core(s);
  // reflection: Gamma(s) = pi / (sin(pi s) Gamma(1-s))
  const cplx sinpis = std::sin(kPi * s);
  return kPi / (sinpis * gamma_core(1.0 - s));
}

cplx log_gamma(cplx s) {
  if (s.real() <= 0.0) throw std::domain_error("log_gamma needs Re(s) > 0");
  cplx shift{0.0, 0.0};
  while (std::abs(s) < 20.0) {
    shift -= std::log(s);
    s += 1.0;
  }
  cplx r = (s - 0.5) * std::log(s) - s + 0.5 * std::log(2.0 * kPi);
  const cplx s2 = 1.0 / (s * s);
  cplx term = 1.0 / s;
  for (int j = 1; j <= 8; ++j) {
    r += kBernoulli[j - 1] / (2.0 * j * (2.0 * j - 1.0)) * term;
    term *= s2;
  }
  return r + shift;
}

cplx digamma_fn(cplx s) {
  if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real())) {
    throw std::domain_error("digamma pole");
  }
  cplx acc{0.0, 0.0};
  if (s.real() < 0.5) {  // psi(s) = psi(1-s) - pi cot(pi s)
    acc -= kPi / std::tan(kPi * s);
    s = 1.0 - s;
  }
  while (std::abs(s) < 16.0) {
    acc -= 1.0 / s;
    s += 1.0;
  }
  cplx r = std::log(s) - 0.5 / s;
  const cplx s2 = 1.0 / (s * s);
  cplx term = s2;
  for (int j = 1; j <= 8; ++j) {
    r -= kBernoulli[j - 1] / (2.0 * j) * term;
    term *= s2;
  }
  return acc + r;
}

cplx hurwitz_zeta(cplx s, double a) {
  if (a <= 0.0 || a > 1.0) throw std::invalid_argument("hurwitz_zeta needs a in (0,1]");
  if (s == cplx{1.0, 0.0}) throw std::domain_error("hurwitz_zeta pole at s = 1");
  const int M = std::max({24, (int)std::ceil(std::abs(s.imag())) + 12,
                          (int)std::ceil(8.0 - s.real())});
  constexpr int J = 14;
  cplx head{0.0, 0.0};
  for (int k = 0; k < M; ++k) head += std::exp(-s * std::log(a + k));
  const double x = a + M;
  const cplx lx = std::log(x);
  const cplx tail_int = std::exp((1.0 - s) * lx) / (s - 1.0);
  const cplx tail_half = 0.5 * std::exp(-s * lx);
  cplx em{0.0, 0.0};
  cplx poch = s;          // s(s+1)...(s+2j-2) at j=1
  double fact = 2.0;      // (2j)!
  cplx xpow = std::exp(-(s + 1.0) * lx);
  for (int j = 1; j <= J; ++j) {
    em += kBernoulli[j - 1] / fact * poch * xpow;
    poch *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    xpow /= x * x;
  }
  return head + tail_int + tail_half + em;
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

cplx dirichlet_l_rational(cplx s, long long D) {
  if (D == 1) return riemann_zeta(s);
  const long long q = D < 0 ? -D : D;
  cplx sum{0.0, 0.0};
  for (long long a = 1; a <= q; ++a) {
    const int chi = kronecker(D, a);
    if (chi == 0) continue;
    sum += static_cast<double>(chi) * hurwitz_zeta(s, static_cast<double>(a) / q);
  }
  return std::exp(-s * std::log(static_cast<double>(q))) * sum;
}

cplx two_euler_factor(cplx s, FieldId field) {
  const auto split = field_params(field).two_splitting;
  const cplx half = std::exp(-s * std::log(2.0));
  switch (split) {
    case TwoSplitting::split: {
      const cplx f = 1.0 - half;
      return f * f;
    }
    case TwoSplitting::inert:
      return 1.0 - half * half;
    case TwoSplitting::ramified:
    default:
      return 1.0 - half;
  }
}

cplx dedekind_zeta(cplx s, FieldId field, bool remove_two) {
  cplx v = riemann_zeta(s) * dirichlet_l_rational(s, field.discriminant());
  if (remove_two) v *= two_euler_factor(s, field);
  return v;
}

double residue_rK(FieldId field) {
  const double h = 1e-6;
  auto f = [&](double eps) {
    return (dedekind_zeta(cplx{1.0 + eps, 0.0}, field, false) * eps).real();
  };
  return 2.0 * f(h) - f(2.0 * h);
}

const std::vector<std::pair<double, double>>& gl_rule(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<double, double>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::pair<double, double>> rule(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule[i] = {x, 2.0 / ((1.0 - x * x) * pp * pp)};
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

cplx integrate_gl(const std::function<cplx(double)>& f, double a, double b, int panels,
                  int nodes) {
  const auto& rule = gl_rule(nodes);
  cplx total{0.0, 0.0};
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h, half = 0.5 * h;
    cplx acc{0.0, 0.0};
    for (const auto& [x, w] : rule) acc += w * f(mid + half * x);
    total += half * acc;
  }
  return total;
}

double weight_value(const WeightSpec& w, double t) {
  switch (w.kind) {
    case WeightSpec::Kind::gamma_weight:
      return t > 0.0 ? t * t * std::exp(-t) : 0.0;
    case WeightSpec::Kind::bump:
    default: {
      if (t <= 1.0 || t >= 2.0) return 0.0;
      return std::exp(-1.0 / ((t - 1.0) * (2.0 - t)));
    }
  }
}

cplx mellin_weight(const WeightSpec& w, cplx s) {
  if (w.kind == WeightSpec::Kind::gamma_weight) {
    if (s.real() <= -2.0) {
      throw std::domain_error("gamma-weight Mellin transform needs Re(s) > -2");
    }
    return gamma_fn(s + 2.0);
  }
  auto f = [&](double t) { return weight_value(w, t) * std::exp((s - 1.0) * std::log(t)); };
  const cplx coarse = integrate_gl(f, 1.0, 2.0, 8, 32);
  const cplx fine = integrate_gl(f, 1.0, 2.0, 16, 32);
  if (std::abs(fine - coarse) > 1e-12) {
    const cplx finer = integrate_gl(f, 1.0, 2.0, 32, 48);
    if (std::abs(finer - fine) > 1e-12) {
      throw std::runtime_error("bump Mellin quadrature failed to converge");
    }
    return finer;
  }
  return fine;
}

}  // namespace qhl
