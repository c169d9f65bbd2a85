#include <cmath>
#include <complex>
#include <numeric>

#include "doctest.h"
#include "qhl/ideal.hpp"
#include "qhl/intops.hpp"
#include "qhl/lfunction.hpp"
#include "qhl/primary.hpp"
#include "qhl/special.hpp"
#include "qhl/symbols.hpp"

using namespace qhl;

namespace {

std::vector<QuadInt> small_c(int d, int64 maxnorm) {
  std::vector<QuadInt> out;
  const int64 box = isqrt64(4 * maxnorm) + 1;
  for (int64 a = -box; a <= box; ++a) {
    for (int64 b = -box; b <= box; ++b) {
      const QuadInt x(a, b, d);
      if (x.is_zero() || norm(x) > maxnorm || !is_odd(x)) continue;
      if (!is_primary(x) || !is_squarefree(x)) continue;
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// Ideal-enumeration oracle: r(n) = sum over ideals of norm n of chi(ideal),
// ideals enumerated as primary generators (odd) plus even-ideal generators.
std::vector<int> coeff_oracle(const QuadInt& c, int64 N) {
  const FieldParams& fp = field_params(c.field);
  const QuadInt cKc = fp.c_K * c;
  std::vector<int> r(N + 1, 0);
  r[1] = 0;
  // enumerate one generator per ideal: x runs over a box; keep x primary
  // among odd elements (unique per odd ideal); even ideals contribute 0.
  const int64 box = isqrt64(4 * N) + 2;
  for (int64 a = -box; a <= box; ++a) {
    for (int64 b = -box; b <= box; ++b) {
      const QuadInt x(a, b, c.field);
      if (x.is_zero() || norm(x) > N || !is_odd(x)) continue;
      if (!is_primary(x)) continue;
      r[norm(x)] += symbol(cKc, x);
    }
  }
  return r;
}

}  // namespace

TEST_CASE("coefficient tables") {
  // d=-1, c=1: r[1] = 1, r[2] = 0 (ramified prime divides c_K)
  const QuadInt one(1, 0, -1);
  const CoeffTable t = coeff_table(one, 200);
  CHECK(t.r[1] == 1);
  CHECK(t.r[2] == 0);
  CHECK(t.conductor_norm == 32);

  // against the ideal-enumeration oracle, several fields and twists
  for (int d : {-1, -7, -19}) {
    for (const QuadInt& c : {QuadInt(1, 0, d), small_c(d, 30).back()}) {
      const CoeffTable tab = coeff_table(c, 200);
      const auto oracle = coeff_oracle(c, 200);
      for (int64 n = 1; n <= 200; ++n) CHECK(tab.r[n] == oracle[n]);
    }
  }

  // multiplicativity on coprime pairs
  const CoeffTable tg = coeff_table(QuadInt(-1, -2, -1), 5000);
  for (auto [m, n] : {std::pair<int, int>{9, 13}, {5, 49}, {25, 169}, {3, 35}}) {
    CHECK(std::gcd(m, n) == 1);
    CHECK(tg.r[m * n] == tg.r[m] * tg.r[n]);
  }

  CHECK_THROWS_AS(coeff_table(QuadInt(1, 2, -1), 10), std::invalid_argument);  // not primary
  CHECK_THROWS_AS(coeff_table(QuadInt(-3, 4, -1), 10), std::invalid_argument);  // not sq-free
}

TEST_CASE("theta decay") {
  HeckeL L(QuadInt(-1, -2, -1));
  // |theta| dominated by sum d(n) e^{-nu/Q}; must vanish for large u
  const double t_large = L.theta(40.0 * L.Q(), 1e-12);
  CHECK(std::abs(t_large) < 1e-12);
  // self-consistency: halving eps and doubling cutoff moves theta < eps
  for (double u : {1.0, 2.5, 10.0}) {
    CHECK(std::abs(L.theta(u, 1e-8) - L.theta(u, 1e-12)) < 2e-8);
  }
}

TEST_CASE("l_value agrees with the Dirichlet series at s=2") {
  for (int d : {-1, -11, -43}) {
    const auto cs = small_c(d, 40);
    int tested = 0;
    for (std::size_t i = 0; i < cs.size() && tested < 3; i += std::max<std::size_t>(cs.size() / 3, 1)) {
      HeckeL L(cs[i]);
      const LValue v = L.value({2.0, 0.0});
      const cplx direct = L.dirichlet_series({2.0, 0.0}, 200000);
      CHECK(std::abs(v.value - direct) <= 1e-8 * std::abs(direct) + 1e-10);
      ++tested;
    }
    CHECK(tested > 0);
  }
}

TEST_CASE("Schwarz reflection and conjugate symmetry") {
  HeckeL L(QuadInt(-1, 2, -1));
  const cplx s{0.8, 0.6};
  const cplx a = L.value(s).value;
  const cplx b = L.value(std::conj(s)).value;
  CHECK(std::abs(a - std::conj(b)) < 1e-9);
  const cplx da = L.derivative(s);
  const cplx db = L.derivative(std::conj(s));
  CHECK(std::abs(da - std::conj(db)) < 1e-7);
}

TEST_CASE("central differencer on a model function") {
  // entire model: f(s) = exp(s) * (s^3 - 2s + 1)
  auto f = [](cplx s) { return std::exp(s) * (s * s * s - 2.0 * s + 1.0); };
  auto fp = [](cplx s) {
    return std::exp(s) * (s * s * s - 2.0 * s + 1.0) + std::exp(s) * (3.0 * s * s - 2.0);
  };
  for (cplx s : {cplx{0.5, 0.0}, cplx{1.2, -0.7}, cplx{-0.3, 0.4}}) {
    double err = 0.0;
    const cplx d = central_diff(f, s, 1e-3, &err);
    CHECK(std::abs(d - fp(s)) < 1e-8);
  }
}

TEST_CASE("derivative cross-check against the analytic theta route") {
  // L'(s) = Q^{-s}/Gamma(s) [ I'(s) - (ln Q + psi(s)) I(s) ],
  // I(s) = int theta(u)(u^{s-1}+u^{-s}) du, I'(s) its ln(u)-weighted variant
  for (int d : {-1, -7}) {
    const auto cs = small_c(d, 25);
    const QuadInt c = cs[cs.size() / 2];
    HeckeL L(c);
    for (cplx s : {cplx{0.75, 0.0}, cplx{0.6, 0.4}}) {
      const double U = L.Q() * 26.0;
      const int panels = std::max(8, (int)std::ceil((U - 1.0) / (L.Q() / 2.0)));
      auto I = integrate_gl(
          [&](double u) {
            const double lu = std::log(u);
            return L.theta(u, 1e-12) * (std::exp((s - 1.0) * lu) + std::exp(-s * lu));
          },
          1.0, U, panels, 32);
      auto Ip = integrate_gl(
          [&](double u) {
            const double lu = std::log(u);
            return L.theta(u, 1e-12) * (std::exp((s - 1.0) * lu) - std::exp(-s * lu)) * lu;
          },
          1.0, U, panels, 32);
      const cplx analytic = std::exp(-s * std::log(L.Q())) / gamma_fn(s) *
                            (Ip - (std::log(L.Q()) + digamma_fn(s)) * I);
      const cplx numeric = L.derivative(s);
      CHECK(std::abs(analytic - numeric) < 1e-6 * (1.0 + std::abs(analytic)));
    }
  }
}

TEST_CASE("functional equation residual") {
  for (int d : {-1, -3, -67}) {
    const auto cs = small_c(d, 30);
    const QuadInt c = cs[cs.size() / 3];
    HeckeL L(c);
    CHECK(L.fe_residual({0.5, 0.0}) == 0.0);             // symmetric point, exact
    CHECK(L.fe_residual({0.6, 0.7}) <= 1e-6);            // evaluation budget
    CHECK(L.fe_residual({2.0, 0.0}) <= 1e-6);            // convergent vs reflected regime
  }
}
