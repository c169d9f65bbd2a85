#include "qhl/euler_products.hpp"

#include <array>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qhl/ideal.hpp"
#include "qhl/intops.hpp"
#include "qhl/special.hpp"

namespace qhl {

namespace {

// log(1+v) accurate for small complex v
cplx log1p_c(cplx v) {
  if (std::abs(v) > 1e-4) return std::log(1.0 + v);
  return v * (1.0 + v * (-0.5 + v * (1.0 / 3.0 + v * (-0.25 + v * 0.2))));
}

int mobius_int(int k) {
  int m = 1;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p == 0) {
      k /= p;
      if (k % p == 0) return 0;
      m = -m;
    }
  }
  if (k > 1) m = -m;
  return m;
}

std::complex<double> pow_n(double n, cplx s) { return std::exp(-s * std::log(n)); }

struct Key {
  int d;
  double re, im;
  bool operator<(const Key& o) const {
    return std::tie(d, re, im) < std::tie(o.d, o.re, o.im);
  }
};

// Dirichlet monomial c * N^{-(alpha (w+z) + beta (2w) + gamma)}
struct Mono {
  int alpha, beta, gamma;
  bool operator<(const Mono& o) const {
    return std::tie(alpha, beta, gamma) < std::tie(o.alpha, o.beta, o.gamma);
  }
};
using Poly = std::map<Mono, double>;

Poly poly_mul(const Poly& a, const Poly& b, double wz_re, double w2_re, double max_weight) {
  Poly out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      const Mono k{ka.alpha + kb.alpha, ka.beta + kb.beta, ka.gamma + kb.gamma};
      const double wgt = k.alpha * wz_re + k.beta * w2_re + k.gamma;
      if (wgt > max_weight) continue;
      out[k] += ca * cb;
    }
  }
  return out;
}

}  // namespace

const PrimeNormStream& prime_norm_stream(FieldId field, int64 bound) {
  static std::mutex mu;
  static std::map<std::pair<int, int64>, PrimeNormStream> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({field.d(), bound});
  if (it != cache.end()) return it->second;

  PrimeNormStream s{field, bound, {}};
  std::vector<bool> composite(bound + 1, false);
  for (int64 p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    for (int64 q = p * p; q <= bound; q += p) composite[q] = true;
    if (p == 2) continue;
    const int k = kronecker(field.discriminant(), p);
    if (k == 1) {
      s.entries.emplace_back(p, 2);
    } else if (k == 0) {
      s.entries.emplace_back(p, 1);
    } else if (p <= bound / p) {
      s.entries.emplace_back(p * p, 1);
    }
  }
  std::sort(s.entries.begin(), s.entries.end());
  return cache.emplace(std::pair{field.d(), bound}, std::move(s)).first->second;
}

Rational a_factor(const QuadInt& n) {
  if (n.is_zero()) throw std::invalid_argument("a_factor(0)");
  Rational r{1, 1};
  for (const auto& [pe, e] : factor_element(n).factors) {
    (void)e;
    const int128 num = static_cast<int128>(r.num) * pe.norm;
    const int128 den = static_cast<int128>(r.den) * (pe.norm + 1);
    const int64 g = std::gcd(checked_i64(num), checked_i64(den));
    r = {checked_i64(num) / g, checked_i64(den) / g};
  }
  return r;
}

double a_factor_value(const QuadInt& n) {
  const Rational r = a_factor(n);
  return static_cast<double>(r.num) / static_cast<double>(r.den);
}

cplx prime_zeta_K2(cplx s, FieldId field) {
  if (s.real() <= 1.0) throw std::invalid_argument("prime_zeta_K2 needs Re(s) > 1");
  static std::mutex mu;
  static std::map<Key, cplx> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({field.d(), s.real(), s.imag()});
    if (it != cache.end()) return it->second;
  }
  cplx acc{0.0, 0.0};
  for (int k = 1; k <= 64; ++k) {
    const int m = mobius_int(k);
    if (m == 0) continue;
    const cplx z = dedekind_zeta(static_cast<double>(k) * s, field, true);
    const cplx term = static_cast<double>(m) / k * std::log(z);
    acc += term;
    // |log zeta^(2)(ks)| <= ~4 * 3^{-k Re(s)}
    if (4.0 * std::pow(3.0, -static_cast<double>(k) * s.real()) < 1e-17) break;
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(Key{field.d(), s.real(), s.imag()}, acc);
  return acc;
}

namespace {

cplx head_zeta(const PrimeNormStream& st, cplx s) {
  cplx acc{0.0, 0.0};
  for (const auto& [N, mult] : st.entries) acc += static_cast<double>(mult) * pow_n(N, s);
  return acc;
}

cplx head_zeta_logw(const PrimeNormStream& st, cplx s) {
  cplx acc{0.0, 0.0};
  for (const auto& [N, mult] : st.entries) {
    acc += static_cast<double>(mult) * std::log(static_cast<double>(N)) * pow_n(N, s);
  }
  return acc;
}

// sum over prime norms > bound of N^{-s}
cplx prime_tail(cplx s, FieldId field, const PrimeNormStream& st) {
  return prime_zeta_K2(s, field) - head_zeta(st, s);
}

// sum over prime norms > bound of log(N) N^{-s}, via the derivative of the
// prime zeta (central difference with one Richardson step)
cplx prime_tail_logw(cplx s, FieldId field, const PrimeNormStream& st) {
  const double h = 1e-4;
  auto d = [&](double step) {
    return (prime_zeta_K2(s + step, field) - prime_zeta_K2(s - step, field)) / (2.0 * step);
  };
  const cplx d1 = d(h), d2 = d(h / 2.0);
  const cplx dP = (4.0 * d2 - d1) / 3.0;
  return -dP - head_zeta_logw(st, s);
}

}  // namespace

cplx euler_P2(cplx w, cplx z, FieldId field, double rel_eps, int64 head_bound) {
  if (w.real() <= 0.0 || (w + z).real() <= 1.0) {
    throw std::invalid_argument("euler_P2 needs Re(w) > 0 and Re(w+z) > 1");
  }
  const PrimeNormStream& st = prime_norm_stream(field, head_bound);
  const cplx wz = w + z;

  cplx log_head{0.0, 0.0};
  for (const auto& [N, mult] : st.entries) {
    const double dn = static_cast<double>(N);
    const cplx t = pow_n(dn, wz);
    const cplx r = pow_n(dn, 2.0 * w);
    const cplx factor_m1 = (t - r) / ((dn + 1.0) * (1.0 - t));
    log_head += static_cast<double>(mult) * log1p_c(factor_m1);
  }

  // tail: expand log F into Dirichlet monomials in t = N^{-(w+z)},
  // r = N^{-2w}, x = N^{-1}
  const double wz_re = wz.real(), w2_re = 2.0 * w.real();
  const double min_wgt = std::min(wz_re, w2_re) + 1.0;
  const double max_wgt = min_wgt + 6.0;
  Poly g;
  for (int i = 0; min_wgt + i <= max_wgt; ++i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    for (int m = 0;; ++m) {
      const double t_wgt = (m + 1) * wz_re + (i + 1);
      const double r_wgt = w2_re + m * wz_re + (i + 1);
      if (t_wgt > max_wgt && r_wgt > max_wgt) break;
      if (t_wgt <= max_wgt) g[Mono{m + 1, 0, i + 1}] += sign;
      if (r_wgt <= max_wgt) g[Mono{m, 1, i + 1}] -= sign;
    }
  }
  Poly logf = g;
  Poly gpow = g;
  for (int l = 2; l <= 6; ++l) {
    gpow = poly_mul(gpow, g, wz_re, w2_re, max_wgt);
    if (gpow.empty()) break;
    const double sign = (l % 2 == 0) ? -1.0 : 1.0;
    for (const auto& [k, c] : gpow) logf[k] += sign * c / l;
  }
  cplx log_tail{0.0, 0.0};
  for (const auto& [k, c] : logf) {
    if (c == 0.0) continue;
    const cplx s = static_cast<double>(k.alpha) * wz + static_cast<double>(k.beta) * (2.0 * w) +
                   static_cast<double>(k.gamma);
    log_tail += c * prime_tail(s, field, st);
  }
  (void)rel_eps;
  return std::exp(log_head + log_tail);
}

cplx euler_P1(cplx w, FieldId field, double rel_eps, int64 head_bound) {
  if (w.real() <= 0.0) throw std::invalid_argument("euler_P1 needs Re(w) > 0");
  const PrimeNormStream& st = prime_norm_stream(field, head_bound);

  cplx log_head{0.0, 0.0};
  for (const auto& [N, mult] : st.entries) {
    const double dn = static_cast<double>(N);
    const cplx v = -pow_n(dn, 2.0 * w) / (dn + 1.0);
    log_head += static_cast<double>(mult) * log1p_c(v);
  }

  // log(1 - N^{-2w}/(N+1)) = -sum_k (1/k) N^{-2wk} (N+1)^{-k},
  // (N+1)^{-k} = sum_j binom(k+j-1, j) (-1)^j N^{-k-j}
  const double w2_re = 2.0 * w.real();
  const double min_wgt = w2_re + 1.0;
  const double max_wgt = min_wgt + 6.0;
  cplx log_tail{0.0, 0.0};
  for (int k = 1; k * (w2_re + 1.0) <= max_wgt; ++k) {
    double binom = 1.0;  // binom(k+j-1, j) at j=0
    for (int j = 0;; ++j) {
      if (j > 0) binom *= static_cast<double>(k + j - 1) / j;
      const double wgt = k * (w2_re + 1.0) + j;
      if (wgt > max_wgt) break;
      const double c = -binom * ((j % 2 == 0) ? 1.0 : -1.0) / k;
      const cplx s = static_cast<double>(k) * (2.0 * w) + static_cast<double>(k + j);
      log_tail += c * prime_tail(s, field, st);
    }
  }
  (void)rel_eps;
  return std::exp(log_head + log_tail);
}

namespace {

// shared shape of the two log-weighted prime sums:
// sum_N log N * N^{-1-denom_shift} / (D(N) * (N^{1+2r}-1)) with D(N) = N or N+1
cplx log_weighted_sum(cplx r, FieldId field, int64 head_bound, bool n_plus_one) {
  const cplx e = 1.0 + 2.0 * r;
  if (e.real() <= 0.05) throw std::invalid_argument("log-weighted prime sum out of range");
  const PrimeNormStream& st = prime_norm_stream(field, head_bound);

  cplx head{0.0, 0.0};
  for (const auto& [N, mult] : st.entries) {
    const double dn = static_cast<double>(N);
    const double D = n_plus_one ? dn + 1.0 : dn;
    head += static_cast<double>(mult) * std::log(dn) /
            (D * (std::exp(e * std::log(dn)) - 1.0));
  }

  // 1/(N^{e}-1) = sum_{k>=1} N^{-ke}; 1/(N+1) = sum_{j>=0} (-1)^j N^{-1-j}
  const double min_wgt = 1.0 + e.real();
  const double max_wgt = min_wgt + 6.0;
  cplx tail{0.0, 0.0};
  for (int k = 1; k * e.real() + 1.0 <= max_wgt; ++k) {
    if (!n_plus_one) {
      tail += prime_tail_logw(static_cast<double>(k) * e + 1.0, field, st);
    } else {
      for (int j = 0; k * e.real() + 1.0 + j <= max_wgt; ++j) {
        const double c = (j % 2 == 0) ? 1.0 : -1.0;
        tail += c * prime_tail_logw(static_cast<double>(k) * e + (1.0 + j), field, st);
      }
    }
  }
  return head + tail;
}

}  // namespace

cplx prime_log_sum(cplx r, FieldId field, double rel_eps, int64 head_bound) {
  (void)rel_eps;
  return log_weighted_sum(r, field, head_bound, false);
}

cplx p_diag_log_sum(cplx r, FieldId field, double rel_eps, int64 head_bound) {
  (void)rel_eps;
  return log_weighted_sum(r, field, head_bound, true);
}

cplx zetaK2_logderiv(cplx s, FieldId field) {
  if (std::abs(s - cplx{1.0, 0.0}) < 2e-5) {
    throw std::domain_error("zetaK2_logderiv too close to the pole at 1");
  }
  const double h = std::min(1e-4, std::abs(s - cplx{1.0, 0.0}) / 8.0);
  auto f = [&](cplx z) {
    const cplx v = dedekind_zeta(z, field, true);
    if (std::abs(v) < 1e-12) throw std::domain_error("zetaK2_logderiv near a zero");
    return std::log(v);
  };
  auto d = [&](double step) { return (f(s + step) - f(s - step)) / (2.0 * step); };
  const cplx d1 = d(h), d2 = d(h / 2.0);
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace qhl
