#include "qhl/gauss.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "qhl/ideal.hpp"
#include "qhl/primary.hpp"
#include "qhl/symbols.hpp"

namespace qhl {

std::complex<double> additive_char(const QuadRat& z) {
  // Trace(z / sqrt(D_K)) = b/den for z = (a + b*w)/den under the fixed branch
  int64 b = z.num.b % z.den;
  if (b < 0) b += z.den;
  const double t = static_cast<double>(b) / static_cast<double>(z.den);
  const double arg = 2.0 * std::numbers::pi * t;
  return {std::cos(arg), std::sin(arg)};
}

std::complex<double> gauss_sum_bruteforce(const QuadInt& k, const CharacterSpec& chi,
                                          const QuadInt& q) {
  if (q.is_zero()) throw std::invalid_argument("gauss sum with q = 0");
  ResidueSystem rs(q);
  const std::optional<PreparedDenominator> lower =
      chi.kind == CharacterSpec::Kind::lower ? std::optional<PreparedDenominator>(chi.m)
                                             : std::nullopt;
  std::complex<double> total{0.0, 0.0};
  for (int64 i = 0; i < rs.size(); ++i) {
    const QuadInt x = rs.at(i);
    int cv;
    switch (chi.kind) {
      case CharacterSpec::Kind::trivial:
        cv = rs.is_invertible(x) ? 1 : 0;
        break;
      case CharacterSpec::Kind::lower:
        cv = lower->eval(x);
        break;
      case CharacterSpec::Kind::upper:
        // Hecke character mod q: zero off the invertible classes
        cv = rs.is_invertible(x) ? chi_upper(chi.m, x) : 0;
        break;
      default:
        cv = 0;
    }
    if (cv == 0) continue;
    total += static_cast<double>(cv) * additive_char(quad_div(k * x, q));
  }
  return total;
}

std::complex<double> gauss_sum_closed(const QuadInt& n) {
  if (!is_odd(n)) throw std::invalid_argument("gauss_sum_closed requires odd n");
  if (!is_primary(n)) throw std::invalid_argument("gauss_sum_closed requires primary n");
  const int d = n.field.d();
  const double root = std::sqrt(static_cast<double>(norm(n)));
  if (d == -1) {
    // N(n) = 1 mod 4 always; the sign is (2/N(n)): +1 for N = 1 mod 8,
    // -1 for N = 5 mod 8.  Checked exhaustively against the brute-force sum.
    return {(norm(n) % 8 == 1) ? root : -root, 0.0};
  }
  if (norm(n) % 4 == 1) return {root, 0.0};
  if (d == -2 || d == -7) return {0.0, root};
  return {0.0, -root};
}

std::complex<double> root_number_check(const QuadInt& c) {
  if (!is_odd(c) || c.is_zero()) throw std::invalid_argument("root_number_check requires odd c");
  if (!is_primary(c)) throw std::invalid_argument("root_number_check requires primary c");
  if (!is_squarefree(c)) throw std::invalid_argument("root_number_check requires square-free c");
  const QuadInt q = field_params(c.field).c_K * c;
  return gauss_sum_bruteforce(QuadInt{1, 0, c.field}, CharacterSpec::upper(q), q);
}

}  // namespace qhl
