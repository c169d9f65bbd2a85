#include <cmath>
#include <complex>

#include "doctest.h"
#include "qhl/gauss.hpp"
#include "qhl/ideal.hpp"
#include "qhl/intops.hpp"
#include "qhl/primary.hpp"
#include "qhl/symbols.hpp"

using namespace qhl;
using cplx = std::complex<double>;

namespace {

std::vector<QuadInt> primary_squarefree(int d, int64 maxnorm) {
  std::vector<QuadInt> out;
  const int64 box = isqrt64(4 * maxnorm) + 1;
  for (int64 a = -box; a <= box; ++a) {
    for (int64 b = -box; b <= box; ++b) {
      const QuadInt x(a, b, d);
      if (x.is_zero() || norm(x) > maxnorm || !is_odd(x)) continue;
      if (!is_primary(x) || is_unit(x) || !is_squarefree(x)) continue;
      out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace

TEST_CASE("additive character") {
  // z = 0 -> 1, and any z in O_K -> 1 (integer trace exponent)
  for (int d : kFields) {
    CHECK(additive_char(QuadRat(QuadInt(0, 0, d), 1)) == cplx{1.0, 0.0});
    CHECK(std::abs(additive_char(QuadRat(QuadInt(3, -2, d), 1)) - cplx{1.0, 0.0}) < 1e-15);
  }
  // d=-1, z = 1/(1+i) = (1-i)/2: exponent -1/2, value -1, modulus 1
  const cplx v = additive_char(quad_div(QuadInt(1, 0, -1), QuadInt(1, 1, -1)));
  CHECK(std::abs(std::abs(v) - 1.0) < 1e-15);
  CHECK(std::abs(v - cplx{-1.0, 0.0}) < 1e-15);
}

TEST_CASE("gauss sum basics") {
  // trivial character, k=1, q an odd prime: Ramanujan value -1
  for (int d : {-1, -3, -19}) {
    const QuadInt q = split_prime(d == -1 ? 5 : 7, FieldId(d))[0].generator;
    const cplx g = gauss_sum_bruteforce(QuadInt(1, 0, d), CharacterSpec::trivial_char(FieldId(d)), q);
    CHECK(std::abs(g - cplx{-1.0, 0.0}) < 1e-9);
  }
  // k = 0 kills non-principal characters
  for (int d : {-1, -7}) {
    const QuadInt n = primary_squarefree(d, 40)[1];
    const cplx g = gauss_sum_bruteforce(QuadInt(0, 0, d), CharacterSpec::lower(n), n);
    CHECK(std::abs(g) < 1e-9);
  }
  // |g_K(chi_n)| = sqrt(N(n)) for primitive quadratic chi_n
  for (int d : {-1, -2, -11, -43}) {
    for (const QuadInt& n : primary_squarefree(d, 60)) {
      const cplx g = gauss_sum_bruteforce(QuadInt(1, 0, d), CharacterSpec::lower(n), n);
      CHECK(std::abs(std::abs(g) - std::sqrt(static_cast<double>(norm(n)))) < 1e-8);
    }
  }
}

TEST_CASE("closed form matches brute force") {
  for (int d : kFields) {
    int checked = 0;
    for (const QuadInt& n : primary_squarefree(d, 120)) {
      const cplx brute = gauss_sum_bruteforce(QuadInt(1, 0, d), CharacterSpec::lower(n), n);
      const cplx closed = gauss_sum_closed(n);
      CHECK(std::abs(brute - closed) <= 1e-6 * std::sqrt(static_cast<double>(norm(n))));
      ++checked;
    }
    CHECK(checked >= 3);
  }
}

TEST_CASE("twisting by units") {
  // g_K(chi_{un}) = (u/n) g_K(chi_n)
  for (int d : {-1, -3, -7}) {
    const auto elems = primary_squarefree(d, 50);
    for (std::size_t i = 0; i < elems.size() && i < 4; ++i) {
      const QuadInt& n = elems[i];
      const cplx gn = gauss_sum_bruteforce(QuadInt(1, 0, d), CharacterSpec::lower(n), n);
      for (const QuadInt& u : field_params(FieldId(d)).units) {
        const QuadInt un = u * n;
        const cplx gun = gauss_sum_bruteforce(QuadInt(1, 0, d), CharacterSpec::lower(un), un);
        const double su = symbol(u, n);
        CHECK(std::abs(gun - su * gn) < 1e-8);
      }
    }
  }
}

TEST_CASE("coprime multiplicativity with reciprocity sign") {
  // g_K(chi_{n1 n2}) = (n2/n1)(n1/n2) g_K(chi_{n1}) g_K(chi_{n2})
  for (int d : {-1, -11}) {
    const auto elems = primary_squarefree(d, 40);
    int checked = 0;
    for (std::size_t i = 0; i < elems.size() && checked < 6; ++i) {
      for (std::size_t j = i + 1; j < elems.size() && checked < 6; ++j) {
        const QuadInt&n1 = elems[i], &n2 = elems[j];
        if (!ideal_gcd(ideal_of(n1), ideal_of(n2)).is_unit_ideal()) continue;
        const QuadInt n12 = n1 * n2;
        const cplx lhs =
            gauss_sum_bruteforce(QuadInt(1, 0, d), CharacterSpec::lower(n12), n12);
        const cplx rhs = static_cast<double>(symbol(n2, n1) * symbol(n1, n2)) *
                         gauss_sum_bruteforce(QuadInt(1, 0, d), CharacterSpec::lower(n1), n1) *
                         gauss_sum_bruteforce(QuadInt(1, 0, d), CharacterSpec::lower(n2), n2);
        CHECK(std::abs(lhs - rhs) < 1e-7);
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("root number is 1") {
  // d=-11, c=1: g = sqrt(64) = 8; d=-1, c=1: sqrt(32)
  const cplx g11 = root_number_check(QuadInt(1, 0, -11));
  CHECK(std::abs(g11 - cplx{8.0, 0.0}) < 1e-8);
  const cplx g1 = root_number_check(QuadInt(1, 0, -1));
  CHECK(std::abs(g1 - cplx{std::sqrt(32.0), 0.0}) < 1e-8);

  // d=-2: primary prime of norm 3
  const QuadInt c3 = primary_normalize(split_prime(3, FieldId(-2))[0].generator).second;
  const cplx g2 = root_number_check(c3);
  CHECK(std::abs(g2 - cplx{std::sqrt(96.0), 0.0}) < 1e-8);

  // a couple of composite square-free c in other fields
  for (int d : {-7, -43}) {
    for (const QuadInt& c : primary_squarefree(d, 30)) {
      const cplx g = root_number_check(c);
      const double expect = std::sqrt(static_cast<double>(field_params(FieldId(d)).norm_c_K) *
                                      static_cast<double>(norm(c)));
      CHECK(std::abs(g - cplx{expect, 0.0}) <= 1e-6 * expect);
    }
  }
}
