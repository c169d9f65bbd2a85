#include <random>

#include "doctest.h"
#include "qhl/ideal.hpp"
#include "qhl/intops.hpp"
#include "qhl/primary.hpp"

using namespace qhl;

TEST_CASE("intops basics") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(1000003));
  CHECK(is_prime_u64(18446744073709551557ull));
  CHECK(!is_prime_u64(1));
  CHECK(!is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2,3,5,7

  auto f = factorize_u64(2ull * 2 * 3 * 1000003ull * 1000003ull);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<std::uint64_t, int>{2, 2});
  CHECK(f[1] == std::pair<std::uint64_t, int>{3, 1});
  CHECK(f[2] == std::pair<std::uint64_t, int>{1000003, 2});

  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(-4, 5) == 1);
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(2, 3) == -1);
  CHECK(kronecker(-43, 11) == 1);
  // periodicity of (D/.) mod |D|
  for (long long D : {-4LL, -8LL, -3LL, -7LL, -11LL}) {
    for (long long a = 1; a <= 40; ++a) {
      CHECK(kronecker(D, a) == kronecker(D, a - D * ((a % (-D)) == 0 ? 0 : 0) + (-D)));
    }
  }
  for (std::int64_t p : {5LL, 13LL, 17LL, 1000003LL}) {
    for (std::int64_t a = 1; a < 20; ++a) {
      const std::int64_t r = sqrt_mod_p(a, p);
      if (r >= 0) CHECK(mulmod_u64(r, r, p) == (std::uint64_t)(a % p));
    }
  }
}

TEST_CASE("ideal_of basics") {
  const IdealMatrix I2 = ideal_of(QuadInt(2, 0, -1));
  CHECK(I2.d1() == 2);
  CHECK(I2.c() == 0);
  CHECK(I2.d2() == 2);
  CHECK(I2.norm() == 4);

  // d=-19, n=w: norm 5 lattice containing w and w^2 = w-5
  const IdealMatrix Iw = ideal_of(QuadInt(0, 1, -19));
  CHECK(Iw.norm() == 5);
  CHECK(Iw.contains(QuadInt(0, 1, -19)));
  CHECK(Iw.contains(QuadInt(-5, 1, -19)));
  CHECK(!Iw.contains(QuadInt(1, 0, -19)));

  for (int d : kFields) {
    const IdealMatrix one = ideal_of(QuadInt(1, 0, d));
    CHECK(one.d1() == 1);
    CHECK(one.d2() == 1);
  }

  std::mt19937 rng(5);
  std::uniform_int_distribution<int64> coord(-40, 40);
  for (int d : kFields) {
    for (int i = 0; i < 30; ++i) {
      QuadInt n(coord(rng), coord(rng), d);
      if (n.is_zero()) n = QuadInt(3, 1, d);
      CHECK(ideal_of(n).norm() == norm(n));
    }
  }
}

TEST_CASE("ideal gcd and product") {
  const IdealMatrix g = ideal_gcd(ideal_of(QuadInt(4, 0, -1)), ideal_of(QuadInt(6, 0, -1)));
  CHECK(g == ideal_of(QuadInt(2, 0, -1)));

  // d=-19: coprime norms force the unit ideal
  CHECK(ideal_gcd(ideal_of(QuadInt(2, 0, -19)), ideal_of(QuadInt(0, 1, -19))).is_unit_ideal());

  // d=-1: gcd(5, -1-2i) has norm 5
  const IdealMatrix h = ideal_gcd(ideal_of(QuadInt(5, 0, -1)), ideal_of(QuadInt(-1, -2, -1)));
  CHECK(h.norm() == 5);

  std::mt19937 rng(17);
  std::uniform_int_distribution<int64> coord(-25, 25);
  for (int d : kFields) {
    for (int i = 0; i < 20; ++i) {
      QuadInt m(coord(rng), coord(rng), d), n(coord(rng), coord(rng), d);
      if (m.is_zero()) m = QuadInt(1, 2, d);
      if (n.is_zero()) n = QuadInt(2, 1, d);
      const IdealMatrix I = ideal_of(m), J = ideal_of(n);
      CHECK(ideal_mul(I, J).norm() == I.norm() * J.norm());
      const IdealMatrix G = ideal_gcd(I, J);
      CHECK(G.contains(m));
      CHECK(G.contains(n));
    }
  }
}

TEST_CASE("principal_generator inverts ideal_of") {
  // spot checks from the contract
  const QuadInt g7 = principal_generator(ideal_of(QuadInt(7, 0, -1)));
  CHECK(ideal_of(g7) == ideal_of(QuadInt(7, 0, -1)));

  const IdealMatrix h = ideal_gcd(ideal_of(QuadInt(5, 0, -1)), ideal_of(QuadInt(-1, -2, -1)));
  const QuadInt gh = principal_generator(h);
  CHECK(norm(gh) == 5);
  CHECK(ideal_of(gh) == h);

  std::mt19937 rng(23);
  std::uniform_int_distribution<int64> coord(-30, 30);
  for (int d : kFields) {
    for (int i = 0; i < 40; ++i) {
      QuadInt n(coord(rng), coord(rng), d);
      if (n.is_zero()) n = QuadInt(1, 1, d);
      if (norm(n) > 10000) continue;
      const IdealMatrix I = ideal_of(n);
      const QuadInt g = principal_generator(I);
      CHECK(ideal_of(g) == I);
      CHECK(norm(g) == norm(n));
    }
  }
}

TEST_CASE("split_prime") {
  // d=-1, p=5 splits into associates of 2+-i
  auto s5 = split_prime(5, FieldId(-1));
  REQUIRE(s5.size() == 2);
  CHECK(s5[0].norm == 5);
  CHECK(s5[1].norm == 5);
  CHECK(ideal_gcd(ideal_of(s5[0].generator), ideal_of(s5[1].generator)).is_unit_ideal());
  CHECK(ideal_of(s5[0].generator) == ideal_of(conj(s5[1].generator)));

  auto s3 = split_prime(3, FieldId(-1));
  REQUIRE(s3.size() == 1);
  CHECK(s3[0].residue_degree == 2);
  CHECK(s3[0].norm == 9);

  // d=-11, p=3 splits with generators w, conj(w)
  auto s11 = split_prime(3, FieldId(-11));
  REQUIRE(s11.size() == 2);
  CHECK(norm(s11[0].generator) == 3);
  CHECK(ideal_gcd(ideal_of(s11[0].generator), ideal_of(s11[1].generator)).is_unit_ideal());

  // d=-43, p=11 splits; generator of norm 11
  auto s43 = split_prime(11, FieldId(-43));
  REQUIRE(s43.size() == 2);
  CHECK(s43[0].norm == 11);

  // ramified odd primes: p | D_K
  auto r3 = split_prime(3, FieldId(-3));
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].ramified);
  CHECK(r3[0].norm == 3);
  auto r7 = split_prime(7, FieldId(-7));
  REQUIRE(r7.size() == 1);
  CHECK(r7[0].norm == 7);

  // p=2 per field
  CHECK(split_prime(2, FieldId(-1)).size() == 1);
  CHECK(split_prime(2, FieldId(-7)).size() == 2);
  CHECK(split_prime(2, FieldId(-3))[0].residue_degree == 2);

  // odd generators are primary
  for (int d : kFields) {
    for (int64 p : {3LL, 5LL, 7LL, 11LL, 13LL, 17LL}) {
      for (const auto& pe : split_prime(p, FieldId(d))) {
        CHECK(is_primary(pe.generator));
      }
    }
  }
}

TEST_CASE("factor_element") {
  // d=-1: -3+4i = (1+2i)^2 exactly; one prime, exponent 2
  const auto f = factor_element(QuadInt(-3, 4, -1));
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].second == 2);
  CHECK(f.factors[0].first.norm == 5);
  CHECK(!is_squarefree(QuadInt(-3, 4, -1)));

  // units factor to nothing
  CHECK(factor_element(QuadInt(0, 1, -1)).factors.empty());

  // d=-7: 2 factors as w * conj(w)
  const auto f2 = factor_element(QuadInt(2, 0, -7));
  REQUIRE(f2.factors.size() == 2);
  CHECK(f2.factors[0].first.norm == 2);

  CHECK(is_squarefree(QuadInt(3, 2, -1)));
  for (int d : kFields) CHECK(!is_squarefree(QuadInt(9, 0, d)));

  // reconstruction is checked internally; exercise a range
  std::mt19937 rng(31);
  std::uniform_int_distribution<int64> coord(-20, 20);
  for (int d : kFields) {
    for (int i = 0; i < 40; ++i) {
      QuadInt n(coord(rng), coord(rng), d);
      if (n.is_zero()) n = QuadInt(4, 1, d);
      if (norm(n) > 10000) continue;
      CHECK_NOTHROW(factor_element(n));
    }
  }
}

TEST_CASE("residue_system") {
  ResidueSystem r1(QuadInt(1, 1, -1));
  CHECK(r1.size() == 2);

  for (int d : kFields) {
    ResidueSystem r4(QuadInt(4, 0, d));
    CHECK(r4.size() == 16);
  }

  // d=-2, q = c_K = 4w: 32 classes, 16 invertible
  ResidueSystem rc(field_params(FieldId(-2)).c_K);
  CHECK(rc.size() == 32);
  CHECK(rc.invertible().size() == 16);

  // invertible counts are multiplicative over coprime moduli
  ResidueSystem ra(QuadInt(3, 0, -1));
  ResidueSystem rb(QuadInt(1, 2, -1));
  ResidueSystem rab(QuadInt(3, 0, -1) * QuadInt(1, 2, -1));
  CHECK(ra.invertible().size() * rb.invertible().size() == rab.invertible().size());
}
