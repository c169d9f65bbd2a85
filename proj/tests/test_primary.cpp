#include "doctest.h"
#include "qhl/ideal.hpp"
#include "qhl/primary.hpp"

using namespace qhl;

TEST_CASE("primary sets") {
  // d=-3: {1, 1+2w} mod 4
  const PrimarySet& e = primary_set(FieldId(-3));
  REQUIRE(e.classes.size() == 2);
  CHECK(e.classes[0] == QuadInt(1, 0, -3));
  CHECK(e.classes[1] == QuadInt(1, 2, -3));

  // d=-1: the single class 1 mod (1+i)^3
  const PrimarySet& g = primary_set(FieldId(-1));
  REQUIRE(g.classes.size() == 1);

  // 1 is primary everywhere
  for (int d : kFields) {
    CHECK(is_primary(QuadInt(1, 0, d)));
    const PrimarySet& ps = primary_set(FieldId(d));
    // class count = invertible residues / |U_K|
    ResidueSystem rs(ps.modulus);
    CHECK(ps.classes.size() * field_params(FieldId(d)).units.size() == rs.invertible().size());
  }
}

TEST_CASE("primary_normalize uniqueness and examples") {
  // d=-1: 1+2i normalizes by u=-1
  auto [u, n] = primary_normalize(QuadInt(1, 2, -1));
  CHECK(u == QuadInt(-1, 0, -1));
  CHECK(n == QuadInt(-1, -2, -1));
  CHECK(is_primary(QuadInt(-1, -2, -1)));
  CHECK(!is_primary(QuadInt(1, 2, -1)));

  // d=-1: 3 -> -3
  CHECK(primary_normalize(QuadInt(3, 0, -1)).second == QuadInt(-3, 0, -1));

  CHECK(is_primary(QuadInt(1, 2, -3)));

  CHECK_THROWS_AS(primary_normalize(QuadInt(1, 1, -1)), std::invalid_argument);  // even
  CHECK_THROWS_AS(primary_normalize(QuadInt(0, 0, -1)), std::invalid_argument);

  // uniqueness: exactly one unit works, for every odd element in range
  for (int d : kFields) {
    const auto& units = field_params(FieldId(d)).units;
    for (int64 a = -12; a <= 12; ++a) {
      for (int64 b = -12; b <= 12; ++b) {
        const QuadInt x(a, b, d);
        if (x.is_zero() || !is_odd(x) || norm(x) > 10000) continue;
        int hits = 0;
        for (const auto& u2 : units) {
          if (is_primary(u2 * x)) ++hits;
        }
        CHECK(hits == 1);
        const QuadInt nn = primary_normalize(x).second;
        if (is_primary(x)) CHECK(nn == x);
      }
    }
  }
}

TEST_CASE("primary elements are closed under multiplication") {
  for (int d : kFields) {
    std::vector<QuadInt> prim;
    for (int64 a = -9; a <= 9; ++a) {
      for (int64 b = -9; b <= 9; ++b) {
        const QuadInt x(a, b, d);
        if (x.is_zero() || !is_odd(x)) continue;
        if (is_primary(x)) prim.push_back(x);
      }
    }
    REQUIRE(prim.size() > 4);
    for (std::size_t i = 0; i < prim.size(); i += 7) {
      for (std::size_t j = 0; j < prim.size(); j += 5) {
        CHECK(is_primary(prim[i] * prim[j]));
      }
    }
  }
}

TEST_CASE("E-primary compatibility for d=-3") {
  // For primary n with (n,6)=1 there is a unique u in the squares of the
  // unit group with u*n = +-1 mod 3, and u*n written as c + d*w^2 satisfies
  // the E-primary congruences.
  const FieldId f(-3);
  const QuadInt w(0, 1, f);
  const QuadInt w2 = w * w;
  const std::vector<QuadInt> unit_squares = {QuadInt(1, 0, f), -w, w2};
  ResidueSystem mod3(QuadInt(3, 0, f));
  const QuadInt one3 = mod3.reduce(QuadInt(1, 0, f));
  const QuadInt mone3 = mod3.reduce(QuadInt(-1, 0, f));

  auto is_e_primary = [&](const QuadInt& m) {
    // coordinates in the basis 1, w^2: m = a+b*w = (a+b) + b*w^2 ... inverted:
    // w = 1 + w^2, so a + b*w = (a+b)*1 + b*w^2
    const int64 c = m.a + m.b, dd = m.b;
    auto mod4 = [](int64 v) { return ((v % 4) + 4) % 4; };
    if (dd % 2 == 0) return mod4(c + dd) == 1;
    if (c % 2 == 0) return mod4(dd) == 1;
    return mod4(c) == 3;
  };

  int checked = 0;
  for (int64 a = -10; a <= 10; ++a) {
    for (int64 b = -10; b <= 10; ++b) {
      const QuadInt n(a, b, f);
      if (n.is_zero() || !is_odd(n) || norm(n) % 3 == 0) continue;
      if (!is_primary(n)) continue;
      int hits = 0;
      QuadInt un = n;
      for (const QuadInt& u : unit_squares) {
        const QuadInt cand = u * n;
        const QuadInt r = mod3.reduce(cand);
        if (r == one3 || r == mone3) {
          ++hits;
          un = cand;
        }
      }
      CHECK(hits == 1);
      CHECK(is_e_primary(un));
      ++checked;
    }
  }
  CHECK(checked > 20);
}
