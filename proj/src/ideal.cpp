#include "qhl/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "qhl/intops.hpp"
#include "qhl/primary.hpp"

namespace qhl {

namespace {

// Coordinates of w*(x + y*w).
std::pair<int128, int128> omega_mul(FieldId f, int128 x, int128 y) {
  if (f.half_integral()) return {-static_cast<int128>(f.omega_t()) * y, x + y};
  return {static_cast<int128>(f.d()) * y, x};
}

int128 xgcd128(int128 a, int128 b, int128& s, int128& t) {
  int128 old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    int128 q = old_r / r;
    int128 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

int128 floormod128(int128 x, int128 m) {
  int128 r = x % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

IdealMatrix::IdealMatrix(FieldId field, const std::vector<std::pair<int64, int64>>& gens)
    : field_(field), d1_(0), c_(0), d2_(0) {
  // HNF by column reduction on the y-coordinates first.
  std::vector<std::pair<int128, int128>> v;
  for (auto& g : gens) {
    if (g.first != 0 || g.second != 0) v.emplace_back(g.first, g.second);
  }
  if (v.empty()) throw std::invalid_argument("zero ideal");

  // combo with y = gcd of all y's
  int128 cx = 0, cy = 0;
  for (auto& g : v) {
    if (g.second == 0) continue;
    if (cy == 0) {
      cx = g.first;
      cy = g.second;
      if (cy < 0) {
        cx = -cx;
        cy = -cy;
      }
      continue;
    }
    int128 s, t;
    int128 g2 = xgcd128(cy, g.second, s, t);
    int128 nx = s * cx + t * g.first;
    cx = nx;
    cy = g2;
  }
  if (cy == 0) throw std::invalid_argument("rank-deficient ideal lattice");

  int128 g1 = 0;
  for (auto& g : v) {
    int128 k = g.second / cy;  // exact: cy divides every y
    int128 x0 = g.first - k * cx;
    if (x0 < 0) x0 = -x0;
    int128 s, t;
    g1 = (g1 == 0) ? x0 : xgcd128(g1, x0, s, t);
  }
  if (g1 == 0) throw std::invalid_argument("rank-deficient ideal lattice");

  d1_ = checked_i64(g1);
  d2_ = checked_i64(cy);
  c_ = checked_i64(floormod128(cx, g1));

  for (auto base : {std::pair<int128, int128>{d1_, 0}, std::pair<int128, int128>{c_, d2_}}) {
    auto [wx, wy] = omega_mul(field_, base.first, base.second);
    if (!contains(wx, wy)) throw std::invalid_argument("lattice not closed under w");
  }
}

int64 IdealMatrix::norm() const { return checked_i64(static_cast<int128>(d1_) * d2_); }

bool IdealMatrix::contains(int128 x, int128 y) const {
  if (y % d2_ != 0) return false;
  int128 k = y / d2_;
  return (x - k * c_) % d1_ == 0;
}

QuadInt IdealMatrix::reduce(const QuadInt& n) const {
  int128 x = n.a, y = n.b;
  int128 ry = floormod128(y, d2_);
  int128 k = (y - ry) / d2_;
  x -= k * c_;
  int128 rx = floormod128(x, d1_);
  return {checked_i64(rx), checked_i64(ry), field_};
}

bool IdealMatrix::operator==(const IdealMatrix& o) const {
  return field_ == o.field_ && d1_ == o.d1_ && c_ == o.c_ && d2_ == o.d2_;
}

IdealMatrix ideal_of(const QuadInt& n) {
  if (n.is_zero()) throw std::invalid_argument("ideal_of(0)");
  auto [wx, wy] = omega_mul(n.field, n.a, n.b);
  return IdealMatrix(n.field, {{n.a, n.b}, {checked_i64(wx), checked_i64(wy)}});
}

IdealMatrix ideal_gcd(const IdealMatrix& I, const IdealMatrix& J) {
  if (I.field() != J.field()) throw std::invalid_argument("field mismatch in ideal_gcd");
  return IdealMatrix(I.field(), {{I.d1(), 0}, {I.c(), I.d2()}, {J.d1(), 0}, {J.c(), J.d2()}});
}

IdealMatrix ideal_mul(const IdealMatrix& I, const IdealMatrix& J) {
  if (I.field() != J.field()) throw std::invalid_argument("field mismatch in ideal_mul");
  FieldId f = I.field();
  const QuadInt b1{I.d1(), 0, f}, b2{I.c(), I.d2(), f};
  const QuadInt c1{J.d1(), 0, f}, c2{J.c(), J.d2(), f};
  std::vector<std::pair<int64, int64>> gens;
  for (const QuadInt& x : {b1 * c1, b1 * c2, b2 * c1, b2 * c2}) gens.emplace_back(x.a, x.b);
  return IdealMatrix(f, gens);
}

QuadInt principal_generator(const IdealMatrix& I) {
  const FieldId f = I.field();
  const int64 N = I.norm();
  const int64 absD = -f.discriminant();

  std::vector<QuadInt> hits;
  if (f.half_integral()) {
    // 4N = (2a+b)^2 + |D| b^2
    const int64 bmax = isqrt64(4 * N / absD);
    for (int64 b = -bmax; b <= bmax; ++b) {
      const int128 rem = 4 * static_cast<int128>(N) - static_cast<int128>(absD) * b * b;
      if (rem < 0) continue;
      const int64 u = isqrt64(checked_i64(rem));
      if (static_cast<int128>(u) * u != rem) continue;
      for (int64 su : {u, -u}) {
        if ((su - b) % 2 != 0) continue;
        const QuadInt g{(su - b) / 2, b, f};
        if (norm(g) == N && I.contains(g)) hits.push_back(g);
        if (u == 0) break;
      }
    }
  } else {
    const int64 absd = -f.d();
    const int64 bmax = isqrt64(N / absd);
    for (int64 b = -bmax; b <= bmax; ++b) {
      const int64 rem = N - absd * b * b;
      const int64 a = isqrt64(rem);
      if (a * a != rem) continue;
      for (int64 sa : {a, -a}) {
        const QuadInt g{sa, b, f};
        if (norm(g) == N && I.contains(g)) hits.push_back(g);
        if (a == 0) break;
      }
    }
  }
  if (hits.empty()) {
    throw std::logic_error("principal_generator: no short vector of norm N(I) found");
  }
  QuadInt g = hits.front();
  if (is_odd(g)) return primary_normalize(g).second;
  // deterministic associate for even generators
  QuadInt best = g;
  for (const QuadInt& u : field_params(f).units) {
    const QuadInt cand = u * g;
    if (std::pair{cand.a, cand.b} < std::pair{best.a, best.b}) best = cand;
  }
  return best;
}

std::vector<PrimeElem> split_prime(int64 p, FieldId field) {
  if (p < 2) throw std::invalid_argument("split_prime needs p >= 2");
  const FieldParams& fp = field_params(field);
  std::vector<PrimeElem> out;

  if (p == 2) {
    switch (fp.two_splitting) {
      case TwoSplitting::ramified:
        out.push_back({fp.primes_above_two[0], 1, true, 2});
        break;
      case TwoSplitting::split:
        out.push_back({fp.primes_above_two[0], 1, false, 2});
        out.push_back({fp.primes_above_two[1], 1, false, 2});
        break;
      case TwoSplitting::inert:
        out.push_back({QuadInt{2, 0, field}, 2, false, 4});
        break;
    }
  } else {
    const int k = kronecker(field.discriminant(), p);
    if (k == -1) {
      out.push_back({primary_normalize(QuadInt{p, 0, field}).second, 2, false,
                     checked_i64(static_cast<int128>(p) * p)});
    } else {
      // root r of the minimal polynomial of w mod p
      int64 r;
      if (field.half_integral()) {
        // x^2 - x + t = 0: x = (1 + s)/2, s^2 = 1 - 4t = d
        const int64 s = (k == 0) ? 0 : sqrt_mod_p(((field.d() % p) + p) % p, p);
        if (s < 0) throw std::logic_error("split_prime: missing square root for split prime");
        r = ((1 + s) % p) * ((p + 1) / 2) % p;  // (1+s)/2 mod p
      } else {
        const int64 s = (k == 0) ? 0 : sqrt_mod_p(((field.d() % p) + p) % p, p);
        if (s < 0) throw std::logic_error("split_prime: missing square root for split prime");
        r = s;
      }
      auto make = [&](int64 root) {
        const QuadInt gen0{-root, 1, field};  // w - root
        const QuadInt wgen = QuadInt{0, 1, field} * gen0;
        IdealMatrix full(field, {{p, 0}, {0, p}, {gen0.a, gen0.b}, {wgen.a, wgen.b}});
        return principal_generator(full);
      };
      if (k == 0) {
        out.push_back({make(r), 1, true, p});
      } else {
        const QuadInt g1 = make(r);
        const QuadInt g2 = primary_normalize(conj(g1)).second;
        out.push_back({g1, 1, false, p});
        out.push_back({g2, 1, false, p});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PrimeElem& x, const PrimeElem& y) {
    return canonical_less(x.generator, y.generator);
  });
  return out;
}

ElemFactorization factor_element(const QuadInt& n) {
  if (n.is_zero()) throw std::invalid_argument("factor_element(0)");
  ElemFactorization result{QuadInt{1, 0, n.field}, {}};
  QuadInt m = n;
  const auto rat = factorize_u64(static_cast<std::uint64_t>(norm(n)));
  for (const auto& [p, e] : rat) {
    (void)e;
    for (const PrimeElem& pe : split_prime(static_cast<int64>(p), n.field)) {
      int count = 0;
      while (true) {
        auto q = exact_divide(m, pe.generator);
        if (!q) break;
        m = *q;
        ++count;
      }
      if (count > 0) result.factors.emplace_back(pe, count);
    }
  }
  if (!is_unit(m)) throw std::logic_error("factor_element: non-unit cofactor left over");
  result.unit = m;
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& x, const auto& y) {
              return canonical_less(x.first.generator, y.first.generator);
            });
  // reconstruction identity check
  QuadInt rebuilt = result.unit;
  for (const auto& [pe, e] : result.factors) {
    for (int i = 0; i < e; ++i) rebuilt = rebuilt * pe.generator;
  }
  if (rebuilt != n) throw std::logic_error("factor_element: reconstruction mismatch");
  return result;
}

bool is_squarefree(const QuadInt& n) {
  const auto f = factor_element(n);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const auto& pe) { return pe.second == 1; });
}

int mobius_element(const QuadInt& n) {
  const auto f = factor_element(n);
  for (const auto& pe : f.factors) {
    if (pe.second > 1) return 0;
  }
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

ResidueSystem::ResidueSystem(const QuadInt& q) : lattice_(ideal_of(q)) {}

QuadInt ResidueSystem::at(int64 index) const {
  if (index < 0 || index >= size()) throw std::out_of_range("residue index");
  return {index % lattice_.d1(), index / lattice_.d1(), lattice_.field()};
}

bool ResidueSystem::is_invertible(const QuadInt& n) const {
  const QuadInt r = reduce(n);
  if (r.is_zero()) return lattice_.is_unit_ideal();
  return ideal_gcd(ideal_of(r), lattice_).is_unit_ideal();
}

std::vector<QuadInt> ResidueSystem::invertible() const {
  std::vector<QuadInt> out;
  for (int64 i = 0; i < size(); ++i) {
    const QuadInt x = at(i);
    if (is_invertible(x)) out.push_back(x);
  }
  return out;
}

}  // namespace qhl
