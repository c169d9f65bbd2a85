#include "qhl/symbols.hpp"

#include <array>
#include <map>
#include <stdexcept>

#include "qhl/intops.hpp"
#include "qhl/primary.hpp"

namespace qhl {

namespace {

// Arithmetic in O_K/(p) for a prime element p, on canonical (x, y) residues.
class ModRing {
 public:
  explicit ModRing(const QuadInt& p) : field_(p.field), lat_(ideal_of(p)) {}

  QuadInt reduce(const QuadInt& n) const { return lat_.reduce(n); }

  QuadInt mul(const QuadInt& x, const QuadInt& y) const {
    const int128 a1 = x.a, b1 = x.b, a2 = y.a, b2 = y.b;
    int128 ra, rb;
    if (field_.half_integral()) {
      const int128 t = field_.omega_t();
      ra = a1 * a2 - t * (b1 * b2);
      rb = a1 * b2 + a2 * b1 + b1 * b2;
    } else {
      ra = a1 * a2 + static_cast<int128>(field_.d()) * (b1 * b2);
      rb = a1 * b2 + a2 * b1;
    }
    return reduce_raw(ra, rb);
  }

  QuadInt pow(QuadInt base, int64 e) const {
    QuadInt r = reduce(QuadInt{1, 0, field_});
    base = reduce(base);
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

 private:
  QuadInt reduce_raw(int128 x, int128 y) const {
    const int64 d1 = lat_.d1(), c = lat_.c(), d2 = lat_.d2();
    int128 ry = y % d2;
    if (ry < 0) ry += d2;
    const int128 k = (y - ry) / d2;
    x -= k * c;
    int128 rx = x % d1;
    if (rx < 0) rx += d1;
    return {static_cast<int64>(rx), static_cast<int64>(ry), field_};
  }

  FieldId field_;
  IdealMatrix lat_;
};

int euler_symbol(const ModRing& ring, const QuadInt& a, int64 prime_norm, FieldId f) {
  const QuadInt r = ring.pow(a, (prime_norm - 1) / 2);
  if (r.is_zero()) return 0;
  if (r == ring.reduce(QuadInt{1, 0, f})) return 1;
  if (r == ring.reduce(QuadInt{-1, 0, f})) return -1;
  throw std::logic_error("Euler criterion produced a value other than 0, +-1");
}

}  // namespace

int symbol_mod_prime(const QuadInt& a, const PrimeElem& p) {
  if (!is_odd(p.generator)) throw std::invalid_argument("symbol_mod_prime requires an odd prime");
  if (a.field != p.generator.field) throw std::invalid_argument("field tag mismatch");
  ModRing ring(p.generator);
  return euler_symbol(ring, ring.reduce(a), p.norm, a.field);
}

int symbol(const QuadInt& a, const QuadInt& n) {
  if (n.is_zero() || !is_odd(n)) throw std::invalid_argument("symbol requires odd nonzero n");
  if (a.field != n.field) throw std::invalid_argument("field tag mismatch");
  if (is_unit(n)) return 1;
  int s = 1;
  for (const auto& [pe, e] : factor_element(n).factors) {
    const int v = symbol_mod_prime(a, pe);
    if (v == 0) return 0;
    if ((e & 1) && v == -1) s = -s;
  }
  return s;
}

struct PreparedDenominator::Local {
  ModRing ring;
  int64 prime_norm;
  int parity;  // exponent mod 2
};

PreparedDenominator::PreparedDenominator(const QuadInt& n) : n_(n) {
  if (n.is_zero() || !is_odd(n)) {
    throw std::invalid_argument("PreparedDenominator requires odd nonzero n");
  }
  for (const auto& [pe, e] : factor_element(n).factors) {
    locals_.push_back(Local{ModRing(pe.generator), pe.norm, e & 1});
  }
}

PreparedDenominator::~PreparedDenominator() = default;
PreparedDenominator::PreparedDenominator(const PreparedDenominator&) = default;
PreparedDenominator::PreparedDenominator(PreparedDenominator&&) noexcept = default;

int PreparedDenominator::eval(const QuadInt& a) const {
  int s = 1;
  for (const auto& loc : locals_) {
    const int v = euler_symbol(loc.ring, loc.ring.reduce(a), loc.prime_norm, n_.field);
    if (v == 0) return 0;
    if (loc.parity && v == -1) s = -s;
  }
  return s;
}

bool field_is_euclidean(FieldId f) {
  const int d = f.d();
  return d == -1 || d == -2 || d == -3 || d == -7 || d == -11;
}

namespace {

// (u/n) for a unit u and primary odd n, by the supplementary laws.
int unit_symbol(const QuadInt& u, const QuadInt& n) {
  const int d = u.field.d();
  const QuadInt one{1, 0, u.field};
  if (u == one) return 1;
  const int neg_law = ((norm(n) - 1) / 2) & 1 ? -1 : 1;  // (-1/n)
  if (d == -1) {
    // (i/n) = (-1)^((1-a)/2) for primary n = a+bi; (-1/n) = 1 since N = 1 mod 4
    const int i_law = ((1 - n.a) / 2) % 2 == 0 ? 1 : -1;
    if (u == QuadInt{-1, 0, u.field}) return 1;
    return i_law;  // i and -i = i^3 share the value
  }
  if (d == -3) {
    // U_K = <z> with z = -w^2 = 1-w and (z/n) = (-1/n); u = z^k
    const QuadInt z{1, -1, u.field};
    QuadInt acc = one;
    for (int k = 1; k <= 6; ++k) {
      acc = acc * z;
      if (acc == u) return (k & 1) ? neg_law : 1;
    }
    throw std::logic_error("unit not a power of the generator");
  }
  // remaining fields: u = -1
  return neg_law;
}

// (lambda/n) for the primes lambda above 2, via a table over primary
// residues mod c_K.  The conductor of the quadratic character attached to
// lambda divides (4*lambda), which divides (c_K) in the three fields that
// need tables; construction cross-checks periodicity on every odd primary
// element of norm <= 600.
struct EvenPrimeTables {
  IdealMatrix lattice;
  std::vector<std::map<std::pair<int64, int64>, int>> table;
};

const EvenPrimeTables& even_tables(FieldId f) {
  static const std::map<int, EvenPrimeTables> cache = [] {
    std::map<int, EvenPrimeTables> out;
    for (int d : {-1, -2, -7}) {
      const FieldId f(d);
      const FieldParams& fp = field_params(f);
      EvenPrimeTables t{ideal_of(fp.c_K), {}};
      t.table.resize(fp.primes_above_two.size());
      const std::size_t want = ResidueSystem(fp.c_K).invertible().size() / fp.units.size();
      const int64 box = 25;
      for (int64 a = -box; a <= box; ++a) {
        for (int64 b = -box; b <= box; ++b) {
          const QuadInt n{a, b, f};
          if (n.is_zero() || !is_odd(n) || norm(n) > 600) continue;
          if (!is_primary(n)) continue;
          const QuadInt r = t.lattice.reduce(n);
          const auto key = std::pair{r.a, r.b};
          for (std::size_t i = 0; i < fp.primes_above_two.size(); ++i) {
            const int v = symbol(fp.primes_above_two[i], n);
            auto [it, inserted] = t.table[i].emplace(key, v);
            if (!inserted && it->second != v) {
              throw std::logic_error("even-prime symbol not periodic mod c_K");
            }
          }
        }
      }
      for (const auto& m : t.table) {
        if (m.size() != want) throw std::logic_error("even-prime table incomplete");
      }
      out.emplace(d, std::move(t));
    }
    return out;
  }();
  return cache.at(f.d());
}

// (lambda_index / n) for primary odd n.
int even_prime_symbol(std::size_t index, const QuadInt& n) {
  const int d = n.field.d();
  if (d == -3 || d == -11) {
    // inert 2: (2/n) = (2/N(n)) over Z
    return kronecker(2, norm(n));
  }
  const EvenPrimeTables& t = even_tables(n.field);
  const QuadInt r = t.lattice.reduce(n);
  return t.table[index].at(std::pair{r.a, r.b});
}

}  // namespace

int symbol_fast(const QuadInt& a0, const QuadInt& n0) {
  if (!field_is_euclidean(a0.field)) {
    throw std::invalid_argument("symbol_fast requires a norm-Euclidean field");
  }
  if (n0.is_zero() || !is_odd(n0)) {
    throw std::invalid_argument("symbol_fast requires odd nonzero n");
  }
  if (a0.field != n0.field) throw std::invalid_argument("field tag mismatch");

  const FieldParams& fp = field_params(a0.field);
  QuadInt a = a0;
  // (a/n) depends only on the ideal (n)
  QuadInt n = is_unit(n0) ? n0 : primary_normalize(n0).second;
  int s = 1;
  while (true) {
    if (is_unit(n)) return s;
    a = a - nearest_quotient(a, n) * n;
    if (a.is_zero()) return 0;
    for (std::size_t i = 0; i < fp.primes_above_two.size(); ++i) {
      while (true) {
        const auto q = exact_divide(a, fp.primes_above_two[i]);
        if (!q) break;
        a = *q;
        s *= even_prime_symbol(i, n);
      }
    }
    auto [u, ap] = primary_normalize(a);
    // a = conj(u) * ap since u * conj(u) = 1
    s *= unit_symbol(conj(u), n);
    if (is_unit(ap)) return s;
    if ((((norm(ap) - 1) / 2) & 1) && (((norm(n) - 1) / 2) & 1)) s = -s;
    a = n;
    n = ap;
  }
}

int chi_upper(const QuadInt& m, const QuadInt& x) {
  if (!is_odd(x)) throw std::invalid_argument("chi^(m)(x) requires odd x");
  return field_is_euclidean(m.field) ? symbol_fast(m, x) : symbol(m, x);
}

int chi_lower(const QuadInt& m, const QuadInt& x) {
  if (!is_odd(m)) throw std::invalid_argument("chi_m requires odd m");
  return field_is_euclidean(m.field) ? symbol_fast(x, m) : symbol(x, m);
}

}  // namespace qhl
