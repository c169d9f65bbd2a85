#include "qhl/field.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <numeric>

namespace qhl {

FieldId::FieldId(int d) : d_(d) {
  if (std::find(kFields.begin(), kFields.end(), d) == kFields.end()) {
    throw std::invalid_argument("d must be one of {-1,-2,-3,-7,-11,-19,-43,-67,-163}, got " +
                                std::to_string(d));
  }
}

int64 checked_i64(int128 v) {
  if (v > static_cast<int128>(std::numeric_limits<int64>::max()) ||
      v < static_cast<int128>(std::numeric_limits<int64>::min())) {
    throw std::overflow_error("integer overflow in ring arithmetic");
  }
  return static_cast<int64>(v);
}

static void require_same_field(const QuadInt& x, const QuadInt& y) {
  if (x.field != y.field) {
    throw std::invalid_argument("field tag mismatch");
  }
}

bool QuadInt::operator==(const QuadInt& o) const {
  require_same_field(*this, o);
  return a == o.a && b == o.b;
}

QuadInt operator+(const QuadInt& x, const QuadInt& y) {
  require_same_field(x, y);
  return {checked_i64(static_cast<int128>(x.a) + y.a), checked_i64(static_cast<int128>(x.b) + y.b),
          x.field};
}

QuadInt operator-(const QuadInt& x, const QuadInt& y) {
  require_same_field(x, y);
  return {checked_i64(static_cast<int128>(x.a) - y.a), checked_i64(static_cast<int128>(x.b) - y.b),
          x.field};
}

QuadInt operator-(const QuadInt& x) { return {checked_i64(-static_cast<int128>(x.a)), checked_i64(-static_cast<int128>(x.b)), x.field}; }

QuadInt operator*(const QuadInt& x, const QuadInt& y) {
  require_same_field(x, y);
  const int128 a1 = x.a, b1 = x.b, a2 = y.a, b2 = y.b;
  int128 ra, rb;
  if (x.field.half_integral()) {
    // w^2 = w - t with t = (1-d)/4
    const int128 t = x.field.omega_t();
    ra = a1 * a2 - t * (b1 * b2);
    rb = a1 * b2 + a2 * b1 + b1 * b2;
  } else {
    // w^2 = d
    ra = a1 * a2 + static_cast<int128>(x.field.d()) * (b1 * b2);
    rb = a1 * b2 + a2 * b1;
  }
  return {checked_i64(ra), checked_i64(rb), x.field};
}

QuadInt operator*(int64 k, const QuadInt& x) {
  return {checked_i64(static_cast<int128>(k) * x.a), checked_i64(static_cast<int128>(k) * x.b),
          x.field};
}

QuadInt conj(const QuadInt& n) {
  if (n.field.half_integral()) {
    return {checked_i64(static_cast<int128>(n.a) + n.b), checked_i64(-static_cast<int128>(n.b)),
            n.field};
  }
  return {n.a, checked_i64(-static_cast<int128>(n.b)), n.field};
}

int64 norm(const QuadInt& n) {
  const int128 a = n.a, b = n.b;
  int128 v;
  if (n.field.half_integral()) {
    v = a * a + a * b + b * b * n.field.omega_t();
  } else {
    v = a * a - static_cast<int128>(n.field.d()) * b * b;
  }
  return checked_i64(v);
}

int64 trace(const QuadInt& n) {
  if (n.field.half_integral()) return checked_i64(2 * static_cast<int128>(n.a) + n.b);
  return checked_i64(2 * static_cast<int128>(n.a));
}

bool is_unit(const QuadInt& n) { return norm(n) == 1; }

bool is_odd(const QuadInt& n) { return (norm(n) & 1) != 0; }

std::optional<QuadInt> exact_divide(const QuadInt& m, const QuadInt& n) {
  require_same_field(m, n);
  if (n.is_zero()) throw std::invalid_argument("exact_divide by zero");
  const QuadInt num = m * conj(n);
  const int64 nn = norm(n);
  if (num.a % nn != 0 || num.b % nn != 0) return std::nullopt;
  return QuadInt{num.a / nn, num.b / nn, m.field};
}

QuadInt nearest_quotient(const QuadInt& m, const QuadInt& n) {
  require_same_field(m, n);
  if (n.is_zero()) throw std::invalid_argument("nearest_quotient by zero");
  const QuadInt num = m * conj(n);
  const int64 nn = norm(n);
  auto fdiv = [](int64 x, int64 y) {  // floor division, y > 0
    int64 q = x / y;
    if ((x % y) != 0 && ((x < 0) != (y < 0))) --q;
    return q;
  };
  const int64 qa = fdiv(num.a, nn), qb = fdiv(num.b, nn);
  QuadInt best{0, 0, m.field};
  int64 best_norm = -1;
  for (int da = 0; da <= 1; ++da) {
    for (int db = 0; db <= 1; ++db) {
      const QuadInt q{checked_i64(static_cast<int128>(qa) + da),
                      checked_i64(static_cast<int128>(qb) + db), m.field};
      const int64 r = norm(m - q * n);
      if (best_norm < 0 || r < best_norm) {
        best_norm = r;
        best = q;
      }
    }
  }
  return best;
}

std::string to_string(const QuadInt& n) {
  std::string s = std::to_string(n.a);
  s += (n.b < 0) ? "-" : "+";
  s += std::to_string(n.b < 0 ? -n.b : n.b);
  s += "*w@";
  s += std::to_string(n.field.d());
  return s;
}

QuadInt parse_quadint(const std::string& text) {
  // form: <int><+|-><uint>*w@<int>
  const char* p = text.c_str();
  char* end = nullptr;
  errno = 0;
  const long long a = std::strtoll(p, &end, 10);
  if (end == p) throw std::invalid_argument("bad element literal: " + text);
  p = end;
  if (*p != '+' && *p != '-') throw std::invalid_argument("bad element literal: " + text);
  const int sign = (*p == '-') ? -1 : 1;
  ++p;
  if (!std::isdigit(static_cast<unsigned char>(*p)))
    throw std::invalid_argument("bad element literal: " + text);
  const long long babs = std::strtoll(p, &end, 10);
  p = end;
  if (p[0] != '*' || p[1] != 'w' || p[2] != '@')
    throw std::invalid_argument("bad element literal: " + text);
  p += 3;
  const long long d = std::strtoll(p, &end, 10);
  if (end == p || *end != '\0') throw std::invalid_argument("bad element literal: " + text);
  return QuadInt{a, sign * babs, FieldId(static_cast<int>(d))};
}

bool canonical_less(const QuadInt& x, const QuadInt& y) {
  const int64 nx = norm(x), ny = norm(y);
  if (nx != ny) return nx < ny;
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

static FieldParams make_params(int d) {
  FieldId id(d);
  FieldParams p{id, id.discriminant(), id.half_integral() ? OmegaKind::half_one_plus_sqrt_d
                                                          : OmegaKind::sqrt_d,
                {}, QuadInt{0, 0, id}, 0, TwoSplitting::inert, {}};

  const QuadInt one{1, 0, id}, w{0, 1, id};
  if (d == -1) {
    p.units = {one, -one, w, -w};
  } else if (d == -3) {
    const QuadInt w2 = w * w;  // w - 1
    p.units = {one, -one, w, -w, w2, -w2};
  } else {
    p.units = {one, -one};
  }

  if (d == -1) {
    // (1+i)^5 = -4-4i
    QuadInt c{1, 1, id};
    QuadInt acc = one;
    for (int i = 0; i < 5; ++i) acc = acc * c;
    p.c_K = acc;
  } else if (d == -2) {
    p.c_K = QuadInt{0, 4, id};  // 4*sqrt(-2)
  } else {
    p.c_K = QuadInt{8, 0, id};
  }
  p.norm_c_K = norm(p.c_K);

  const int dm8 = ((d % 8) + 8) % 8;
  if (d == -1 || d == -2) {
    p.two_splitting = TwoSplitting::ramified;
  } else if (dm8 == 1) {
    p.two_splitting = TwoSplitting::split;
  } else {
    p.two_splitting = TwoSplitting::inert;
  }

  switch (p.two_splitting) {
    case TwoSplitting::ramified:
      p.primes_above_two = {d == -1 ? QuadInt{1, 1, id} : QuadInt{0, 1, id}};
      break;
    case TwoSplitting::split:
      // d = 1 mod 8: N(w) = (1-d)/4 = 2, the two primes are w and conj(w)
      p.primes_above_two = {w, conj(w)};
      break;
    case TwoSplitting::inert:
      p.primes_above_two = {QuadInt{2, 0, id}};
      break;
  }
  return p;
}

const FieldParams& field_params(FieldId id) {
  static const std::map<int, FieldParams> table = [] {
    std::map<int, FieldParams> t;
    for (int d : kFields) t.emplace(d, make_params(d));
    return t;
  }();
  return table.at(id.d());
}

QuadRat::QuadRat(QuadInt n, int64 d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("QuadRat with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const int64 g = std::gcd(std::gcd(num.a < 0 ? -num.a : num.a, num.b < 0 ? -num.b : num.b), den);
  if (g > 1) {
    num = QuadInt{num.a / g, num.b / g, num.field};
    den /= g;
  }
}

QuadRat quad_div(const QuadInt& m, const QuadInt& n) {
  if (n.is_zero()) throw std::invalid_argument("division by zero");
  return QuadRat(m * conj(n), norm(n));
}

}  // namespace qhl
