// Exact arithmetic in the rings of integers of the nine imaginary quadratic
// fields Q(sqrt(d)) with class number one, d in
// {-1,-2,-3,-7,-11,-19,-43,-67,-163}.
//
// Elements are written a + b*w where w = (1+sqrt(d))/2 for d = 1 mod 4 and
// w = sqrt(d) otherwise.  All coordinates are 64-bit signed integers with
// 128-bit intermediates; any result outside the 64-bit range throws.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qhl {

using int64 = std::int64_t;
using int128 = __int128_t;

inline constexpr std::array<int, 9> kFields = {-1, -2, -3, -7, -11, -19, -43, -67, -163};

// Identifies one of the nine class-number-one imaginary quadratic fields.
class FieldId {
 public:
  explicit FieldId(int d);
  int d() const { return d_; }
  // true when d = 1 mod 4, i.e. w = (1+sqrt(d))/2 with w^2 = w + (d-1)/4
  bool half_integral() const { return (((d_ % 4) + 4) % 4) == 1; }
  // (1-d)/4 for half-integral fields: w^2 = w - t
  int64 omega_t() const { return (1 - static_cast<int64>(d_)) / 4; }
  int64 discriminant() const { return half_integral() ? d_ : 4 * static_cast<int64>(d_); }
  bool operator==(const FieldId& o) const { return d_ == o.d_; }
  bool operator!=(const FieldId& o) const { return d_ != o.d_; }

 private:
  int d_;
};

// Overflow-checked int64 helpers.
int64 checked_i64(int128 v);

// Element a + b*w of O_K.
struct QuadInt {
  int64 a = 0;
  int64 b = 0;
  FieldId field;

  QuadInt(int64 a_, int64 b_, FieldId f) : a(a_), b(b_), field(f) {}
  QuadInt(int64 a_, int64 b_, int d) : a(a_), b(b_), field(FieldId(d)) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool operator==(const QuadInt& o) const;
  bool operator!=(const QuadInt& o) const { return !(*this == o); }
};

QuadInt operator+(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x, const QuadInt& y);
QuadInt operator*(const QuadInt& x, const QuadInt& y);
QuadInt operator-(const QuadInt& x);
QuadInt operator*(int64 k, const QuadInt& x);

// (a+b)-b*w for d = 1 mod 4, a-b*w otherwise.
QuadInt conj(const QuadInt& n);

// a^2+ab+b^2(1-d)/4 or a^2-d b^2; always >= 0, 0 iff n = 0.
int64 norm(const QuadInt& n);

// Trace n + conj(n): 2a+b or 2a.
int64 trace(const QuadInt& n);

bool is_unit(const QuadInt& n);
// Coprime to 2; equivalent to norm(n) odd in all nine fields.
bool is_odd(const QuadInt& n);

// Exact quotient m/n when n | m, decided via m*conj(n)/N(n).
std::optional<QuadInt> exact_divide(const QuadInt& m, const QuadInt& n);

// q minimizing N(m-q*n) over the four integer roundings of m/n.
QuadInt nearest_quotient(const QuadInt& m, const QuadInt& n);

// Canonical text form "a+b*w@d", e.g. "3+2*w@-1", "-1-2*w@-1".
std::string to_string(const QuadInt& n);
QuadInt parse_quadint(const std::string& text);

// Fixed (norm, a, b) ordering used everywhere a deterministic order is needed.
bool canonical_less(const QuadInt& x, const QuadInt& y);

enum class TwoSplitting { split, inert, ramified };
enum class OmegaKind { half_one_plus_sqrt_d, sqrt_d };

// Per-field constant block.
struct FieldParams {
  FieldId id;
  int64 D_K;
  OmegaKind omega;
  std::vector<QuadInt> units;
  QuadInt c_K;
  int64 norm_c_K;
  TwoSplitting two_splitting;
  // Generators of the prime ideals above 2 (one for ramified/inert, two for split).
  std::vector<QuadInt> primes_above_two;
};

const FieldParams& field_params(FieldId id);

// Exact element of K as numerator/denominator with denominator > 0,
// reduced to lowest terms.
struct QuadRat {
  QuadInt num;
  int64 den;

  QuadRat(QuadInt n, int64 d);
};

// m/n as an exact element of K (n nonzero).
QuadRat quad_div(const QuadInt& m, const QuadInt& n);

}  // namespace qhl
