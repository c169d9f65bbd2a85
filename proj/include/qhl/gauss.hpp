// The additive character e~_K(z) = e(Trace(z/sqrt(D_K))), brute-force Gauss
// sums over residue systems, and the closed forms for g_K(chi_n) and
// g_K(chi^(c_K c)).
//
// The branch is fixed globally as sqrt(D_K) = i*sqrt(|D_K|); with that choice
// e~_K((a+b*w)/den) = e(b/den) in every field, matching the sign conventions
// of the closed forms below.

#pragma once

#include <complex>

#include "qhl/field.hpp"

namespace qhl {

std::complex<double> additive_char(const QuadRat& z);

struct CharacterSpec {
  enum class Kind { trivial, upper, lower };  // chi = 1, chi^(m), chi_m
  Kind kind;
  QuadInt m;

  static CharacterSpec trivial_char(FieldId f) {
    return {Kind::trivial, QuadInt{1, 0, f}};
  }
  static CharacterSpec upper(const QuadInt& m) { return {Kind::upper, m}; }
  static CharacterSpec lower(const QuadInt& m) { return {Kind::lower, m}; }
};

// g_K(k, chi) = sum over x mod q of chi(x) e~_K(kx/q); O(N(q)) terms.
std::complex<double> gauss_sum_bruteforce(const QuadInt& k, const CharacterSpec& chi,
                                          const QuadInt& q);

// Closed form for g_K(chi_n), n odd primary (and square-free for the value
// to be meaningful): sqrt(N) for N = 1 mod 4, otherwise -i*sqrt(N), with the
// sign flipped to +i*sqrt(N) when d in {-2, -7}.  For d = -1 the real value
// carries the extra factor (2/N(n)) = (-1)^((N-1)/4).
std::complex<double> gauss_sum_closed(const QuadInt& n);

// Brute-force g_K(chi^(c_K c)) for odd square-free primary c; the closed
// form predicts exactly sqrt(N(c_K c)), i.e. root number 1.
std::complex<double> root_number_check(const QuadInt& c);

}  // namespace qhl
