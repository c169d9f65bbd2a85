// Quadratic residue symbols (a/n) for odd n, defined at primes by the Euler
// criterion and extended multiplicatively; the characters chi^(m) = (m/.)
// and chi_m = (./m); and a factorization-free reciprocity loop for the five
// norm-Euclidean fields.

#pragma once

#include "qhl/field.hpp"
#include "qhl/ideal.hpp"

namespace qhl {

// (a / p) in {-1, 0, +1} by the Euler criterion; p must be odd.
int symbol_mod_prime(const QuadInt& a, const PrimeElem& p);

// Multiplicative extension over the factorization of odd n; (a/u) = 1 for
// units u.  This is the reference path, valid in all nine fields.
int symbol(const QuadInt& a, const QuadInt& n);

// Repeated evaluations of (./n) with the factorization of n done once.
class PreparedDenominator {
 public:
  explicit PreparedDenominator(const QuadInt& n);
  int eval(const QuadInt& a) const;
  const QuadInt& denominator() const { return n_; }

 private:
  QuadInt n_;
  struct Local;
  std::vector<Local> locals_;

 public:
  // defined in symbols.cpp; Local holds per-prime reduction data
  ~PreparedDenominator();
  PreparedDenominator(const PreparedDenominator&);
  PreparedDenominator(PreparedDenominator&&) noexcept;
};

// Reciprocity-based evaluation, restricted to d in {-1,-2,-3,-7,-11} where
// nearest_quotient guarantees norm descent.  Agrees with symbol everywhere.
int symbol_fast(const QuadInt& a, const QuadInt& n);

bool field_is_euclidean(FieldId f);

// chi^(m)(x) = (m/x); x must be odd.
int chi_upper(const QuadInt& m, const QuadInt& x);
// chi_m(x) = (x/m); m must be odd.
int chi_lower(const QuadInt& m, const QuadInt& x);

}  // namespace qhl
