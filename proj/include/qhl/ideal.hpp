// Ideal lattices in Hermite normal form, ideal gcds, principal generators,
// prime splitting, element factorization and residue systems.
//
// An ideal is stored as the 2x2 HNF basis {(d1, 0), (c, d2)} of its lattice
// in the coordinates (x, y) <-> x + y*w.  Gcds go through lattice sums, so
// the four non-Euclidean fields share the code path with the Euclidean ones.

#pragma once

#include <utility>
#include <vector>

#include "qhl/field.hpp"

namespace qhl {

class IdealMatrix {
 public:
  // HNF of the lattice spanned by the given (x, y) generators; throws unless
  // the resulting lattice is closed under multiplication by w.
  IdealMatrix(FieldId field, const std::vector<std::pair<int64, int64>>& gens);

  FieldId field() const { return field_; }
  int64 d1() const { return d1_; }
  int64 c() const { return c_; }
  int64 d2() const { return d2_; }
  int64 norm() const;
  bool is_unit_ideal() const { return d1_ == 1 && d2_ == 1; }

  bool contains(int128 x, int128 y) const;
  bool contains(const QuadInt& n) const { return contains(n.a, n.b); }

  // Canonical representative of n mod this lattice: 0 <= x < d1, 0 <= y < d2.
  QuadInt reduce(const QuadInt& n) const;

  bool operator==(const IdealMatrix& o) const;

 private:
  FieldId field_;
  int64 d1_, c_, d2_;
};

IdealMatrix ideal_of(const QuadInt& n);
IdealMatrix ideal_gcd(const IdealMatrix& I, const IdealMatrix& J);
IdealMatrix ideal_mul(const IdealMatrix& I, const IdealMatrix& J);

// A generator g with ideal_of(g) = I, canonicalized to the primary associate
// when odd.  Throws std::logic_error if the short-vector search fails, which
// would indicate a bound bug: in these fields a generator of norm N(I) exists.
QuadInt principal_generator(const IdealMatrix& I);

struct PrimeElem {
  QuadInt generator;
  int residue_degree;  // 1 or 2
  bool ramified;
  int64 norm;
};

// Prime elements above the rational prime p, ordered canonically.
// split: two conjugate generators of norm p; inert: one of norm p^2;
// ramified: one of norm p with (p) = (gen)^2.
std::vector<PrimeElem> split_prime(int64 p, FieldId field);

struct ElemFactorization {
  QuadInt unit;
  std::vector<std::pair<PrimeElem, int>> factors;  // sorted by (norm, a, b)
};

ElemFactorization factor_element(const QuadInt& n);
bool is_squarefree(const QuadInt& n);
// 0 unless squarefree, else (-1)^(number of prime factors).
int mobius_element(const QuadInt& n);

// The N(q) residues {x + y*w : 0 <= x < d1, 0 <= y < d2} mod q.
class ResidueSystem {
 public:
  explicit ResidueSystem(const QuadInt& q);

  int64 size() const { return lattice_.norm(); }
  QuadInt at(int64 index) const;
  QuadInt reduce(const QuadInt& n) const { return lattice_.reduce(n); }
  bool is_invertible(const QuadInt& n) const;
  std::vector<QuadInt> invertible() const;
  const IdealMatrix& lattice() const { return lattice_; }

 private:
  IdealMatrix lattice_;
};

}  // namespace qhl
