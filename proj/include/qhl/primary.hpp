// The distinguished "primary" generator of each odd ideal: the unique unit
// multiple lying in a fixed subgroup of residues mod 4 (mod (1+i)^3 for
// Q(i)).  Primary elements are closed under multiplication and make the
// quadratic reciprocity law sign-clean.

#pragma once

#include <utility>
#include <vector>

#include "qhl/field.hpp"
#include "qhl/ideal.hpp"

namespace qhl {

struct PrimarySet {
  FieldId field;
  QuadInt modulus;               // 4, or (1+i)^3 for d = -1
  IdealMatrix lattice;           // HNF of (modulus), cached for reductions
  std::vector<QuadInt> classes;  // canonical residue representatives, sorted
};

const PrimarySet& primary_set(FieldId field);

// n must be odd.
bool is_primary(const QuadInt& n);

// (u, u*n) with u the unique unit making u*n primary; n odd and nonzero.
std::pair<QuadInt, QuadInt> primary_normalize(const QuadInt& n);

}  // namespace qhl
