#include "qhl/primary.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "qhl/ideal.hpp"

namespace qhl {

namespace {

PrimarySet build_primary_set(FieldId f) {
  const int d = f.d();
  QuadInt modulus = (d == -1) ? QuadInt{-2, 2, f}  // (1+i)^3
                              : QuadInt{4, 0, f};
  ResidueSystem rs(modulus);

  auto key = [&](const QuadInt& x) { return std::pair{x.a, x.b}; };
  std::set<std::pair<int64, int64>> cls;

  if (d == -1) {
    cls.insert(key(rs.reduce(QuadInt{1, 0, f})));
  } else {
    // squares of the invertible residues mod 4
    std::set<std::pair<int64, int64>> squares;
    for (const QuadInt& x : rs.invertible()) squares.insert(key(rs.reduce(x * x)));

    std::vector<QuadInt> tail;  // second factor of the direct product
    if (d == -2) {
      const QuadInt m1pw = rs.reduce(-(QuadInt{1, 1, f}));  // -(1+w)
      tail = {QuadInt{1, 0, f}, m1pw};
    } else {
      // cyclic group generated by 1+2w mod 4; (1+2w)^2 = 1 mod 4
      QuadInt g = rs.reduce(QuadInt{1, 2, f});
      QuadInt acc{1, 0, f};
      do {
        tail.push_back(acc);
        acc = rs.reduce(acc * g);
      } while (!(acc == QuadInt{1, 0, f}));
    }

    if (d == -3) {
      for (const QuadInt& t : tail) cls.insert(key(rs.reduce(t)));
    } else {
      for (const auto& s : squares) {
        for (const QuadInt& t : tail) {
          cls.insert(key(rs.reduce(QuadInt{s.first, s.second, f} * t)));
        }
      }
    }
  }

  PrimarySet out{f, modulus, rs.lattice(), {}};
  for (const auto& [a, b] : cls) out.classes.push_back(QuadInt{a, b, f});
  std::sort(out.classes.begin(), out.classes.end(), canonical_less);

  // |classes| = |invertible residues| / |U_K|
  const std::size_t inv = rs.invertible().size();
  const std::size_t nu = field_params(f).units.size();
  if (out.classes.size() * nu != inv) {
    throw std::logic_error("primary class count sanity check failed");
  }
  return out;
}

}  // namespace

const PrimarySet& primary_set(FieldId field) {
  static const std::map<int, PrimarySet> table = [] {
    std::map<int, PrimarySet> t;
    for (int d : kFields) t.emplace(d, build_primary_set(FieldId(d)));
    return t;
  }();
  return table.at(field.d());
}

bool is_primary(const QuadInt& n) {
  if (!is_odd(n)) throw std::invalid_argument("is_primary requires an odd element");
  const PrimarySet& ps = primary_set(n.field);
  const QuadInt r = ps.lattice.reduce(n);
  return std::binary_search(ps.classes.begin(), ps.classes.end(), r, canonical_less);
}

std::pair<QuadInt, QuadInt> primary_normalize(const QuadInt& n) {
  if (n.is_zero() || !is_odd(n)) {
    throw std::invalid_argument("primary_normalize requires an odd nonzero element");
  }
  const FieldParams& fp = field_params(n.field);
  std::pair<QuadInt, QuadInt> found{QuadInt{0, 0, n.field}, QuadInt{0, 0, n.field}};
  int hits = 0;
  for (const QuadInt& u : fp.units) {
    const QuadInt cand = u * n;
    if (is_primary(cand)) {
      found = {u, cand};
      ++hits;
    }
  }
  if (hits != 1) throw std::logic_error("primary normalization not unique");
  return found;
}

}  // namespace qhl
