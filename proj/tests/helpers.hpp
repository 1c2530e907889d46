#ifndef SPECLAT_TESTS_HELPERS_HPP
#define SPECLAT_TESTS_HELPERS_HPP

#include <utility>
#include <vector>

#include "speclat/relation.hpp"
#include "speclat/semilattice.hpp"

// Naive reference implementations used as independent oracles. These
// deliberately work on plain bool matrices with triple loops, not on the
// packed-bitset paths they are checking.
namespace oracle {

using BoolMatrix = std::vector<std::vector<bool>>;

inline BoolMatrix from_relation(const speclat::BinaryRelation& r) {
  BoolMatrix m(static_cast<size_t>(r.size()),
               std::vector<bool>(static_cast<size_t>(r.size()), false));
  for (int a = 0; a < r.size(); ++a) {
    for (int b = 0; b < r.size(); ++b) {
      m[static_cast<size_t>(a)][static_cast<size_t>(b)] = r.contains(a, b);
    }
  }
  return m;
}

inline speclat::BinaryRelation to_relation(const speclat::Carrier& carrier,
                                           const BoolMatrix& m) {
  speclat::BinaryRelation r(carrier);
  for (size_t a = 0; a < m.size(); ++a) {
    for (size_t b = 0; b < m.size(); ++b) {
      if (m[a][b]) {
        r.set(static_cast<int>(a), static_cast<int>(b));
      }
    }
  }
  return r;
}

// The k-th of the 2^(n*n) bool matrices, bits assigned row major with the
// (0,0) cell most significant; mirrors the documented enumeration order.
inline BoolMatrix nth_matrix(int n, unsigned long k) {
  BoolMatrix m(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n)));
  int bits = n * n;
  for (int c = 0; c < bits; ++c) {
    m[static_cast<size_t>(c / n)][static_cast<size_t>(c % n)] =
        (k >> (bits - 1 - c)) & 1u;
  }
  return m;
}

inline bool is_reflexive(const BoolMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (!m[i][i]) {
      return false;
    }
  }
  return true;
}

inline bool is_symmetric(const BoolMatrix& m) {
  for (size_t a = 0; a < m.size(); ++a) {
    for (size_t b = 0; b < m.size(); ++b) {
      if (m[a][b] != m[b][a]) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_antisymmetric(const BoolMatrix& m) {
  for (size_t a = 0; a < m.size(); ++a) {
    for (size_t b = 0; b < m.size(); ++b) {
      if (a != b && m[a][b] && m[b][a]) {
        return false;
      }
    }
  }
  return true;
}

inline bool is_transitive(const BoolMatrix& m) {
  for (size_t a = 0; a < m.size(); ++a) {
    for (size_t b = 0; b < m.size(); ++b) {
      for (size_t c = 0; c < m.size(); ++c) {
        if (m[a][b] && m[b][c] && !m[a][c]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_preorder(const BoolMatrix& m) {
  return is_reflexive(m) && is_transitive(m);
}

inline bool is_partial_order(const BoolMatrix& m) {
  return is_preorder(m) && is_antisymmetric(m);
}

inline bool is_equivalence(const BoolMatrix& m) {
  return is_preorder(m) && is_symmetric(m);
}

// Condition required of a compatible preorder on top of containing the
// induced order: a r b and a1 r b imply (a v a1) r b.
inline bool joins_compatible(const speclat::FiniteSemilattice& s,
                             const BoolMatrix& m) {
  for (int a = 0; a < s.size(); ++a) {
    for (int a1 = 0; a1 < s.size(); ++a1) {
      for (int b = 0; b < s.size(); ++b) {
        if (m[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
            m[static_cast<size_t>(a1)][static_cast<size_t>(b)] &&
            !m[static_cast<size_t>(s.join(a, a1))][static_cast<size_t>(b)]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool is_compatible(const speclat::FiniteSemilattice& s, const BoolMatrix& m) {
  if (!is_preorder(m)) {
    return false;
  }
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (s.leq(a, b) && !m[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
        return false;
      }
    }
  }
  return joins_compatible(s, m);
}

inline bool is_congruence(const speclat::FiniteSemilattice& s, const BoolMatrix& m) {
  if (!is_equivalence(m)) {
    return false;
  }
  for (int a = 0; a < s.size(); ++a) {
    for (int b = 0; b < s.size(); ++b) {
      if (!m[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
        continue;
      }
      for (int c = 0; c < s.size(); ++c) {
        if (!m[static_cast<size_t>(s.join(a, c))][static_cast<size_t>(s.join(b, c))]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace oracle

namespace fx {

// Labelled chain 0 < 1 < ... < n-1.
inline speclat::FiniteSemilattice chain(int n) {
  std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::max(a, b);
    }
  }
  return speclat::FiniteSemilattice::validate(speclat::Carrier(n), table);
}

// Two-element antichain with a top: 0 and 1 incomparable, 0 v 1 = 2.
inline speclat::FiniteSemilattice vee() {
  return speclat::FiniteSemilattice::validate(
      speclat::Carrier(3), {{0, 2, 2}, {2, 1, 2}, {2, 2, 2}});
}

inline speclat::BinaryRelation relation(const speclat::Carrier& carrier,
                                        std::vector<std::pair<int, int>> pairs) {
  return speclat::BinaryRelation::from_pairs(carrier, pairs);
}

inline speclat::BinaryRelation with_identity(const speclat::Carrier& carrier,
                                             std::vector<std::pair<int, int>> pairs) {
  speclat::BinaryRelation r = speclat::BinaryRelation::identity(carrier);
  for (auto [a, b] : pairs) {
    r.set(a, b);
  }
  return r;
}

}  // namespace fx

#endif  // SPECLAT_TESTS_HELPERS_HPP
