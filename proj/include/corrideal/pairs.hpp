#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "corrideal/ideal_calculus.hpp"

namespace corrideal {

enum class pair_kind { T, O };

/// A T-pair (I, I') classifies a gauge-invariant ideal of the Toeplitz
/// algebra: I positively invariant and I c I' c J(I). An O-pair
/// additionally satisfies J_X c I' and classifies a gauge-invariant ideal
/// of O_X.
struct ideal_pair {
  ideal_set first;
  ideal_set second;
  pair_kind kind = pair_kind::T;

  friend bool operator==(const ideal_pair& a, const ideal_pair& b) {
    return a.first == b.first && a.second == b.second;
  }
  /// Lexicographic by (first, second) bitmask; the canonical listing order.
  friend auto operator<=>(const ideal_pair& a, const ideal_pair& b) {
    if (auto c = a.first <=> b.first; c != 0) return c;
    return a.second <=> b.second;
  }
};

inline constexpr unsigned default_enumeration_limit = 20;

/// The poset of all pairs of one kind, ordered by componentwise inclusion.
/// Meets (componentwise intersections) always stay inside the family, so
/// the poset is a meet-semilattice; joins are not exposed.
class pair_lattice {
 public:
  pair_lattice(std::vector<ideal_pair> pairs,
               std::vector<std::pair<std::size_t, std::size_t>> covers)
      : pairs_(std::move(pairs)), covers_(std::move(covers)) {}

  const std::vector<ideal_pair>& pairs() const { return pairs_; }

  /// Covering edges (lower index, upper index) of the inclusion order:
  /// the transitive reduction of componentwise subset.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const {
    return covers_;
  }

  std::size_t size() const { return pairs_.size(); }

  /// Index of a pair in the canonical listing.
  std::size_t index_of(const ideal_pair& p) const;

  /// Index of the meet (componentwise intersection) of pairs a and b.
  std::size_t meet(std::size_t a, std::size_t b) const;

 private:
  std::vector<ideal_pair> pairs_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Relative algebra analysis for an ideal J with compact action: the
/// tower J_0 = 0, J_{-(n+1)} = J_{-n} + J n X^{-1}(J_{-n}) and its
/// fixpoint J_{-inf}.
struct relcp_report {
  std::vector<ideal_set> tower;  // distinct entries J_0, J_{-1}, ...
  ideal_set limit;               // J_{-inf}
  ideal_pair omega;              // (J_{-inf}, J), always a T-pair
  ideal_set kernel_of_pi;        // = limit
  bool algebra_is_zero = false;  // limit = whole algebra
};

/// True iff (i, i2) satisfies the pair invariants for the kind.
bool pair_is_valid(const correspondence& x, ideal_set i, ideal_set i2,
                   pair_kind kind);

/// Enumerates all pairs of the requested kind in lexicographic order with
/// covering relations. Cost is sum over positively invariant I of
/// 2^|J(I)\I| rather than 4^n. Errors: SizeLimit.
pair_lattice enumerate_pairs(const correspondence& x, pair_kind kind,
                             unsigned limit = default_enumeration_limit);

/// Errors: NotCompactlyActing if J is not inside phi^{-1}(K(X)).
relcp_report relcp_analyze(const correspondence& x, ideal_set j);

/// The O-pair of the ideal generated by I: (closure, closure + J_X) where
/// closure is the smallest invariant ideal containing I.
ideal_pair ideal_generated_by(const correspondence& x, ideal_set i);

/// When the algebra splits as J_X + ker phi_X, invariant ideals biject
/// with O-pairs via I -> (I, I + J_X); otherwise `applies` is false and
/// `witness` holds the blocks outside J_X u ker phi_X.
struct invariant_bijection {
  bool applies = false;
  ideal_set witness;  // meaningful when !applies
  std::vector<std::pair<ideal_set, ideal_pair>> entries;
};

invariant_bijection invariant_ideal_bijection(const correspondence& x);

}  // namespace corrideal
