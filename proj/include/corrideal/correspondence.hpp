#pragma once

#include <string>
#include <vector>

#include "corrideal/block_algebra.hpp"
#include "corrideal/extnat.hpp"
#include "corrideal/ideal_set.hpp"

namespace corrideal {

/// Sparse description of a correspondence, as supplied by a caller or a
/// parsed input document. validate_correspondence turns it into an
/// immutable correspondence after checking every invariant.
struct raw_correspondence {
  struct action_entry {
    std::string on;   // module block acted on
    std::string by;   // algebra block acting
    ext_nat mult;
  };

  std::vector<block> blocks;
  std::vector<std::pair<std::string, ext_nat>> fullness;  // label -> m
  std::vector<action_entry> action;
};

/// A C*-correspondence over a multi-matrix algebra, stored up to
/// isomorphism as the triple (d, m, M):
///
///   d_i  block dimensions of the base algebra A = (+)_i M_{d_i}(C);
///   m_j  fullness: the number of standard columns in the right-module
///        component X_j = X.e_j (m_j = 0 means the block is absent from
///        the module's range ideal);
///   M[j][i]  multiplicity of algebra block i in the left representation
///        on X_j; infinity encodes a non-compact action.
///
/// The left action on X_j is a representation of A on C^{m_j}, so
/// sum_i M[j][i] d_i <= m_j, with the slack acting as the degenerate part.
/// Left actions need not be injective or nondegenerate and modules need
/// not be full; all of those degenerate cases are representable.
class correspondence {
 public:
  const block_algebra& algebra() const { return algebra_; }
  unsigned size() const { return algebra_.size(); }

  ext_nat fullness(unsigned j) const { return fullness_[j]; }
  ext_nat action(unsigned j, unsigned i) const {
    return action_[static_cast<std::size_t>(j) * size() + i];
  }

  friend bool operator==(const correspondence& a, const correspondence& b);

 private:
  friend correspondence validate_correspondence(const raw_correspondence&);

  block_algebra algebra_;
  std::vector<ext_nat> fullness_;
  std::vector<ext_nat> action_;  // row-major, row = module block
};

/// Validates a raw description and freezes it into a correspondence.
/// Errors: DuplicateLabel, UnknownLabel, FullnessViolation,
/// NegativeOrMalformedNumber, SizeLimit (more than 31 blocks).
correspondence validate_correspondence(const raw_correspondence& raw);

/// The annihilator I^perp, the largest ideal with I n I^perp = 0; on a
/// multi-matrix algebra this is the complementary block set.
ideal_set perp(const correspondence& x, ideal_set i);

}  // namespace corrideal
