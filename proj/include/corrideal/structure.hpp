#pragma once

#include <cstdint>
#include <vector>

#include "corrideal/constructions.hpp"

namespace corrideal {

/// Explicit matrix-block structure O_X = (+)_v M_{size(v)}(C), one summand
/// per sink block (a block with all-zero column of M).
struct matrix_block_structure {
  struct summand {
    unsigned block = 0;       // sink block index
    std::uint64_t size = 0;   // matrix size, >= 1
  };
  std::vector<summand> summands;  // sorted by block index
};

/// Computes the matrix summands of O_X for all-finite data with nilpotent
/// action matrix. The size at a sink v is the column count of the block-v
/// component of the finite tensor-power tower:
///   size(v) = d_v + sum_{k>=0} (M^k m)_v,  (M x)_v = sum_j M[v][j] x_j.
/// Errors: NotRowFinite (an infinite entry in m or M), NotAcyclic.
matrix_block_structure ox_structure(const correspondence& x);

/// Desk check that the gauge-invariant ideal count matches the structure:
/// |O-pairs| must equal 2^|summands|, every ideal of a finite direct sum
/// of matrix algebras being a partial sum of summands.
struct crosscheck_report {
  std::size_t o_pair_count = 0;
  std::size_t summand_count = 0;
  bool pass = false;
};

crosscheck_report crosscheck_pairs_vs_ideals(
    const correspondence& x, unsigned limit = default_enumeration_limit);

/// For an O-pair w, O_X / P_w is the algebra of the pullback correspondence
/// X_w, so its summand sizes must form a sub-multiset of those of O_X.
/// `removed` lists the multiset difference, the summands of P_w itself.
struct quotient_structure_report {
  matrix_block_structure full;      // structure of O_X
  matrix_block_structure quotient;  // structure of the X_w algebra
  std::vector<std::uint64_t> removed_sizes;
  bool pass = false;
};

/// Errors: NotOPair, plus anything ox_structure raises on either side.
quotient_structure_report quotient_structure_check(const correspondence& x,
                                                   const ideal_pair& pair);

}  // namespace corrideal
