#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "corrideal/pairs.hpp"

namespace corrideal {

enum class block_tag {
  quotient,
  restriction,
  diagonal,
  i_side,
  i_prime_side,
};

const char* block_tag_name(block_tag t);

/// A correspondence built from another one, with bookkeeping mapping each
/// result block back to its source block.
struct derived_correspondence {
  correspondence result;
  std::vector<std::pair<unsigned, block_tag>> origin;  // per result block
};

/// Quotient correspondence X_I over A/I. Requires I positively invariant;
/// surviving blocks keep their dims, fullness, and mutual action (positive
/// invariance forces the discarded action entries to vanish).
/// Errors: NotPositivelyInvariant.
derived_correspondence quotient_correspondence(const correspondence& x,
                                               ideal_set i);

/// Restriction Y_I = phi_X(I)X as a correspondence over I. Fullness is
/// recomputed as the size of the acting part, m'_j = sum_{i in I} M[j][i] d_i.
/// Errors: NotPositivelyInvariant.
derived_correspondence restriction_correspondence(const correspondence& x,
                                                  ideal_set i);

/// The pullback correspondence X_w attached to a T-pair w = (I, I').
/// With T = J(I), the base algebra glues A/I and A/I' along A/T, giving one
/// diagonal block per block outside T, one I-side block per block of T\I,
/// and one I'-side block per block of T\I'. Only the A/I coordinate acts:
/// diagonal and I-side blocks act with the original multiplicities and
/// I'-side blocks act by zero. Errors: NotTPair.
derived_correspondence omega_correspondence(const correspondence& x,
                                            const ideal_pair& pair);

struct bimodule_check {
  bool is_bimodule = false;
  /// On failure, a block witnessing the obstruction plus a reason.
  std::optional<unsigned> witness_block;
  std::string reason;
};

/// A correspondence carries a left inner product (is a Hilbert bimodule)
/// iff phi_X(J_X) = K(X): every nonzero module block X_j must be acted on
/// by exactly one algebra block, with multiplicity 1, matching dimension
/// d_i = m_j, and no block may act on two module blocks.
bimodule_check is_hilbert_bimodule(const correspondence& x);

/// On a Hilbert bimodule, I is invariant iff phi_X(I)X = XI; in block terms
/// the partial matching restricts to a bijection between the nonzero module
/// blocks of I and the acting blocks of I. Errors: NotABimodule.
bool bimodule_invariant(const correspondence& x, ideal_set i);

struct graph_desc {
  struct edge {
    std::string src;
    std::string dst;
    ext_nat count;
  };
  std::vector<std::string> vertices;
  std::vector<edge> edges;
};

/// Graph-to-correspondence translation: one dim-1 block per vertex,
/// m_v = number of edges leaving v, M[src][dst] += count per edge.
/// Errors: UnknownVertex, NegativeOrMalformedNumber (zero edge count).
correspondence graph_to_correspondence(const graph_desc& g);

}  // namespace corrideal
