#pragma once

#include <vector>

#include "corrideal/correspondence.hpp"

namespace corrideal {

/// The three structural ideals of a correspondence.
struct structural_ideal_set {
  ideal_set kernel;            // ker phi_X: blocks acting nowhere
  ideal_set compactly_acting;  // phi_X^{-1}(K(X)): all multiplicities finite
  ideal_set covariance;        // J_X = compactly_acting n perp(kernel)
};

struct invariance_report {
  bool positively_invariant = false;
  bool negatively_invariant = false;

  bool invariant() const { return positively_invariant && negatively_invariant; }
};

/// Closure towers and the minimal invariant supersets they stabilize to.
/// Towers are reported up to and including the first repeated entry; on a
/// finite lattice every tower stabilizes within n steps.
struct closure_report {
  std::vector<ideal_set> forward_tower;   // X^0(I), X^1(I), ...
  std::vector<ideal_set> backward_tower;  // X_0(I), X_{-1}(I), ...
  ideal_set positive_closure;   // smallest positively invariant superset
  ideal_set negative_closure;   // smallest negatively invariant superset
  ideal_set invariant_closure;  // smallest invariant superset
};

/// X(I) = { j : some block of I acts on X_j }.
ideal_set forward_image(const correspondence& x, ideal_set i);

/// X^{-1}(I) = { i : block i acts only on module blocks in I }.
ideal_set inverse_image(const correspondence& x, ideal_set i);

structural_ideal_set structural_ideals(const correspondence& x);

/// The relative covariance ideal J(I): blocks acting compactly modulo I
/// whose annihilation condition a X^{-1}(I) c I holds. J(0) = J_X, and
/// J(I)/I is the covariance ideal of the quotient correspondence for
/// positively invariant I. Defined for every ideal I.
ideal_set relative_covariance_ideal(const correspondence& x, ideal_set i);

/// Positively invariant: X(I) c I. Negatively invariant: J_X n X^{-1}(I) c I.
invariance_report invariance(const correspondence& x, ideal_set i);

closure_report closures(const correspondence& x, ideal_set i);

}  // namespace corrideal
