#include "corrideal/ideal_calculus.hpp"

#include <algorithm>

namespace corrideal {

ideal_set forward_image(const correspondence& x, ideal_set i) {
  const unsigned n = x.size();
  ideal_set out;
  for (unsigned j = 0; j < n; ++j)
    for (unsigned k = 0; k < n; ++k)
      if (i.contains(k) && !x.action(j, k).is_zero()) {
        out = out.with(j);
        break;
      }
  return out;
}

ideal_set inverse_image(const correspondence& x, ideal_set i) {
  const unsigned n = x.size();
  ideal_set out;
  for (unsigned k = 0; k < n; ++k) {
    bool inside = true;
    for (unsigned j = 0; j < n; ++j)
      if (!x.action(j, k).is_zero() && !i.contains(j)) {
        inside = false;
        break;
      }
    if (inside) out = out.with(k);
  }
  return out;
}

structural_ideal_set structural_ideals(const correspondence& x) {
  const unsigned n = x.size();
  structural_ideal_set s;
  for (unsigned k = 0; k < n; ++k) {
    bool acts = false;
    bool compact = true;
    for (unsigned j = 0; j < n; ++j) {
      ext_nat m = x.action(j, k);
      if (!m.is_zero()) acts = true;
      if (m.is_infinite()) compact = false;
    }
    if (!acts) s.kernel = s.kernel.with(k);
    if (compact) s.compactly_acting = s.compactly_acting.with(k);
  }
  s.covariance = s.compactly_acting & perp(x, s.kernel);
  return s;
}

ideal_set relative_covariance_ideal(const correspondence& x, ideal_set i) {
  const unsigned n = x.size();
  ideal_set inv = inverse_image(x, i);
  ideal_set out;
  for (unsigned k = 0; k < n; ++k) {
    bool compact_mod_i = true;
    for (unsigned j = 0; j < n; ++j)
      if (!i.contains(j) && x.action(j, k).is_infinite()) {
        compact_mod_i = false;
        break;
      }
    if (compact_mod_i && (!inv.contains(k) || i.contains(k)))
      out = out.with(k);
  }
  return out;
}

invariance_report invariance(const correspondence& x, ideal_set i) {
  invariance_report r;
  r.positively_invariant = forward_image(x, i).subset_of(i);
  ideal_set jx = structural_ideals(x).covariance;
  r.negatively_invariant = (jx & inverse_image(x, i)).subset_of(i);
  return r;
}

namespace {

// Appends iterates of `step` starting at `i`, stopping at (and including)
// the first entry equal to an earlier one.
template <typename Step>
std::vector<ideal_set> tower(ideal_set i, Step step) {
  std::vector<ideal_set> t{i};
  for (;;) {
    ideal_set next = step(t.back());
    bool repeat = std::find(t.begin(), t.end(), next) != t.end();
    t.push_back(next);
    if (repeat) return t;
  }
}

ideal_set backward_fixpoint(const correspondence& x, ideal_set jx, ideal_set i) {
  for (;;) {
    ideal_set next = i | (jx & inverse_image(x, i));
    if (next == i) return i;
    i = next;
  }
}

}  // namespace

closure_report closures(const correspondence& x, ideal_set i) {
  ideal_set jx = structural_ideals(x).covariance;
  closure_report r;
  r.forward_tower = tower(i, [&](ideal_set s) { return forward_image(x, s); });
  r.backward_tower =
      tower(i, [&](ideal_set s) { return s | (jx & inverse_image(x, s)); });

  r.positive_closure = ideal_set::empty();
  for (ideal_set s : r.forward_tower) r.positive_closure = r.positive_closure | s;
  r.negative_closure = r.backward_tower.back();
  r.invariant_closure = backward_fixpoint(x, jx, r.positive_closure);
  return r;
}

}  // namespace corrideal
