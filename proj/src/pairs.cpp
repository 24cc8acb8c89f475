#include "corrideal/pairs.hpp"

#include <algorithm>
#include <cassert>

#include "corrideal/errors.hpp"

namespace corrideal {

std::size_t pair_lattice::index_of(const ideal_pair& p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  assert(it != pairs_.end() && *it == p);
  return static_cast<std::size_t>(it - pairs_.begin());
}

std::size_t pair_lattice::meet(std::size_t a, std::size_t b) const {
  ideal_pair m{pairs_[a].first & pairs_[b].first,
               pairs_[a].second & pairs_[b].second, pairs_[a].kind};
  return index_of(m);
}

bool pair_is_valid(const correspondence& x, ideal_set i, ideal_set i2,
                   pair_kind kind) {
  if (!forward_image(x, i).subset_of(i)) return false;
  if (!i.subset_of(i2)) return false;
  if (!i2.subset_of(relative_covariance_ideal(x, i))) return false;
  if (kind == pair_kind::O &&
      !structural_ideals(x).covariance.subset_of(i2))
    return false;
  return true;
}

namespace {

unsigned rank(const ideal_pair& p) {
  return p.first.count() + p.second.count();
}

bool strictly_below(const ideal_pair& a, const ideal_pair& b) {
  return a.first.subset_of(b.first) && a.second.subset_of(b.second) &&
         !(a == b);
}

// Transitive reduction of the componentwise inclusion order.
std::vector<std::pair<std::size_t, std::size_t>> covering_edges(
    const std::vector<ideal_pair>& pairs) {
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::size_t> ups;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    ups.clear();
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (strictly_below(pairs[a], pairs[b])) ups.push_back(b);
    std::sort(ups.begin(), ups.end(), [&](std::size_t l, std::size_t r) {
      return rank(pairs[l]) < rank(pairs[r]);
    });
    std::vector<std::size_t> accepted;
    for (std::size_t b : ups) {
      bool reachable = false;
      for (std::size_t c : accepted)
        if (strictly_below(pairs[c], pairs[b])) {
          reachable = true;
          break;
        }
      if (!reachable) {
        accepted.push_back(b);
        covers.emplace_back(a, b);
      }
    }
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

}  // namespace

pair_lattice enumerate_pairs(const correspondence& x, pair_kind kind,
                             unsigned limit) {
  const unsigned n = x.size();
  if (n > limit)
    fail(errc::size_limit, "enumeration over " + std::to_string(n) +
                               " blocks exceeds the limit of " +
                               std::to_string(limit));

  const ideal_set covariance = structural_ideals(x).covariance;
  std::vector<ideal_pair> pairs;

  const std::uint32_t all = ideal_set::full(n).bits;
  for (std::uint32_t bits = 0;; ++bits) {
    ideal_set i(bits);
    if (forward_image(x, i).subset_of(i)) {
      ideal_set t = relative_covariance_ideal(x, i);
      ideal_set base = kind == pair_kind::O ? (i | covariance) : i;
      if (base.subset_of(t)) {
        // Walk all submasks of the free part T \ base.
        const std::uint32_t free = (t - base).bits;
        std::uint32_t s = free;
        for (;;) {
          pairs.push_back({i, base | ideal_set(s), kind});
          if (s == 0) break;
          s = (s - 1) & free;
        }
      }
    }
    if (bits == all) break;
  }

  std::sort(pairs.begin(), pairs.end());

  // The lattice assembly below is quadratic in the pair count; refuse
  // rather than grind on degenerate huge families.
  if (pairs.size() > 20000)
    fail(errc::size_limit,
         "pair family too large to assemble a lattice (" +
             std::to_string(pairs.size()) + " pairs)");

  auto covers = covering_edges(pairs);
  return pair_lattice(std::move(pairs), std::move(covers));
}

relcp_report relcp_analyze(const correspondence& x, ideal_set j) {
  if (!j.subset_of(structural_ideals(x).compactly_acting))
    fail(errc::not_compactly_acting,
         "the ideal " + x.algebra().render(j) +
             " does not act by compact operators");

  relcp_report r;
  r.tower.push_back(ideal_set::empty());
  for (;;) {
    ideal_set last = r.tower.back();
    ideal_set next = last | (j & inverse_image(x, last));
    if (next == last) break;
    r.tower.push_back(next);
  }
  r.limit = r.tower.back();
  r.omega = {r.limit, j, pair_kind::T};
  r.kernel_of_pi = r.limit;
  r.algebra_is_zero = r.limit == x.algebra().full_set();
  return r;
}

ideal_pair ideal_generated_by(const correspondence& x, ideal_set i) {
  ideal_set closure = closures(x, i).invariant_closure;
  return {closure, closure | structural_ideals(x).covariance, pair_kind::O};
}

invariant_bijection invariant_ideal_bijection(const correspondence& x) {
  const structural_ideal_set s = structural_ideals(x);
  const ideal_set split = s.kernel | s.covariance;
  invariant_bijection out;
  if (split != x.algebra().full_set()) {
    out.applies = false;
    out.witness = x.algebra().full_set() - split;
    return out;
  }

  out.applies = true;
  const std::uint32_t all = x.algebra().full_set().bits;
  for (std::uint32_t bits = 0;; ++bits) {
    ideal_set i(bits);
    if (invariance(x, i).invariant()) {
      // A = J_X + ker phi forces J(I) = I + J_X, so the completion is unique.
      assert(relative_covariance_ideal(x, i).subset_of(i | s.covariance));
      out.entries.push_back({i, {i, i | s.covariance, pair_kind::O}});
    }
    if (bits == all) break;
  }
  return out;
}

}  // namespace corrideal
