#include "corrideal/instance_checks.hpp"

#include <algorithm>
#include <functional>
#include <optional>

#include "corrideal/errors.hpp"
#include "corrideal/structure.hpp"

namespace corrideal {

namespace {

using fail_detail = std::optional<std::string>;

struct lattice_tables {
  unsigned n = 0;
  std::uint32_t all = 0;
  structural_ideal_set sids;
  std::vector<ideal_set> fwd, inv, rel;
  std::vector<bool> pos, neg;

  explicit lattice_tables(const correspondence& x) {
    n = x.size();
    all = ideal_set::full(n).bits;
    sids = structural_ideals(x);
    const std::size_t count = std::size_t{1} << n;
    fwd.resize(count);
    inv.resize(count);
    rel.resize(count);
    pos.resize(count);
    neg.resize(count);
    for (std::uint32_t b = 0; b < count; ++b) {
      ideal_set i(b);
      fwd[b] = forward_image(x, i);
      inv[b] = inverse_image(x, i);
      rel[b] = relative_covariance_ideal(x, i);
      pos[b] = fwd[b].subset_of(i);
      neg[b] = (sids.covariance & inv[b]).subset_of(i);
    }
  }
};

// Walks result blocks as a set of source indices restricted by tag.
ideal_set source_set(const derived_correspondence& d, ideal_set result_blocks) {
  ideal_set out;
  for (unsigned k = 0; k < d.result.size(); ++k)
    if (result_blocks.contains(k)) out = out.with(d.origin[k].first);
  return out;
}

ideal_set blocks_with_tag(const derived_correspondence& d, block_tag tag) {
  ideal_set out;
  for (unsigned k = 0; k < d.result.size(); ++k)
    if (d.origin[k].second == tag) out = out.with(k);
  return out;
}

bool same_data_by_source(const correspondence& x,
                         const derived_correspondence& a,
                         const derived_correspondence& b) {
  if (a.result.size() != b.result.size()) return false;
  std::vector<int> a_of_source(x.size(), -1), b_of_source(x.size(), -1);
  for (unsigned k = 0; k < a.result.size(); ++k)
    a_of_source[a.origin[k].first] = static_cast<int>(k);
  for (unsigned k = 0; k < b.result.size(); ++k)
    b_of_source[b.origin[k].first] = static_cast<int>(k);
  for (unsigned s = 0; s < x.size(); ++s)
    if ((a_of_source[s] < 0) != (b_of_source[s] < 0)) return false;
  for (unsigned s = 0; s < x.size(); ++s) {
    if (a_of_source[s] < 0) continue;
    unsigned ka = static_cast<unsigned>(a_of_source[s]);
    unsigned kb = static_cast<unsigned>(b_of_source[s]);
    if (a.result.algebra().dim(ka) != b.result.algebra().dim(kb)) return false;
    if (a.result.fullness(ka) != b.result.fullness(kb)) return false;
    for (unsigned t = 0; t < x.size(); ++t) {
      if (a_of_source[t] < 0) continue;
      if (a.result.action(ka, static_cast<unsigned>(a_of_source[t])) !=
          b.result.action(kb, static_cast<unsigned>(b_of_source[t])))
        return false;
    }
  }
  return true;
}

}  // namespace

std::vector<check_result> run_instance_checks(const correspondence& x,
                                              unsigned limit) {
  const unsigned n = x.size();
  if (n > limit)
    fail(errc::size_limit, "instance checks over " + std::to_string(n) +
                               " blocks exceed the limit of " +
                               std::to_string(limit));

  lattice_tables t(x);
  const std::uint32_t all = t.all;
  const auto& a = x.algebra();

  std::vector<check_result> results;
  auto run = [&](const std::string& name,
                 const std::function<fail_detail()>& body) {
    fail_detail d = body();
    results.push_back({name, !d.has_value(), false, d.value_or("")});
  };
  auto skip = [&](const std::string& name, const std::string& why) {
    results.push_back({name, true, true, why});
  };

  run("perp involution", [&]() -> fail_detail {
    for (std::uint32_t b = 0;; ++b) {
      if (perp(x, perp(x, ideal_set(b))) != ideal_set(b))
        return "at " + a.render(ideal_set(b));
      if (b == all) break;
    }
    return {};
  });

  run("images monotone", [&]() -> fail_detail {
    for (std::uint32_t b = 0;; ++b) {
      // Subsets via submask walk.
      for (std::uint32_t s = b;; s = (s - 1) & b) {
        if (!t.fwd[s].subset_of(t.fwd[b]))
          return "forward image at " + a.render(ideal_set(s)) + " within " +
                 a.render(ideal_set(b));
        if (!t.inv[s].subset_of(t.inv[b]))
          return "inverse image at " + a.render(ideal_set(s)) + " within " +
                 a.render(ideal_set(b));
        if (s == 0) break;
      }
      if (b == all) break;
    }
    return {};
  });

  run("image lattice identities", [&]() -> fail_detail {
    for (std::uint32_t b1 = 0;; ++b1) {
      for (std::uint32_t b2 = 0;; ++b2) {
        std::uint32_t bi = b1 & b2, bu = b1 | b2;
        if (!t.fwd[bi].subset_of(t.fwd[b1] & t.fwd[b2]))
          return "forward of intersection at " + a.render(ideal_set(b1)) +
                 ", " + a.render(ideal_set(b2));
        if (t.inv[bi] != (t.inv[b1] & t.inv[b2]))
          return "inverse of intersection at " + a.render(ideal_set(b1)) +
                 ", " + a.render(ideal_set(b2));
        if (t.fwd[bu] != (t.fwd[b1] | t.fwd[b2]))
          return "forward of sum at " + a.render(ideal_set(b1)) + ", " +
                 a.render(ideal_set(b2));
        if (!(t.inv[b1] | t.inv[b2]).subset_of(t.inv[bu]))
          return "inverse of sum at " + a.render(ideal_set(b1)) + ", " +
                 a.render(ideal_set(b2));
        if (b2 == all) break;
      }
      if (b1 == all) break;
    }
    return {};
  });

  run("image composition bounds", [&]() -> fail_detail {
    ideal_set range;
    for (unsigned j = 0; j < n; ++j)
      if (!x.fullness(j).is_zero()) range = range.with(j);
    for (std::uint32_t b = 0;; ++b) {
      if (!t.fwd[t.inv[b].bits].subset_of(ideal_set(b) & range))
        return "forward of inverse at " + a.render(ideal_set(b));
      if (!(ideal_set(b) | t.sids.kernel).subset_of(t.inv[t.fwd[b].bits]))
        return "inverse of forward at " + a.render(ideal_set(b));
      if (b == all) break;
    }
    return {};
  });

  run("relative covariance ideal at zero", [&]() -> fail_detail {
    if (t.rel[0] != t.sids.covariance)
      return "J(0) = " + a.render(t.rel[0]) + " but J_X = " +
             a.render(t.sids.covariance);
    return {};
  });

  run("relative covariance intersection", [&]() -> fail_detail {
    for (std::uint32_t b1 = 0;; ++b1) {
      for (std::uint32_t b2 = 0;; ++b2) {
        if (!(t.rel[b1] & t.rel[b2]).subset_of(t.rel[b1 & b2]))
          return "at " + a.render(ideal_set(b1)) + ", " +
                 a.render(ideal_set(b2));
        if (b2 == all) break;
      }
      if (b1 == all) break;
    }
    return {};
  });

  run("negative invariance via relative covariance", [&]() -> fail_detail {
    for (std::uint32_t b = 0;; ++b) {
      if (t.neg[b] != t.sids.covariance.subset_of(t.rel[b]))
        return "at " + a.render(ideal_set(b));
      if (b == all) break;
    }
    return {};
  });

  run("positively invariant decomposition", [&]() -> fail_detail {
    for (std::uint32_t b = 0;; ++b) {
      if (t.pos[b] && (t.inv[b] & t.rel[b]) != ideal_set(b))
        return "at " + a.render(ideal_set(b));
      if (b == all) break;
    }
    return {};
  });

  run("invariance closed under intersection", [&]() -> fail_detail {
    for (std::uint32_t b1 = 0;; ++b1) {
      for (std::uint32_t b2 = 0;; ++b2) {
        if (t.pos[b1] && t.pos[b2] && !t.pos[b1 & b2])
          return "positive at " + a.render(ideal_set(b1)) + ", " +
                 a.render(ideal_set(b2));
        if (t.neg[b1] && t.neg[b2] && !t.neg[b1 & b2])
          return "negative at " + a.render(ideal_set(b1)) + ", " +
                 a.render(ideal_set(b2));
        if (b2 == all) break;
      }
      if (b1 == all) break;
    }
    return {};
  });

  run("closure minimality", [&]() -> fail_detail {
    for (std::uint32_t b = 0;; ++b) {
      closure_report c = closures(x, ideal_set(b));
      if (!t.pos[c.positive_closure.bits] || !t.neg[c.negative_closure.bits] ||
          !t.pos[c.invariant_closure.bits] || !t.neg[c.invariant_closure.bits])
        return "closure not closed at " + a.render(ideal_set(b));
      const std::uint32_t rest = all & ~b;
      for (std::uint32_t u = rest;; u = (u - 1) & rest) {
        std::uint32_t s = b | u;
        if (t.pos[s] && !c.positive_closure.subset_of(ideal_set(s)))
          return "positive closure not minimal at " + a.render(ideal_set(b));
        if (t.neg[s] && !c.negative_closure.subset_of(ideal_set(s)))
          return "negative closure not minimal at " + a.render(ideal_set(b));
        if (t.pos[s] && t.neg[s] &&
            !c.invariant_closure.subset_of(ideal_set(s)))
          return "invariant closure not minimal at " + a.render(ideal_set(b));
        if (u == 0) break;
      }
      if (b == all) break;
    }
    return {};
  });

  pair_lattice t_pairs = enumerate_pairs(x, pair_kind::T, limit);
  pair_lattice o_pairs = enumerate_pairs(x, pair_kind::O, limit);

  auto member = [](const pair_lattice& l, const ideal_pair& p) {
    auto it = std::lower_bound(l.pairs().begin(), l.pairs().end(), p);
    return it != l.pairs().end() && *it == p;
  };

  run("pair families are exactly the valid pairs", [&]() -> fail_detail {
    std::size_t tc = 0, oc = 0;
    for (std::uint32_t b1 = 0;; ++b1) {
      for (std::uint32_t b2 = 0;; ++b2) {
        ideal_set i(b1), i2(b2);
        bool tp = t.pos[b1] && i.subset_of(i2) && i2.subset_of(t.rel[b1]);
        bool op = tp && t.sids.covariance.subset_of(i2);
        if (tp != pair_is_valid(x, i, i2, pair_kind::T))
          return "T validity at (" + a.render(i) + ", " + a.render(i2) + ")";
        if (op != pair_is_valid(x, i, i2, pair_kind::O))
          return "O validity at (" + a.render(i) + ", " + a.render(i2) + ")";
        if (tp && !member(t_pairs, {i, i2, pair_kind::T}))
          return "missing T-pair (" + a.render(i) + ", " + a.render(i2) + ")";
        if (op && !member(o_pairs, {i, i2, pair_kind::O}))
          return "missing O-pair (" + a.render(i) + ", " + a.render(i2) + ")";
        tc += tp;
        oc += op;
        if (b2 == all) break;
      }
      if (b1 == all) break;
    }
    if (tc != t_pairs.size())
      return "T-pair count " + std::to_string(t_pairs.size()) + " vs " +
             std::to_string(tc);
    if (oc != o_pairs.size())
      return "O-pair count " + std::to_string(o_pairs.size()) + " vs " +
             std::to_string(oc);
    return {};
  });

  run("pair families closed under intersection", [&]() -> fail_detail {
    for (const pair_lattice* l : {&t_pairs, &o_pairs})
      for (std::size_t i = 0; i < l->size(); ++i)
        for (std::size_t j = i; j < l->size(); ++j) {
          ideal_pair m{l->pairs()[i].first & l->pairs()[j].first,
                       l->pairs()[i].second & l->pairs()[j].second,
                       l->pairs()[i].kind};
          if (!member(*l, m))
            return "meet of #" + std::to_string(i) + " and #" +
                   std::to_string(j) + " missing";
        }
    return {};
  });

  run("O-pair first components are the invariant ideals", [&]() -> fail_detail {
    std::vector<bool> seen(std::size_t{1} << n, false);
    for (const ideal_pair& p : o_pairs.pairs()) {
      if (!t.pos[p.first.bits] || !t.neg[p.first.bits])
        return "non-invariant first component " + a.render(p.first);
      seen[p.first.bits] = true;
    }
    for (std::uint32_t b = 0;; ++b) {
      if (t.pos[b] && t.neg[b] && !seen[b])
        return "invariant ideal " + a.render(ideal_set(b)) + " unrepresented";
      if (b == all) break;
    }
    return {};
  });

  run("trivial O-pairs present", [&]() -> fail_detail {
    if (!member(o_pairs, {ideal_set::empty(), t.sids.covariance, pair_kind::O}))
      return "(0, J_X) missing";
    if (!member(o_pairs, {ideal_set(all), ideal_set(all), pair_kind::O}))
      return "(A, A) missing";
    return {};
  });

  run("relative tower minimality", [&]() -> fail_detail {
    const std::uint32_t compact = t.sids.compactly_acting.bits;
    for (std::uint32_t jb = compact;; jb = (jb - 1) & compact) {
      relcp_report r = relcp_analyze(x, ideal_set(jb));
      if (!member(t_pairs, r.omega))
        return "omega_J not a T-pair at J = " + a.render(ideal_set(jb));
      for (const ideal_pair& p : t_pairs.pairs())
        if (ideal_set(jb).subset_of(p.second) &&
            !r.limit.subset_of(p.first))
          return "omega_J not minimal at J = " + a.render(ideal_set(jb));
      if (jb == 0) break;
    }
    return {};
  });

  run("quotient postconditions", [&]() -> fail_detail {
    for (std::uint32_t b = 0;; ++b) {
      if (t.pos[b]) {
        derived_correspondence q = quotient_correspondence(x, ideal_set(b));
        structural_ideal_set qs = structural_ideals(q.result);
        if (source_set(q, qs.covariance) != (t.rel[b] - ideal_set(b)))
          return "quotient covariance ideal at " + a.render(ideal_set(b));
        if (source_set(q, qs.kernel) != (t.inv[b] - ideal_set(b)))
          return "quotient kernel at " + a.render(ideal_set(b));
      }
      if (b == all) break;
    }
    return {};
  });

  run("restriction postconditions", [&]() -> fail_detail {
    for (std::uint32_t b = 0;; ++b) {
      if (t.pos[b]) {
        derived_correspondence y = restriction_correspondence(x, ideal_set(b));
        structural_ideal_set ys = structural_ideals(y.result);
        if (source_set(y, ys.kernel) != (ideal_set(b) & t.sids.kernel))
          return "restriction kernel at " + a.render(ideal_set(b));
        if (source_set(y, ys.compactly_acting) !=
            (ideal_set(b) & t.sids.compactly_acting))
          return "restriction compact locus at " + a.render(ideal_set(b));
        if (source_set(y, ys.covariance) !=
            (ideal_set(b) & t.sids.covariance))
          return "restriction covariance ideal at " + a.render(ideal_set(b));
      }
      if (b == all) break;
    }
    return {};
  });

  run("pullback postconditions", [&]() -> fail_detail {
    for (const ideal_pair& p : t_pairs.pairs()) {
      derived_correspondence w = omega_correspondence(x, p);
      if (structural_ideals(w.result).covariance !=
          blocks_with_tag(w, block_tag::i_side))
        return "pullback covariance ideal at (" + a.render(p.first) + ", " +
               a.render(p.second) + ")";
      if (p.second == t.rel[p.first.bits] &&
          !same_data_by_source(x, w,
                               quotient_correspondence(x, p.first)))
        return "pullback with I' = J(I) differs from quotient at " +
               a.render(p.first);
    }
    return {};
  });

  bimodule_check bc = is_hilbert_bimodule(x);
  if (!bc.is_bimodule) {
    skip("bimodule invariance agreement", "not a Hilbert bimodule");
  } else {
    run("bimodule invariance agreement", [&]() -> fail_detail {
      for (std::uint32_t b = 0;; ++b) {
        if (bimodule_invariant(x, ideal_set(b)) !=
            (t.pos[b] && t.neg[b]))
          return "at " + a.render(ideal_set(b));
        if (t.pos[b] && t.neg[b]) {
          if ((t.rel[b] - ideal_set(b)) !=
              (t.sids.covariance - ideal_set(b)))
            return "quotient covariance mismatch at " + a.render(ideal_set(b));
          std::size_t completions = 0;
          for (const ideal_pair& p : o_pairs.pairs())
            completions += p.first.bits == b;
          if (completions != 1)
            return "expected a unique O-pair completion at " +
                   a.render(ideal_set(b));
        }
        if (b == all) break;
      }
      return {};
    });
  }

  bool finite_acyclic = true;
  std::string unfit;
  try {
    ox_structure(x);
  } catch (const error& e) {
    finite_acyclic = false;
    unfit = e.code_name();
  }

  if (!finite_acyclic) {
    skip("structure cross-checks", unfit);
  } else {
    run("gauge-invariant ideal count vs structure", [&]() -> fail_detail {
      crosscheck_report r = crosscheck_pairs_vs_ideals(x, limit);
      if (!r.pass)
        return std::to_string(r.o_pair_count) + " O-pairs vs 2^" +
               std::to_string(r.summand_count) + " ideals";
      return {};
    });

    run("quotient structure sub-multisets", [&]() -> fail_detail {
      for (const ideal_pair& p : o_pairs.pairs())
        if (!quotient_structure_check(x, p).pass)
          return "at (" + a.render(p.first) + ", " + a.render(p.second) + ")";
      return {};
    });

    run("ideal summand count additivity", [&]() -> fail_detail {
      std::size_t full = ox_structure(x).summands.size();
      for (std::uint32_t b = 0;; ++b) {
        if (t.pos[b] && t.neg[b]) {
          ideal_pair p{ideal_set(b), ideal_set(b) | t.sids.covariance,
                       pair_kind::O};
          std::size_t rest =
              ox_structure(restriction_correspondence(x, ideal_set(b)).result)
                  .summands.size();
          std::size_t quot =
              ox_structure(omega_correspondence(x, p).result).summands.size();
          if (rest + quot != full)
            return "at " + a.render(ideal_set(b));
        }
        if (b == all) break;
      }
      return {};
    });

    if (n > 6) {
      skip("relative algebra structure consistency", "instance too large");
    } else {
      run("relative algebra structure consistency", [&]() -> fail_detail {
        const std::uint32_t compact = t.sids.compactly_acting.bits;
        for (std::uint32_t jb = compact;; jb = (jb - 1) & compact) {
          relcp_report r = relcp_analyze(x, ideal_set(jb));
          crosscheck_report cx = crosscheck_pairs_vs_ideals(
              omega_correspondence(x, r.omega).result, 2 * limit);
          if (!cx.pass)
            return "relative algebra crosscheck at J = " +
                   a.render(ideal_set(jb));
          std::size_t above = 0;
          for (const ideal_pair& p : t_pairs.pairs())
            above += r.limit.subset_of(p.first) &&
                     ideal_set(jb).subset_of(p.second);
          if (above != cx.o_pair_count)
            return "sublattice count " + std::to_string(above) + " vs " +
                   std::to_string(cx.o_pair_count) + " at J = " +
                   a.render(ideal_set(jb));
          if (jb == 0) break;
        }
        return {};
      });
    }
  }

  return results;
}

}  // namespace corrideal
