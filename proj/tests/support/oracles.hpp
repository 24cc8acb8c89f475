#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "corrideal/constructions.hpp"
#include "corrideal/correspondence.hpp"
#include "corrideal/pairs.hpp"

// Independent re-derivations of the lattice operations, written straight
// from the definitions and kept apart from the library implementations so
// the two can be checked against each other.
namespace oracle {

using namespace corrideal;

inline ideal_set o_forward(const correspondence& x, ideal_set s) {
  ideal_set out;
  for (unsigned j = 0; j < x.size(); ++j) {
    bool hit = false;
    for (unsigned i = 0; i < x.size(); ++i)
      hit = hit || (s.contains(i) && x.action(j, i) > ext_nat(0));
    if (hit) out = out.with(j);
  }
  return out;
}

inline ideal_set o_inverse(const correspondence& x, ideal_set s) {
  ideal_set out = x.algebra().full_set();
  for (unsigned i = 0; i < x.size(); ++i)
    for (unsigned j = 0; j < x.size(); ++j)
      if (x.action(j, i) > ext_nat(0) && !s.contains(j))
        out = out.without(i);
  return out;
}

inline ideal_set o_kernel(const correspondence& x) {
  return o_inverse(x, ideal_set::empty());
}

inline ideal_set o_covariance(const correspondence& x) {
  ideal_set out;
  for (unsigned i = 0; i < x.size(); ++i) {
    bool acts = false, compact = true;
    for (unsigned j = 0; j < x.size(); ++j) {
      if (x.action(j, i) > ext_nat(0)) acts = true;
      if (x.action(j, i).is_infinite()) compact = false;
    }
    if (acts && compact) out = out.with(i);
  }
  return out;
}

inline ideal_set o_relative_covariance(const correspondence& x, ideal_set s) {
  ideal_set inv = o_inverse(x, s);
  ideal_set out;
  for (unsigned i = 0; i < x.size(); ++i) {
    bool compact = true;
    for (unsigned j = 0; j < x.size(); ++j)
      if (!s.contains(j) && x.action(j, i).is_infinite()) compact = false;
    bool annihilates = !inv.contains(i) || s.contains(i);
    if (compact && annihilates) out = out.with(i);
  }
  return out;
}

inline bool o_positively_invariant(const correspondence& x, ideal_set s) {
  return o_forward(x, s).subset_of(s);
}

inline bool o_negatively_invariant(const correspondence& x, ideal_set s) {
  return (o_covariance(x) & o_inverse(x, s)).subset_of(s);
}

/// Brute-force minimal superset of `s` satisfying `pred` over the full
/// 2^n lattice: the intersection of all qualifying supersets, provided it
/// qualifies itself. Returns nullopt when no minimum exists.
template <typename Pred>
std::optional<ideal_set> o_minimal_superset(const correspondence& x,
                                            ideal_set s, Pred pred) {
  const std::uint32_t all = x.algebra().full_set().bits;
  std::optional<ideal_set> meet;
  for (std::uint32_t b = 0;; ++b) {
    ideal_set cand(b);
    if (s.subset_of(cand) && pred(x, cand))
      meet = meet ? (*meet & cand) : cand;
    if (b == all) break;
  }
  if (!meet || !pred(x, *meet) || !s.subset_of(*meet)) return std::nullopt;
  return meet;
}

/// Brute-force pair enumeration over the whole 2^n x 2^n square.
inline std::vector<ideal_pair> o_enumerate_pairs(const correspondence& x,
                                                 pair_kind kind) {
  const std::uint32_t all = x.algebra().full_set().bits;
  std::vector<ideal_pair> out;
  for (std::uint32_t b1 = 0;; ++b1) {
    for (std::uint32_t b2 = 0;; ++b2) {
      ideal_set i(b1), i2(b2);
      bool ok = o_positively_invariant(x, i) && i.subset_of(i2) &&
                i2.subset_of(o_relative_covariance(x, i));
      if (ok && kind == pair_kind::O)
        ok = o_covariance(x).subset_of(i2);
      if (ok) out.push_back({i, i2, kind});
      if (b2 == all) break;
    }
    if (b1 == all) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Memoized count of directed paths (including the trivial one) starting
/// at each vertex of an acyclic multigraph; parallel edges count
/// separately.
inline std::vector<std::uint64_t> o_path_counts(const graph_desc& g) {
  std::map<std::string, unsigned> index;
  for (unsigned v = 0; v < g.vertices.size(); ++v) index[g.vertices[v]] = v;

  std::vector<std::vector<std::pair<unsigned, std::uint64_t>>> out_edges(
      g.vertices.size());
  for (const auto& e : g.edges)
    out_edges[index.at(e.src)].push_back({index.at(e.dst), e.count.value()});

  std::vector<std::uint64_t> memo(g.vertices.size(), 0);
  std::vector<bool> done(g.vertices.size(), false);
  auto count = [&](auto&& self, unsigned v) -> std::uint64_t {
    if (done[v]) return memo[v];
    std::uint64_t total = 1;
    for (auto [w, c] : out_edges[v]) total += c * self(self, w);
    done[v] = true;
    return memo[v] = total;
  };
  for (unsigned v = 0; v < g.vertices.size(); ++v) count(count, v);
  return memo;
}

/// Vertices with no incoming edge; these carry the matrix summands.
inline std::vector<unsigned> o_source_vertices(const graph_desc& g) {
  std::map<std::string, unsigned> index;
  for (unsigned v = 0; v < g.vertices.size(); ++v) index[g.vertices[v]] = v;
  std::vector<bool> has_in(g.vertices.size(), false);
  for (const auto& e : g.edges) has_in[index.at(e.dst)] = true;
  std::vector<unsigned> out;
  for (unsigned v = 0; v < g.vertices.size(); ++v)
    if (!has_in[v]) out.push_back(v);
  return out;
}

}  // namespace oracle
