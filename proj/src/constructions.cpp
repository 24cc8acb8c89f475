#include "corrideal/constructions.hpp"

#include <array>
#include <optional>

#include "corrideal/errors.hpp"

namespace corrideal {

const char* block_tag_name(block_tag t) {
  switch (t) {
    case block_tag::quotient: return "quotient";
    case block_tag::restriction: return "restriction";
    case block_tag::diagonal: return "diagonal";
    case block_tag::i_side: return "I-side";
    case block_tag::i_prime_side: return "I'-side";
  }
  return "?";
}

namespace {

void require_positively_invariant(const correspondence& x, ideal_set i) {
  if (!forward_image(x, i).subset_of(i))
    fail(errc::not_positively_invariant,
         "ideal " + x.algebra().render(i) + " is not positively invariant");
}

derived_correspondence assemble(
    const correspondence& x,
    const std::vector<std::pair<unsigned, block_tag>>& origin,
    const std::vector<std::string>& labels,
    const std::vector<ext_nat>& fullness,
    const std::vector<std::vector<ext_nat>>& action) {
  raw_correspondence raw;
  for (std::size_t k = 0; k < origin.size(); ++k)
    raw.blocks.push_back({labels[k], x.algebra().dim(origin[k].first)});
  for (std::size_t k = 0; k < origin.size(); ++k)
    raw.fullness.push_back({labels[k], fullness[k]});
  for (std::size_t j = 0; j < origin.size(); ++j)
    for (std::size_t i = 0; i < origin.size(); ++i)
      if (!action[j][i].is_zero())
        raw.action.push_back({labels[j], labels[i], action[j][i]});
  return {validate_correspondence(raw), origin};
}

}  // namespace

derived_correspondence quotient_correspondence(const correspondence& x,
                                               ideal_set i) {
  require_positively_invariant(x, i);
  const unsigned n = x.size();

  std::vector<std::pair<unsigned, block_tag>> origin;
  std::vector<std::string> labels;
  for (unsigned k = 0; k < n; ++k)
    if (!i.contains(k)) {
      origin.push_back({k, block_tag::quotient});
      labels.push_back(x.algebra().label(k));
    }

  std::vector<ext_nat> fullness(origin.size());
  std::vector<std::vector<ext_nat>> action(
      origin.size(), std::vector<ext_nat>(origin.size()));
  for (std::size_t j = 0; j < origin.size(); ++j) {
    fullness[j] = x.fullness(origin[j].first);
    for (std::size_t k = 0; k < origin.size(); ++k)
      action[j][k] = x.action(origin[j].first, origin[k].first);
  }
  return assemble(x, origin, labels, fullness, action);
}

derived_correspondence restriction_correspondence(const correspondence& x,
                                                  ideal_set i) {
  require_positively_invariant(x, i);
  const unsigned n = x.size();

  std::vector<std::pair<unsigned, block_tag>> origin;
  std::vector<std::string> labels;
  for (unsigned k = 0; k < n; ++k)
    if (i.contains(k)) {
      origin.push_back({k, block_tag::restriction});
      labels.push_back(x.algebra().label(k));
    }

  // Y_I keeps only the acting part of the module, so fullness shrinks to
  // the exact column count of the restricted representation.
  std::vector<ext_nat> fullness(origin.size());
  std::vector<std::vector<ext_nat>> action(
      origin.size(), std::vector<ext_nat>(origin.size()));
  for (std::size_t j = 0; j < origin.size(); ++j) {
    ext_nat m(0);
    for (unsigned k = 0; k < n; ++k)
      if (i.contains(k))
        m += x.action(origin[j].first, k) * ext_nat(x.algebra().dim(k));
    fullness[j] = m;
    for (std::size_t k = 0; k < origin.size(); ++k)
      action[j][k] = x.action(origin[j].first, origin[k].first);
  }
  return assemble(x, origin, labels, fullness, action);
}

derived_correspondence omega_correspondence(const correspondence& x,
                                            const ideal_pair& pair) {
  if (!pair_is_valid(x, pair.first, pair.second, pair_kind::T))
    fail(errc::not_t_pair,
         "(" + x.algebra().render(pair.first) + ", " +
             x.algebra().render(pair.second) + ") is not a T-pair");

  const unsigned n = x.size();
  const ideal_set i = pair.first;
  const ideal_set i2 = pair.second;
  const ideal_set t = relative_covariance_ideal(x, i);

  std::vector<std::pair<unsigned, block_tag>> origin;
  std::vector<std::string> labels;
  auto add = [&](unsigned k, block_tag tag, const char* suffix) {
    origin.push_back({k, tag});
    labels.push_back(x.algebra().label(k) + suffix);
  };
  for (unsigned k = 0; k < n; ++k)
    if (!t.contains(k)) add(k, block_tag::diagonal, "#d");
  for (unsigned k = 0; k < n; ++k)
    if (t.contains(k) && !i.contains(k)) add(k, block_tag::i_side, "#i");
  for (unsigned k = 0; k < n; ++k)
    if (t.contains(k) && !i2.contains(k)) add(k, block_tag::i_prime_side, "#ii");

  // Every surviving module copy keeps its size; the left action factors
  // through the A/I coordinate, so I'-side blocks never act.
  std::vector<ext_nat> fullness(origin.size());
  std::vector<std::vector<ext_nat>> action(
      origin.size(), std::vector<ext_nat>(origin.size()));
  for (std::size_t j = 0; j < origin.size(); ++j) {
    fullness[j] = x.fullness(origin[j].first);
    for (std::size_t k = 0; k < origin.size(); ++k)
      action[j][k] = origin[k].second == block_tag::i_prime_side
                         ? ext_nat(0)
                         : x.action(origin[j].first, origin[k].first);
  }
  return assemble(x, origin, labels, fullness, action);
}

bimodule_check is_hilbert_bimodule(const correspondence& x) {
  const unsigned n = x.size();
  bimodule_check out;

  // phi_X(J_X) = K(X) forces the action relation to be a partial bijection
  // matching each nonzero module block to a full matrix copy.
  std::vector<std::optional<unsigned>> match(n);
  std::vector<bool> used(n, false);
  for (unsigned j = 0; j < n; ++j) {
    for (unsigned i = 0; i < n; ++i) {
      if (x.action(j, i).is_zero()) continue;
      if (match[j]) {
        out.witness_block = j;
        out.reason = "module block '" + x.algebra().label(j) +
                     "' has more than one acting block";
        return out;
      }
      match[j] = i;
    }
    if (x.fullness(j).is_zero()) continue;
    if (!match[j]) {
      out.witness_block = j;
      out.reason = "no block acts on module block '" + x.algebra().label(j) +
                   "', so compacts there are unreachable";
      return out;
    }
    const unsigned i = *match[j];
    if (used[i]) {
      out.witness_block = i;
      out.reason = "block '" + x.algebra().label(i) +
                   "' acts on two module blocks, so its image is a proper "
                   "diagonal";
      return out;
    }
    used[i] = true;
    if (x.action(j, i) != ext_nat(1) ||
        ext_nat(x.algebra().dim(i)) != x.fullness(j)) {
      out.witness_block = j;
      out.reason = "action of '" + x.algebra().label(i) + "' on '" +
                   x.algebra().label(j) + "' is not a full matrix copy";
      return out;
    }
  }
  out.is_bimodule = true;
  return out;
}

bool bimodule_invariant(const correspondence& x, ideal_set i) {
  bimodule_check c = is_hilbert_bimodule(x);
  if (!c.is_bimodule)
    fail(errc::not_a_bimodule, "not a Hilbert bimodule: " + c.reason);

  // phi_X(I)X = XI: the matching must carry I-module blocks exactly onto
  // the blocks acted on by I.
  const unsigned n = x.size();
  if (!forward_image(x, i).subset_of(i)) return false;
  for (unsigned j = 0; j < n; ++j) {
    if (!i.contains(j) || x.fullness(j).is_zero()) continue;
    bool matched_within = false;
    for (unsigned k = 0; k < n; ++k)
      if (i.contains(k) && !x.action(j, k).is_zero()) matched_within = true;
    if (!matched_within) return false;
  }
  return true;
}

correspondence graph_to_correspondence(const graph_desc& g) {
  raw_correspondence raw;
  for (const auto& v : g.vertices) raw.blocks.push_back({v, 1});
  block_algebra vertices(raw.blocks);

  std::vector<ext_nat> m(g.vertices.size(), ext_nat(0));
  std::vector<std::vector<ext_nat>> action(
      g.vertices.size(), std::vector<ext_nat>(g.vertices.size(), ext_nat(0)));
  for (const auto& e : g.edges) {
    auto src = vertices.find(e.src);
    if (!src) fail(errc::unknown_vertex, "unknown vertex '" + e.src + "'");
    auto dst = vertices.find(e.dst);
    if (!dst) fail(errc::unknown_vertex, "unknown vertex '" + e.dst + "'");
    if (e.count.is_zero())
      fail(errc::malformed_number, "edge count must be positive");
    m[*src] += e.count;
    action[*src][*dst] += e.count;
  }

  for (unsigned v = 0; v < g.vertices.size(); ++v) {
    raw.fullness.push_back({g.vertices[v], m[v]});
    for (unsigned w = 0; w < g.vertices.size(); ++w)
      if (!action[v][w].is_zero())
        raw.action.push_back({g.vertices[v], g.vertices[w], action[v][w]});
  }
  return validate_correspondence(raw);
}

}  // namespace corrideal
