#pragma once

#include <string>

#include "corrideal/constructions.hpp"
#include "corrideal/correspondence.hpp"

namespace testsupport {

using namespace corrideal;

// C + C + M2 with the left action embedding the first two blocks into the
// diagonal of the third. Simple algebra, covariance ideal {a, b}.
inline correspondence diag_embedding() {
  raw_correspondence raw;
  raw.blocks = {{"a", 1}, {"b", 1}, {"c", 2}};
  raw.fullness = {{"a", 1}, {"b", 1}, {"c", 2}};
  raw.action = {{"c", "a", 1}, {"c", "b", 1}};
  return validate_correspondence(raw);
}

// C^3 with the third block acting as the identity on a two-column module;
// two invariant ideals whose sum is not negatively invariant.
inline correspondence two_sinks() {
  raw_correspondence raw;
  raw.blocks = {{"p1", 1}, {"p2", 1}, {"p3", 1}};
  raw.fullness = {{"p1", 1}, {"p2", 1}, {"p3", 0}};
  raw.action = {{"p1", "p3", 1}, {"p2", "p3", 1}};
  return validate_correspondence(raw);
}

inline graph_desc infinite_emitter_graph() {
  graph_desc g;
  g.vertices = {"v0", "v1", "v2"};
  g.edges = {{"v0", "v2", 1}, {"v1", "v2", ext_nat::infinity()}};
  return g;
}

// Three vertices, one plain edge and one infinite multi-edge; the
// covariance ideal is zero, so T-pairs and O-pairs coincide.
inline correspondence infinite_emitter() {
  return graph_to_correspondence(infinite_emitter_graph());
}

// The identity correspondence over blocks of the given dims.
inline correspondence identity_correspondence(std::vector<std::uint32_t> dims) {
  raw_correspondence raw;
  for (std::size_t i = 0; i < dims.size(); ++i)
    raw.blocks.push_back({"b" + std::to_string(i), dims[i]});
  for (std::size_t i = 0; i < dims.size(); ++i) {
    raw.fullness.push_back({raw.blocks[i].label, dims[i]});
    raw.action.push_back({raw.blocks[i].label, raw.blocks[i].label, 1});
  }
  return validate_correspondence(raw);
}

// Two dim-1 blocks swapped by the action; a Hilbert bimodule with no
// nontrivial invariant ideal.
inline correspondence swap_bimodule() {
  raw_correspondence raw;
  raw.blocks = {{"u", 1}, {"v", 1}};
  raw.fullness = {{"u", 1}, {"v", 1}};
  raw.action = {{"u", "v", 1}, {"v", "u", 1}};
  return validate_correspondence(raw);
}

// A two-step chain bimodule u <- v <- w (w matched to the empty module
// block); distinguishes the two directions of bimodule invariance.
inline correspondence chain_bimodule() {
  raw_correspondence raw;
  raw.blocks = {{"u", 1}, {"v", 1}, {"w", 1}};
  raw.fullness = {{"u", 1}, {"v", 1}, {"w", 0}};
  raw.action = {{"u", "v", 1}, {"v", "w", 1}};
  return validate_correspondence(raw);
}

inline correspondence zero_correspondence(unsigned n) {
  raw_correspondence raw;
  for (unsigned i = 0; i < n; ++i)
    raw.blocks.push_back({"z" + std::to_string(i), 1});
  return validate_correspondence(raw);
}

inline correspondence empty_correspondence() {
  return validate_correspondence(raw_correspondence{});
}

inline std::string fixture_path(const std::string& name) {
  return std::string(CORRIDEAL_FIXTURE_DIR) + "/" + name;
}

inline std::string golden_path(const std::string& name) {
  return std::string(CORRIDEAL_GOLDEN_DIR) + "/" + name;
}

}  // namespace testsupport
