#include "corrideal/block_algebra.hpp"

#include "corrideal/errors.hpp"

namespace corrideal {

block_algebra::block_algebra(std::vector<block> blocks)
    : blocks_(std::move(blocks)) {
  for (unsigned i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].label.empty())
      fail(errc::malformed_number, "block label must be non-empty");
    if (blocks_[i].dim == 0)
      fail(errc::malformed_number,
           "block '" + blocks_[i].label + "' must have positive dimension");
    if (!index_.emplace(blocks_[i].label, i).second)
      fail(errc::duplicate_label, "duplicate block label '" + blocks_[i].label + "'");
  }
}

std::optional<unsigned> block_algebra::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string block_algebra::render(ideal_set s) const {
  std::string out = "{";
  bool first = true;
  for (unsigned i = 0; i < size(); ++i) {
    if (!s.contains(i)) continue;
    if (!first) out += ',';
    out += blocks_[i].label;
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace corrideal
