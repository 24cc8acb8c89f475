#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "corrideal/ideal_set.hpp"

namespace corrideal {

struct block {
  std::string label;
  std::uint32_t dim = 0;
};

/// A finite multi-matrix algebra, a direct sum of matrix blocks M_d(C).
/// Block index = declaration order; that order is fixed at construction and
/// used for all canonical renderings.
class block_algebra {
 public:
  block_algebra() = default;
  explicit block_algebra(std::vector<block> blocks);

  unsigned size() const { return static_cast<unsigned>(blocks_.size()); }
  const block& at(unsigned i) const { return blocks_[i]; }
  const std::string& label(unsigned i) const { return blocks_[i].label; }
  std::uint32_t dim(unsigned i) const { return blocks_[i].dim; }
  const std::vector<block>& blocks() const { return blocks_; }

  std::optional<unsigned> find(const std::string& label) const;

  ideal_set full_set() const { return ideal_set::full(size()); }

  /// Canonical rendering "{a,b}", members sorted by block index.
  std::string render(ideal_set s) const;

 private:
  std::vector<block> blocks_;
  std::unordered_map<std::string, unsigned> index_;
};

}  // namespace corrideal
