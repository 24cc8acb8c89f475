#include "corrideal/correspondence.hpp"

#include "corrideal/errors.hpp"

namespace corrideal {

bool operator==(const correspondence& a, const correspondence& b) {
  if (a.size() != b.size()) return false;
  for (unsigned i = 0; i < a.size(); ++i) {
    if (a.algebra_.label(i) != b.algebra_.label(i)) return false;
    if (a.algebra_.dim(i) != b.algebra_.dim(i)) return false;
  }
  return a.fullness_ == b.fullness_ && a.action_ == b.action_;
}

correspondence validate_correspondence(const raw_correspondence& raw) {
  if (raw.blocks.size() > 31)
    fail(errc::size_limit, "at most 31 blocks are supported");

  correspondence x;
  x.algebra_ = block_algebra(raw.blocks);
  const unsigned n = x.algebra_.size();
  x.fullness_.assign(n, ext_nat(0));
  x.action_.assign(static_cast<std::size_t>(n) * n, ext_nat(0));

  std::vector<bool> seen(n, false);
  for (const auto& [label, m] : raw.fullness) {
    auto j = x.algebra_.find(label);
    if (!j) fail(errc::unknown_label, "fullness names unknown block '" + label + "'");
    if (seen[*j])
      fail(errc::duplicate_label, "fullness repeats block '" + label + "'");
    seen[*j] = true;
    x.fullness_[*j] = m;
  }

  for (const auto& e : raw.action) {
    auto j = x.algebra_.find(e.on);
    if (!j) fail(errc::unknown_label, "action names unknown block '" + e.on + "'");
    auto i = x.algebra_.find(e.by);
    if (!i) fail(errc::unknown_label, "action names unknown block '" + e.by + "'");
    x.action_[static_cast<std::size_t>(*j) * n + *i] += e.mult;
  }

  // sum_i M[j][i] d_i <= m_j: the left representation on X_j must fit in
  // its m_j columns. This also rules out action on an absent module block.
  for (unsigned j = 0; j < n; ++j) {
    ext_nat used(0);
    for (unsigned i = 0; i < n; ++i)
      used += x.action(j, i) * ext_nat(x.algebra_.dim(i));
    if (used > x.fullness_[j])
      fail(errc::fullness_violation,
           "left action on block '" + x.algebra_.label(j) + "' needs " +
               used.to_string() + " columns but fullness is " +
               x.fullness_[j].to_string());
  }

  return x;
}

ideal_set perp(const correspondence& x, ideal_set i) {
  return x.algebra().full_set() - i;
}

}  // namespace corrideal
