#pragma once

#include <string>
#include <vector>

#include "corrideal/correspondence.hpp"

namespace corrideal {

struct check_result {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;  // failure or skip reason
};

/// Runs the instance-level invariant suite over the full ideal lattice of
/// one correspondence: image identities, invariance laws, closure
/// minimality against brute force, pair-family closure, derived
/// correspondence postconditions, and (when the data is all-finite and
/// acyclic) the structure cross-checks. Cost is O(4^n); SizeLimit above
/// the given bound.
std::vector<check_result> run_instance_checks(const correspondence& x,
                                              unsigned limit = 10);

}  // namespace corrideal
