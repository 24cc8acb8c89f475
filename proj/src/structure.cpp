#include "corrideal/structure.hpp"

#include <algorithm>
#include <iterator>

#include "corrideal/errors.hpp"

namespace corrideal {

namespace {

// Cycle check on the digraph with an edge i -> j whenever block i acts on
// module block j; M is nilpotent exactly when this digraph is acyclic.
bool has_cycle(const correspondence& x) {
  const unsigned n = x.size();
  enum { unseen, open, done };
  std::vector<int> state(n, unseen);
  std::vector<unsigned> stack;

  for (unsigned root = 0; root < n; ++root) {
    if (state[root] != unseen) continue;
    stack.push_back(root);
    while (!stack.empty()) {
      unsigned v = stack.back();
      if (state[v] == unseen) {
        state[v] = open;
        for (unsigned j = 0; j < n; ++j) {
          if (x.action(j, v).is_zero()) continue;
          if (state[j] == open) return true;
          if (state[j] == unseen) stack.push_back(j);
        }
      } else {
        if (state[v] == open) state[v] = done;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

matrix_block_structure ox_structure(const correspondence& x) {
  const unsigned n = x.size();
  for (unsigned j = 0; j < n; ++j) {
    if (x.fullness(j).is_infinite())
      fail(errc::not_row_finite, "module block '" + x.algebra().label(j) +
                                     "' has infinite fullness");
    for (unsigned i = 0; i < n; ++i)
      if (x.action(j, i).is_infinite())
        fail(errc::not_row_finite, "block '" + x.algebra().label(i) +
                                       "' acts with infinite multiplicity");
  }
  if (has_cycle(x))
    fail(errc::not_acyclic, "the action digraph has a cycle");

  // Column counts of the tensor-power tower: level 0 holds m, level k+1
  // holds M . level k. Nilpotency makes the sum finite within n steps.
  std::vector<ext_nat> level(n), total(n);
  for (unsigned j = 0; j < n; ++j) level[j] = total[j] = x.fullness(j);
  for (;;) {
    std::vector<ext_nat> next(n, ext_nat(0));
    bool any = false;
    for (unsigned v = 0; v < n; ++v) {
      for (unsigned j = 0; j < n; ++j) next[v] += x.action(v, j) * level[j];
      if (!next[v].is_zero()) any = true;
      total[v] += next[v];
    }
    if (!any) break;
    level = std::move(next);
  }

  matrix_block_structure out;
  for (unsigned v = 0; v < n; ++v) {
    bool acts = false;
    for (unsigned j = 0; j < n; ++j)
      if (!x.action(j, v).is_zero()) acts = true;
    if (!acts)
      out.summands.push_back(
          {v, (ext_nat(x.algebra().dim(v)) + total[v]).value()});
  }
  return out;
}

crosscheck_report crosscheck_pairs_vs_ideals(const correspondence& x,
                                             unsigned limit) {
  crosscheck_report r;
  r.summand_count = ox_structure(x).summands.size();
  r.o_pair_count = enumerate_pairs(x, pair_kind::O, limit).size();
  r.pass = r.o_pair_count == (std::size_t{1} << r.summand_count);
  return r;
}

quotient_structure_report quotient_structure_check(const correspondence& x,
                                                   const ideal_pair& pair) {
  if (!pair_is_valid(x, pair.first, pair.second, pair_kind::O))
    fail(errc::not_o_pair,
         "(" + x.algebra().render(pair.first) + ", " +
             x.algebra().render(pair.second) + ") is not an O-pair");

  quotient_structure_report r;
  r.full = ox_structure(x);
  r.quotient = ox_structure(omega_correspondence(x, pair).result);

  std::vector<std::uint64_t> full_sizes, quot_sizes;
  for (const auto& s : r.full.summands) full_sizes.push_back(s.size);
  for (const auto& s : r.quotient.summands) quot_sizes.push_back(s.size);
  std::sort(full_sizes.begin(), full_sizes.end());
  std::sort(quot_sizes.begin(), quot_sizes.end());

  // Quotients of a finite direct sum of matrix algebras delete summands,
  // so the quotient sizes must embed into the full multiset.
  r.pass = std::includes(full_sizes.begin(), full_sizes.end(),
                         quot_sizes.begin(), quot_sizes.end());
  if (r.pass)
    std::set_difference(full_sizes.begin(), full_sizes.end(),
                        quot_sizes.begin(), quot_sizes.end(),
                        std::back_inserter(r.removed_sizes));
  return r;
}

}  // namespace corrideal
