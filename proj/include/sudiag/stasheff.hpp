#pragma once

#include <functional>

#include "sudiag/ainf.hpp"

namespace sudiag {

// Sum over i + j = n + 1 and 0 <= t <= n - j of
//   m_i(a_1, ..., a_t, m_j(a_{t+1}, ..., a_{t+j}), ..., a_n).
// Sign-free (characteristic 2). With `signed_terms` each summand carries
// (-1)^{t + j(n - j - t)}; odd-characteristic runs are advisory only.
Element stasheff_sum(const AInfAlgebra& alg, int n, std::span<const Monomial> args,
                     bool signed_terms = false);

struct StasheffViolation {
  int n = 0;
  std::vector<Monomial> args;
  Element value;
};

struct StasheffReport {
  int max_n = 0;
  int max_total_degree = 0;
  long long tuples_checked = 0;
  std::vector<StasheffViolation> violations;  // capped
  std::uint64_t truncations = 0;
  bool passed() const { return violations.empty(); }
};

// Exhaustive check of St_n for 2 <= n <= max_n over all basis tuples with total
// degree <= max_total_degree. Requires characteristic 2 unless `signed_terms`.
StasheffReport stasheff_check(const AInfAlgebra& alg, int max_n, int max_total_degree,
                              int threads = 1, std::size_t max_violations = 16,
                              bool signed_terms = false);

// Iterates the basis tuples of the given length with bounded total degree, in
// lexicographic basis order.
void for_each_basis_tuple(const AInfAlgebra& alg, int length, int max_total_degree,
                          const std::function<void(std::span<const Monomial>)>& fn);

}  // namespace sudiag
