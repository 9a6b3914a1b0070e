#include "sudiag/stasheff.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace sudiag {

Element stasheff_sum(const AInfAlgebra& alg, int n, std::span<const Monomial> args,
                     bool signed_terms) {
  if (static_cast<int>(args.size()) != n)
    throw std::invalid_argument("stasheff_sum: argument count mismatch");
  const Fp& field = alg.field();
  Element acc;
  std::vector<Monomial> outer;
  for (int j = 1; j <= n; ++j) {
    const int i = n + 1 - j;
    if (!alg.arity_supported(j) || !alg.arity_supported(i)) continue;
    for (int t = 0; t + j <= n; ++t) {
      Element inner = alg.apply(j, args.subspan(static_cast<size_t>(t), static_cast<size_t>(j)));
      if (inner.is_zero()) continue;
      std::uint32_t sign = 1;
      if (signed_terms && field.p != 2 && ((t + j * (n - j - t)) % 2)) sign = field.p - 1;
      for (const auto& [mono, coeff] : inner.terms()) {
        outer.clear();
        outer.insert(outer.end(), args.begin(), args.begin() + t);
        outer.push_back(mono);
        outer.insert(outer.end(), args.begin() + t + j, args.end());
        Element out = alg.apply(i, outer);
        out.scale(field.mul(coeff, sign), field);
        acc.add(out, field);
      }
    }
  }
  return acc;
}

void for_each_basis_tuple(const AInfAlgebra& alg, int length, int max_total_degree,
                          const std::function<void(std::span<const Monomial>)>& fn) {
  const std::vector<Monomial> basis = alg.basis_up_to_degree(max_total_degree);
  std::vector<Monomial> tuple(static_cast<size_t>(length), Monomial::unit(alg.nfactors()));
  auto rec = [&](auto&& self, int slot, int budget) -> void {
    if (slot == length) {
      fn(tuple);
      return;
    }
    for (const Monomial& m : basis) {
      if (m.degree() > budget) continue;
      tuple[static_cast<size_t>(slot)] = m;
      self(self, slot + 1, budget - m.degree());
    }
  };
  rec(rec, 0, max_total_degree);
}

StasheffReport stasheff_check(const AInfAlgebra& alg, int max_n, int max_total_degree,
                              int threads, std::size_t max_violations, bool signed_terms) {
  if (alg.field().p != 2 && !signed_terms)
    throw std::invalid_argument("stasheff_check: sign-free sum needs characteristic 2");
  if (max_n < 2) throw std::invalid_argument("stasheff_check: max_n must be >= 2");
  if (!alg.arity_supported(2))
    throw std::invalid_argument("stasheff_check: the structure has no binary operation");
  alg.reset_truncation_count();

  StasheffReport report;
  report.max_n = max_n;
  report.max_total_degree = max_total_degree;

  const std::vector<Monomial> basis = alg.basis_up_to_degree(max_total_degree);
  threads = std::max(1, threads);

  for (int n = 2; n <= max_n; ++n) {
    // split the outermost slot across workers; merge preserves basis order so
    // the report is independent of the thread count
    struct ChunkResult {
      long long checked = 0;
      std::vector<StasheffViolation> violations;
    };
    std::vector<ChunkResult> results(basis.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
      std::vector<Monomial> tuple(static_cast<size_t>(n), Monomial::unit(alg.nfactors()));
      while (true) {
        size_t idx = next.fetch_add(1);
        if (idx >= basis.size()) return;
        const Monomial& first = basis[idx];
        if (first.degree() > max_total_degree) continue;
        ChunkResult& res = results[idx];
        tuple[0] = first;
        auto rec = [&](auto&& self, int slot, int budget) -> void {
          if (slot == n) {
            ++res.checked;
            Element v = stasheff_sum(alg, n, tuple, signed_terms);
            if (!v.is_zero() && res.violations.size() < max_violations)
              res.violations.push_back(StasheffViolation{n, tuple, v});
            return;
          }
          for (const Monomial& m : basis) {
            if (m.degree() > budget) continue;
            tuple[static_cast<size_t>(slot)] = m;
            self(self, slot + 1, budget - m.degree());
          }
        };
        rec(rec, 1, max_total_degree - first.degree());
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
    for (ChunkResult& res : results) {
      report.tuples_checked += res.checked;
      for (StasheffViolation& v : res.violations)
        if (report.violations.size() < max_violations) report.violations.push_back(std::move(v));
    }
  }
  report.truncations = alg.truncation_count();
  return report;
}

}  // namespace sudiag
