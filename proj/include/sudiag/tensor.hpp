#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>

#include "sudiag/ainf.hpp"

namespace sudiag {

// Interchange sign convention for the tensor structure. Identically +1 in
// characteristic 2; the Koszul rule is exposed for odd characteristic but is
// experimental (no convention is pinned for the diagonal's terms there).
enum class TensorSign { plus_one, koszul_experimental };

// A (x) B with operations m_k = sum over the arity-k associahedral diagonal
// terms of (left tree on the A-parts) (x) (right tree on the B-parts).
class TensorAlgebra : public AInfAlgebra {
 public:
  TensorAlgebra(std::shared_ptr<const AInfAlgebra> a, std::shared_ptr<const AInfAlgebra> b,
                int max_arity, std::shared_ptr<DeltaKCache> cache = nullptr,
                TensorSign sign = TensorSign::plus_one);

  int max_arity() const { return max_arity_; }
  const AInfAlgebra& factor_a() const { return *a_; }
  const AInfAlgebra& factor_b() const { return *b_; }
  bool arity_supported(int k) const override { return k >= 2 && k <= max_arity_; }

  // Diagonal terms whose trees only use arities the factors support (the other
  // terms evaluate to zero identically); coefficient = multiplicity mod p.
  struct WeightedTerm {
    PlanarTree left;
    PlanarTree right;
    std::uint32_t coeff = 1;
  };
  const std::vector<WeightedTerm>& surviving_terms(int k) const;

  // Override one table entry; used to probe identity checkers with a corrupted
  // structure.
  void corrupt_entry(int k, std::vector<Monomial> args, Element value);

 protected:
  Element apply_impl(int k, std::span<const Monomial> args) const override;

 private:
  struct ArityData {
    std::once_flag once;
    std::vector<WeightedTerm> terms;
  };
  Element compute_basis(int k, std::span<const Monomial> args) const;

  std::shared_ptr<const AInfAlgebra> a_, b_;
  int max_arity_;
  std::shared_ptr<DeltaKCache> cache_;
  TensorSign sign_;
  mutable std::vector<std::unique_ptr<ArityData>> arity_data_;

  struct Corruption {
    int arity;
    std::vector<Monomial> args;
    Element value;
  };
  std::vector<Corruption> corruptions_;

  // memo: packed (arity, args) -> Element, sharded for concurrent scans
  struct Key {
    unsigned __int128 v;
    bool operator==(const Key& o) const { return v == o.v; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const {
      std::uint64_t lo = static_cast<std::uint64_t>(k.v);
      std::uint64_t hi = static_cast<std::uint64_t>(k.v >> 64);
      std::uint64_t h = lo * 0x9e3779b97f4a7c15ull ^ (hi + 0x9e3779b97f4a7c15ull + (lo << 6));
      return static_cast<size_t>(h ^ (h >> 29));
    }
  };
  static constexpr int kShards = 16;
  mutable std::array<std::mutex, kShards> memo_mu_;
  mutable std::array<std::unordered_map<Key, Element, KeyHash>, kShards> memo_;
};

}  // namespace sudiag
