#pragma once

#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "sudiag/element.hpp"
#include "sudiag/tree.hpp"

namespace sudiag {

// Arity-indexed family of multilinear operations on a graded basis, homogeneous
// of degree 2 - k in arity k, with m_1 = 0. Operations are defined on basis
// tuples; multilinear extension is mechanical (apply_multilinear).
class AInfAlgebra {
 public:
  AInfAlgebra(std::uint32_t p, int ycap, int nfactors);
  virtual ~AInfAlgebra() = default;

  const Fp& field() const { return field_; }
  int ycap() const { return ycap_; }
  int nfactors() const { return nfactors_; }

  virtual bool arity_supported(int k) const = 0;
  std::vector<int> supported_arities(int max_arity) const;

  // Evaluation on a basis tuple. Unsupported arities give zero; every non-zero
  // result is checked for degree homogeneity.
  Element apply(int k, std::span<const Monomial> args) const;

  // Outputs dropped because a y-power exceeded the cap.
  std::uint64_t truncation_count() const { return truncations_.load(); }
  void reset_truncation_count() const { truncations_.store(0); }

  std::vector<Monomial> basis_up_to_degree(int max_degree) const;

 protected:
  virtual Element apply_impl(int k, std::span<const Monomial> args) const = 0;
  void count_truncation() const { truncations_.fetch_add(1, std::memory_order_relaxed); }

 private:
  Fp field_;
  int ycap_;
  int nfactors_;
  mutable std::atomic<std::uint64_t> truncations_{0};
};

// Expands an operation over sums of basis monomials slot by slot.
Element apply_multilinear(const AInfAlgebra& alg, int k, std::span<const Element> args);

// Evaluates a planar tree bottom-up: an internal node of arity j applies m_j to
// its children, leaves pass arguments through left to right.
Element evaluate_tree(const PlanarTree& tree, const AInfAlgebra& alg,
                      std::span<const Element> args);
Element evaluate_tree_basis(const PlanarTree& tree, const AInfAlgebra& alg,
                            std::span<const Monomial> args);

}  // namespace sudiag
