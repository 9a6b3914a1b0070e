#pragma once

#include "sudiag/ainf.hpp"

namespace sudiag {

// Structure on H*(C_n) = Lambda(x) (x) k[y] over F_p with p | n: m_2 is the cup
// product, m_n(x y^{i_1}, ..., x y^{i_n}) = y^{i_1 + ... + i_n + 1} (zero as soon
// as one argument has no x factor), every other arity zero.
class MadsenAlgebra : public AInfAlgebra {
 public:
  MadsenAlgebra(int n, std::uint32_t p, int ycap);

  int n() const { return n_; }
  bool arity_supported(int k) const override { return k == 2 || k == n_; }

 protected:
  Element apply_impl(int k, std::span<const Monomial> args) const override;

 private:
  int n_;
};

}  // namespace sudiag
