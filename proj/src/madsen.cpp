#include "sudiag/madsen.hpp"

namespace sudiag {

MadsenAlgebra::MadsenAlgebra(int n, std::uint32_t p, int ycap)
    : AInfAlgebra(p, ycap, 1), n_(n) {
  if (n < 3) throw std::invalid_argument("MadsenAlgebra: n must be >= 3");
  if (n % static_cast<int>(p) != 0)
    throw std::invalid_argument("MadsenAlgebra: characteristic must divide n");
}

Element MadsenAlgebra::apply_impl(int k, std::span<const Monomial> args) const {
  if (k == 2) {
    Monomial prod;
    if (!multiply(args[0], args[1], prod)) return Element::zero();  // x^2 = 0
    if (prod.ypow[0] > ycap()) {
      count_truncation();
      return Element::zero();
    }
    return Element::monomial(prod);
  }
  // k == n_: non-zero only when every argument carries the exterior generator
  int total = 0;
  for (const Monomial& m : args) {
    if (m.eps[0] != 1) return Element::zero();
    total += m.ypow[0];
  }
  if (total + 1 > ycap()) {
    count_truncation();
    return Element::zero();
  }
  return Element::monomial(Monomial::single(0, total + 1));
}

}  // namespace sudiag
