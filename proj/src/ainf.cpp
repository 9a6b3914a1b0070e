#include "sudiag/ainf.hpp"

namespace sudiag {

AInfAlgebra::AInfAlgebra(std::uint32_t p, int ycap, int nfactors)
    : field_(p), ycap_(ycap), nfactors_(nfactors) {
  if (ycap < 0 || ycap > 30) throw std::invalid_argument("AInfAlgebra: ycap out of range");
  if (nfactors != 1 && nfactors != 2)
    throw std::invalid_argument("AInfAlgebra: factor count must be 1 or 2");
}

std::vector<int> AInfAlgebra::supported_arities(int max_arity) const {
  std::vector<int> out;
  for (int k = 1; k <= max_arity; ++k)
    if (arity_supported(k)) out.push_back(k);
  return out;
}

Element AInfAlgebra::apply(int k, std::span<const Monomial> args) const {
  if (k < 1) throw std::invalid_argument("apply: arity must be >= 1");
  if (static_cast<int>(args.size()) != k)
    throw std::invalid_argument("apply: argument count does not match arity");
  int in_degree = 0;
  for (const Monomial& m : args) {
    if (m.factors != nfactors_) throw std::invalid_argument("apply: wrong basis factor count");
    in_degree += m.degree();
  }
  if (!arity_supported(k)) return Element::zero();
  Element out = apply_impl(k, args);
  for (const auto& [mono, coeff] : out.terms())
    if (mono.degree() != in_degree + 2 - k)
      throw std::logic_error("apply: operation violates degree homogeneity");
  return out;
}

std::vector<Monomial> AInfAlgebra::basis_up_to_degree(int max_degree) const {
  std::vector<Monomial> out;
  if (nfactors_ == 1) {
    for (int d = 0; d <= max_degree; ++d)
      for (int eps = 0; eps <= 1; ++eps) {
        int rem = d - eps;
        if (rem < 0 || rem % 2) continue;
        int a = rem / 2;
        if (a > ycap_) continue;
        out.push_back(Monomial::single(eps, a));
      }
  } else {
    for (int d = 0; d <= max_degree; ++d)
      for (int e1 = 0; e1 <= 1; ++e1)
        for (int e2 = 0; e2 <= 1; ++e2)
          for (int a = 0; a <= ycap_; ++a) {
            int rem = d - e1 - e2 - 2 * a;
            if (rem < 0 || rem % 2) continue;
            int b = rem / 2;
            if (b > ycap_) continue;
            out.push_back(Monomial::tensor(e1, a, e2, b));
          }
  }
  return out;
}

Element apply_multilinear(const AInfAlgebra& alg, int k, std::span<const Element> args) {
  if (static_cast<int>(args.size()) != k)
    throw std::invalid_argument("apply_multilinear: argument count mismatch");
  for (const Element& e : args)
    if (e.is_zero()) return Element::zero();
  const Fp& field = alg.field();
  Element acc;
  std::vector<size_t> choice(static_cast<size_t>(k), 0);
  std::vector<Monomial> tuple(static_cast<size_t>(k), Monomial::unit(alg.nfactors()));
  while (true) {
    std::uint32_t coeff = 1;
    for (int i = 0; i < k; ++i) {
      const auto& [m, c] = args[static_cast<size_t>(i)].terms()[choice[static_cast<size_t>(i)]];
      tuple[static_cast<size_t>(i)] = m;
      coeff = field.mul(coeff, c);
    }
    Element part = alg.apply(k, tuple);
    part.scale(coeff, field);
    acc.add(part, field);
    int slot = k - 1;
    while (slot >= 0) {
      if (++choice[static_cast<size_t>(slot)] <
          args[static_cast<size_t>(slot)].terms().size())
        break;
      choice[static_cast<size_t>(slot)] = 0;
      --slot;
    }
    if (slot < 0) break;
  }
  return acc;
}

namespace {

Element eval_rec(const PlanarTree& t, const AInfAlgebra& alg, std::span<const Element> args,
                 size_t& cursor) {
  if (t.is_leaf()) return args[cursor++];
  std::vector<Element> child_values;
  child_values.reserve(t.children().size());
  for (const PlanarTree& c : t.children()) child_values.push_back(eval_rec(c, alg, args, cursor));
  if (!alg.arity_supported(t.arity())) return Element::zero();
  return apply_multilinear(alg, t.arity(), child_values);
}

}  // namespace

Element evaluate_tree(const PlanarTree& tree, const AInfAlgebra& alg,
                      std::span<const Element> args) {
  if (static_cast<int>(args.size()) != tree.leaf_count())
    throw std::invalid_argument("evaluate_tree: argument count does not match leaves");
  size_t cursor = 0;
  return eval_rec(tree, alg, args, cursor);
}

Element evaluate_tree_basis(const PlanarTree& tree, const AInfAlgebra& alg,
                            std::span<const Monomial> args) {
  std::vector<Element> elems;
  elems.reserve(args.size());
  for (const Monomial& m : args) elems.push_back(Element::monomial(m));
  return evaluate_tree(tree, alg, elems);
}

}  // namespace sudiag
