#include "sudiag/tensor.hpp"

#include <algorithm>
#include <array>

namespace sudiag {

namespace {
const AInfAlgebra& require_factor(const std::shared_ptr<const AInfAlgebra>& p) {
  if (!p) throw std::invalid_argument("TensorAlgebra: missing factor");
  return *p;
}
}  // namespace

TensorAlgebra::TensorAlgebra(std::shared_ptr<const AInfAlgebra> a,
                             std::shared_ptr<const AInfAlgebra> b, int max_arity,
                             std::shared_ptr<DeltaKCache> cache, TensorSign sign)
    : AInfAlgebra(require_factor(a).field().p,
                  std::min(require_factor(a).ycap(), require_factor(b).ycap()), 2),
      a_(std::move(a)),
      b_(std::move(b)),
      max_arity_(max_arity),
      cache_(std::move(cache)),
      sign_(sign) {
  if (a_->field().p != b_->field().p)
    throw std::invalid_argument("TensorAlgebra: factors over different characteristics");
  if (a_->nfactors() != 1 || b_->nfactors() != 1)
    throw std::invalid_argument("TensorAlgebra: factors must be single algebras");
  if (max_arity_ < 2) throw std::invalid_argument("TensorAlgebra: max arity must be >= 2");
  if (!cache_) cache_ = std::make_shared<DeltaKCache>();
  if (max_arity_ > cache_->cap() + 1)
    throw resource_limit_error("TensorAlgebra: max arity exceeds the diagonal cap");
  arity_data_.resize(static_cast<size_t>(max_arity_ + 1));
  for (auto& p : arity_data_) p = std::make_unique<ArityData>();
}

const std::vector<TensorAlgebra::WeightedTerm>& TensorAlgebra::surviving_terms(int k) const {
  if (k < 2 || k > max_arity_) throw std::invalid_argument("surviving_terms: arity out of range");
  ArityData& data = *arity_data_[static_cast<size_t>(k)];
  std::call_once(data.once, [&] {
    const Fp& field = this->field();
    for (const DiagonalTermK& term : cache_->terms(k)) {
      std::uint32_t coeff = field.reduce(term.multiplicity);
      if (coeff == 0) continue;
      bool alive = true;
      for (int ar : term.left.node_arities())
        if (!a_->arity_supported(ar)) {
          alive = false;
          break;
        }
      if (alive)
        for (int ar : term.right.node_arities())
          if (!b_->arity_supported(ar)) {
            alive = false;
            break;
          }
      if (alive) data.terms.push_back(WeightedTerm{term.left, term.right, coeff});
    }
  });
  return data.terms;
}

void TensorAlgebra::corrupt_entry(int k, std::vector<Monomial> args, Element value) {
  corruptions_.push_back(Corruption{k, std::move(args), std::move(value)});
  for (auto& shard : memo_) shard.clear();
}

Element TensorAlgebra::compute_basis(int k, std::span<const Monomial> args) const {
  const Fp& field = this->field();
  std::vector<Element> aparts, bparts;
  aparts.reserve(args.size());
  bparts.reserve(args.size());
  for (const Monomial& m : args) {
    aparts.push_back(Element::monomial(Monomial::single(m.eps[0], m.ypow[0])));
    bparts.push_back(Element::monomial(Monomial::single(m.eps[1], m.ypow[1])));
  }
  std::uint32_t sign = 1;
  if (sign_ == TensorSign::koszul_experimental && field.p != 2) {
    // (f (x) g) applied to a1 (x) b1, ..., ak (x) bk: each b_i crosses every a_j, i < j
    long cross = 0;
    for (size_t i = 0; i < args.size(); ++i)
      for (size_t j = i + 1; j < args.size(); ++j)
        cross += (args[i].eps[1] + 2 * args[i].ypow[1]) * (args[j].eps[0] + 2 * args[j].ypow[0]);
    if (cross % 2) sign = field.p - 1;
  }
  Element acc;
  for (const WeightedTerm& term : surviving_terms(k)) {
    Element left = evaluate_tree(term.left, *a_, aparts);
    if (left.is_zero()) continue;
    Element right = evaluate_tree(term.right, *b_, bparts);
    if (right.is_zero()) continue;
    Element prod = tensor_elements(left, right, field);
    prod.scale(field.mul(term.coeff, sign), field);
    acc.add(prod, field);
  }
  return acc;
}

Element TensorAlgebra::apply_impl(int k, std::span<const Monomial> args) const {
  for (const Corruption& c : corruptions_)
    if (c.arity == k && std::equal(c.args.begin(), c.args.end(), args.begin(), args.end()))
      return c.value;

  // memo key: 12 bits per argument (eps pair + two y powers <= 30), 5 bits arity
  bool packable = args.size() <= 10;
  Key key{static_cast<unsigned __int128>(k)};
  if (packable) {
    for (const Monomial& m : args) {
      unsigned __int128 packed = static_cast<unsigned>(m.eps[0]) |
                                 (static_cast<unsigned>(m.eps[1]) << 1) |
                                 (static_cast<unsigned>(m.ypow[0]) << 2) |
                                 (static_cast<unsigned>(m.ypow[1]) << 7);
      key.v = (key.v << 12) | packed;
    }
    key.v = (key.v << 5) | static_cast<unsigned>(k);
    size_t shard = KeyHash{}(key) % kShards;
    std::lock_guard<std::mutex> lock(memo_mu_[shard]);
    auto it = memo_[shard].find(key);
    if (it != memo_[shard].end()) return it->second;
  }
  Element out = compute_basis(k, args);
  if (packable) {
    size_t shard = KeyHash{}(key) % kShards;
    std::lock_guard<std::mutex> lock(memo_mu_[shard]);
    memo_[shard].emplace(key, out);
  }
  return out;
}

}  // namespace sudiag
