#include "sudiag/element.hpp"

#include <algorithm>
#include <sstream>

namespace sudiag {

Monomial Monomial::unit(int nfactors) {
  Monomial m;
  m.factors = static_cast<std::uint8_t>(nfactors);
  return m;
}

Monomial Monomial::single(int eps, int ypow) {
  Monomial m;
  m.factors = 1;
  m.eps[0] = static_cast<std::uint8_t>(eps);
  m.ypow[0] = static_cast<std::uint8_t>(ypow);
  return m;
}

Monomial Monomial::tensor(int eps1, int ypow1, int eps2, int ypow2) {
  Monomial m;
  m.factors = 2;
  m.eps[0] = static_cast<std::uint8_t>(eps1);
  m.eps[1] = static_cast<std::uint8_t>(eps2);
  m.ypow[0] = static_cast<std::uint8_t>(ypow1);
  m.ypow[1] = static_cast<std::uint8_t>(ypow2);
  return m;
}

Monomial Monomial::eps_pattern() const {
  Monomial m = *this;
  m.ypow[0] = m.ypow[1] = 0;
  return m;
}

bool multiply(const Monomial& a, const Monomial& b, Monomial& out) {
  if (a.factors != b.factors) throw std::invalid_argument("multiply: factor count mismatch");
  Monomial r;
  r.factors = a.factors;
  for (int f = 0; f < a.factors; ++f) {
    if (a.eps[f] && b.eps[f]) return false;  // x^2 = 0
    r.eps[f] = static_cast<std::uint8_t>(a.eps[f] + b.eps[f]);
    r.ypow[f] = static_cast<std::uint8_t>(a.ypow[f] + b.ypow[f]);
  }
  out = r;
  return true;
}

std::string Monomial::to_text() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string& var, int e) {
    if (e == 0) return;
    if (!first) os << "*";
    os << var;
    if (e > 1) os << "^" << e;
    first = false;
  };
  if (factors == 1) {
    emit("x", eps[0]);
    emit("y", ypow[0]);
  } else {
    emit("x1", eps[0]);
    emit("x2", eps[1]);
    emit("y1", ypow[0]);
    emit("y2", ypow[1]);
  }
  if (first) return "1";
  return os.str();
}

namespace {

void apply_token(Monomial& m, const std::string& tok, int nfactors) {
  if (tok == "1") return;
  std::string var = tok;
  int exp = 1;
  if (auto caret = tok.find('^'); caret != std::string::npos) {
    var = tok.substr(0, caret);
    try {
      exp = std::stoi(tok.substr(caret + 1));
    } catch (...) {
      throw std::invalid_argument("monomial: bad exponent in token '" + tok + "'");
    }
    if (exp < 0) throw std::invalid_argument("monomial: negative exponent in '" + tok + "'");
  }
  int factor = -1;
  bool is_x = false;
  if (var == "x" || var == "x1") {
    factor = 0;
    is_x = true;
  } else if (var == "z" || var == "x2") {
    factor = 1;
    is_x = true;
  } else if (var == "y" || var == "y1") {
    factor = 0;
  } else if (var == "w" || var == "y2") {
    factor = 1;
  } else {
    throw std::invalid_argument("monomial: unknown token '" + tok + "'");
  }
  if (factor >= nfactors)
    throw std::invalid_argument("monomial: token '" + tok + "' needs a tensor context");
  if (is_x) {
    if (m.eps[factor] + exp > 1) throw std::invalid_argument("monomial: x^2 = 0 in '" + tok + "'");
    m.eps[factor] = static_cast<std::uint8_t>(m.eps[factor] + exp);
  } else {
    m.ypow[factor] = static_cast<std::uint8_t>(m.ypow[factor] + exp);
  }
}

}  // namespace

Monomial Monomial::parse_text(const std::string& s, int nfactors) {
  if (s.empty()) throw std::invalid_argument("monomial: empty string");
  Monomial m = Monomial::unit(nfactors);
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, '*')) {
    // tolerate surrounding spaces
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty()) throw std::invalid_argument("monomial: empty token in '" + s + "'");
    apply_token(m, tok, nfactors);
  }
  return m;
}

Element Element::monomial(const Monomial& m, std::uint32_t coeff) {
  Element e;
  if (coeff != 0) e.terms_.emplace_back(m, coeff);
  return e;
}

void Element::add_term(const Monomial& m, std::uint32_t coeff, const Fp& field) {
  coeff %= field.p;
  if (coeff == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const auto& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) {
    it->second = field.add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {m, coeff});
  }
}

void Element::add(const Element& other, const Fp& field) {
  for (const auto& [m, c] : other.terms_) add_term(m, c, field);
}

void Element::scale(std::uint32_t c, const Fp& field) {
  c %= field.p;
  if (c == 0) {
    terms_.clear();
    return;
  }
  for (auto& [m, coeff] : terms_) coeff = field.mul(coeff, c);
}

std::string Element::to_text() const {
  if (terms_.empty()) return "0";
  // sort presentation by degree, then pack order
  std::vector<std::pair<Monomial, std::uint32_t>> sorted = terms_;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    if (!first) os << " + ";
    if (c != 1) os << c << "*";
    os << m.to_text();
    first = false;
  }
  return os.str();
}

Element Element::parse_text(const std::string& s, int nfactors, const Fp& field) {
  Element e;
  if (s == "0") return e;
  std::string part;
  std::istringstream is(s);
  while (std::getline(is, part, '+')) {
    while (!part.empty() && part.front() == ' ') part.erase(part.begin());
    while (!part.empty() && part.back() == ' ') part.pop_back();
    if (part.empty()) throw std::invalid_argument("element: empty summand in '" + s + "'");
    std::uint32_t coeff = 1;
    std::string mono = part;
    if (auto star = part.find('*');
        star != std::string::npos && part.find_first_not_of("0123456789") == star) {
      coeff = static_cast<std::uint32_t>(std::stoul(part.substr(0, star)));
      mono = part.substr(star + 1);
    }
    e.add_term(Monomial::parse_text(mono, nfactors), coeff, field);
  }
  return e;
}

Element tensor_elements(const Element& a, const Element& b, const Fp& field) {
  Element out;
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.factors != 1) throw std::invalid_argument("tensor_elements: factors must be single");
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = Monomial::tensor(ma.eps[0], ma.ypow[0], mb.eps[0], mb.ypow[0]);
      out.add_term(m, field.mul(ca, cb), field);
    }
  }
  return out;
}

}  // namespace sudiag
