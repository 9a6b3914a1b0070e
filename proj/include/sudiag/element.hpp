#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sudiag/fp.hpp"

namespace sudiag {

// Basis monomial of Lambda(x) (x) k[y], or of the tensor square of such a ring.
// factors == 1: x^eps[0] * y^ypow[0].
// factors == 2: x1^eps[0] * x2^eps[1] * y1^ypow[0] * y2^ypow[1].
struct Monomial {
  std::uint8_t factors = 1;
  std::uint8_t eps[2] = {0, 0};
  std::uint8_t ypow[2] = {0, 0};

  static Monomial unit(int nfactors);
  static Monomial single(int eps, int ypow);
  static Monomial tensor(int eps1, int ypow1, int eps2, int ypow2);

  int degree() const {
    int d = 0;
    for (int f = 0; f < factors; ++f) d += eps[f] + 2 * ypow[f];
    return d;
  }
  // Odd part only (pattern of exterior generators); y-powers zeroed.
  Monomial eps_pattern() const;

  std::uint32_t pack() const {
    return (std::uint32_t{factors} << 24) | (std::uint32_t{eps[0]} << 20) |
           (std::uint32_t{eps[1]} << 16) | (std::uint32_t{ypow[0]} << 8) | ypow[1];
  }
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.pack() <=> b.pack(); }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.pack() == b.pack(); }

  std::string to_text() const;
  // Parses the CLI grammar: '*'-joined tokens x1, x2, y1^k, y2^k (aliases x, z, y^k, w^k),
  // "1" for the unit.
  static Monomial parse_text(const std::string& s, int nfactors);
};

// Multiplies in the ring; returns false (and leaves `out` untouched) when x^2 = 0 kills it.
bool multiply(const Monomial& a, const Monomial& b, Monomial& out);

// Finite F_p-linear combination of basis monomials; zero coefficients are never stored.
class Element {
 public:
  Element() = default;
  static Element zero() { return {}; }
  static Element monomial(const Monomial& m, std::uint32_t coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<std::pair<Monomial, std::uint32_t>>& terms() const { return terms_; }

  void add_term(const Monomial& m, std::uint32_t coeff, const Fp& field);
  void add(const Element& other, const Fp& field);
  void scale(std::uint32_t c, const Fp& field);

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  std::string to_text() const;  // "0", "1", "x1*y1^2 + y2", ...
  static Element parse_text(const std::string& s, int nfactors, const Fp& field);

 private:
  // Sorted by monomial pack order.
  std::vector<std::pair<Monomial, std::uint32_t>> terms_;
};

// a (x) b for elements of the two tensor factors; sign = +1 (callers supply Koszul
// signs separately when experimenting with odd characteristic).
Element tensor_elements(const Element& a, const Element& b, const Fp& field);

}  // namespace sudiag
