#ifndef GBX_MONOMIAL_HPP
#define GBX_MONOMIAL_HPP

#include <string>
#include <vector>

namespace gbx {

// Monomial in n variables, stored as its exponent vector. Index 0 holds the
// exponent of x_1.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int nvars);
  static Monomial variable(int nvars, int index1, int power = 1);  // x_{index1}^power
  // Squarefree monomial x_U for a 1-based index set U.
  static Monomial squarefree(int nvars, const std::vector<int>& index_set);

  int nvars() const { return static_cast<int>(e_.size()); }
  long long degree() const;
  const std::vector<int>& exponents() const { return e_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  bool is_one() const;

  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  Monomial operator/(const Monomial& m) const;  // exact division; throws otherwise

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

  std::string str() const;  // "x1^2*x2", "1" for the empty monomial

 private:
  std::vector<int> e_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

enum class OrderKind { lex, deglex };

// Term order on monomials with x_n < ... < x_1 (variable 1 most significant).
// lex: the first differing exponent decides; deglex: total degree first.
struct TermOrder {
  OrderKind kind = OrderKind::deglex;
  int nvars = 0;

  // -1, 0, +1 for u < v, u == v, u > v. Throws on dimension mismatch.
  int compare(const Monomial& u, const Monomial& v) const;
  bool less(const Monomial& u, const Monomial& v) const { return compare(u, v) < 0; }
  bool greater(const Monomial& u, const Monomial& v) const { return compare(u, v) > 0; }

  std::string name() const { return kind == OrderKind::lex ? "lex" : "deglex"; }
};

// Fixed comparator for canonical term storage, independent of the active
// term order.
struct MonomialLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exponents() < b.exponents();
  }
};

}  // namespace gbx

#endif
