#ifndef GBX_POLYNOMIAL_HPP
#define GBX_POLYNOMIAL_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbx/monomial.hpp"

namespace gbx {

// Sparse multivariate polynomial over an exact coefficient field K.
// K must provide +, -, *, unary -, ==, is_zero(), inverse(), zero_like(),
// one_like() and str(); elements carry their own field context (modulus,
// cyclotomic order), and every polynomial keeps a zero of its field so that
// empty polynomials still know where they live. No zero coefficient is ever
// stored.
template <class K>
class Polynomial {
 public:
  using TermMap = std::map<Monomial, K, MonomialLexLess>;

  Polynomial(int nvars, const K& field_witness)
      : n_(nvars), zero_(field_witness.zero_like()) {}

  static Polynomial constant(int nvars, const K& c) {
    Polynomial f(nvars, c);
    f.add_term(Monomial::one(nvars), c);
    return f;
  }

  static Polynomial term(const Monomial& m, const K& c) {
    Polynomial f(m.nvars(), c);
    f.add_term(m, c);
    return f;
  }

  int nvars() const { return n_; }
  const K& field_zero() const { return zero_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }

  void add_term(const Monomial& m, const K& c) {
    if (m.nvars() != n_) throw std::invalid_argument("term dimension mismatch");
    if (c.is_zero()) return;
    auto it = t_.find(m);
    if (it == t_.end()) {
      t_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  long long degree() const {  // -1 for the zero polynomial
    long long d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, m.degree());
    return d;
  }

  K coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? zero_ : it->second;
  }

  std::pair<Monomial, K> leading_term(const TermOrder& order) const {
    if (t_.empty()) throw std::domain_error("leading term of the zero polynomial");
    auto best = t_.begin();
    for (auto it = std::next(t_.begin()); it != t_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  Monomial leading_monomial(const TermOrder& order) const { return leading_term(order).first; }

  K evaluate(const std::vector<K>& point) const {
    if (static_cast<int>(point.size()) != n_)
      throw std::invalid_argument("evaluation point dimension mismatch");
    K acc = zero_;
    for (const auto& [m, c] : t_) {
      K prod = c;
      for (int i = 0; i < n_; ++i) {
        for (int k = 0; k < m[i]; ++k) prod *= point[static_cast<std::size_t>(i)];
        if (prod.is_zero()) break;
      }
      acc += prod;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  Polynomial operator-() const {
    Polynomial r(n_, zero_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(n_, zero_);
    for (const auto& [ma, ca] : t_)
      for (const auto& [mb, cb] : o.t_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  // c * m * f
  Polynomial times_term(const Monomial& m, const K& c) const {
    Polynomial r(n_, zero_);
    if (c.is_zero()) return r;
    for (const auto& [mm, cc] : t_) r.t_.emplace(mm * m, cc * c);
    return r;
  }

  Polynomial scaled(const K& c) const { return times_term(Monomial::one(n_), c); }

  // Leading coefficient scaled to 1 under `order`.
  Polynomial monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    return scaled(leading_term(order).second.inverse());
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
      if (!first) os << " + ";
      os << it->second.str();
      if (!it->first.is_one()) os << "*" << it->first.str();
      first = false;
    }
    return os.str();
  }

 private:
  void check_compatible(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial dimension mismatch");
  }

  int n_;
  K zero_;
  TermMap t_;
};

// Normal form of f modulo the divisor list G: repeatedly eliminates the
// largest reducible monomial, always dividing by the G-element whose leading
// monomial is smallest under `order` among those that divide it. No monomial
// of the result is divisible by any leading monomial of G.
template <class K>
Polynomial<K> reduce(const Polynomial<K>& f, const std::vector<Polynomial<K>>& basis,
                     const TermOrder& order) {
  struct Divisor {
    Monomial lm;
    K lc;
    const Polynomial<K>* g;
  };
  std::vector<Divisor> divisors;
  divisors.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("zero polynomial in divisor list");
    auto [lm, lc] = g.leading_term(order);
    divisors.push_back({lm, lc, &g});
  }

  Polynomial<K> remainder(f.nvars(), f.field_zero());
  Polynomial<K> work = f;
  while (!work.is_zero()) {
    auto [m, c] = work.leading_term(order);
    const Divisor* best = nullptr;
    for (const auto& d : divisors) {
      if (!d.lm.divides(m)) continue;
      if (best == nullptr || order.less(d.lm, best->lm)) best = &d;
    }
    if (best == nullptr) {
      remainder.add_term(m, c);
      work.add_term(m, -c);
    } else {
      work -= best->g->times_term(m / best->lm, c * best->lc.inverse());
    }
  }
  return remainder;
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                           const TermOrder& order) {
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("s-polynomial of a zero polynomial");
  const auto [mf, cf] = f.leading_term(order);
  const auto [mg, cg] = g.leading_term(order);
  const Monomial l = lcm(mf, mg);
  return f.times_term(l / mf, cf.inverse()) - g.times_term(l / mg, cg.inverse());
}

// sigma_{J,i}: the i-th elementary symmetric polynomial of the variables x_j,
// j in J (1-based index set), inside K[x_1..x_n].
template <class K>
Polynomial<K> elementary_symmetric(const std::vector<int>& index_set, int i, int nvars,
                                   const K& witness) {
  const int m = static_cast<int>(index_set.size());
  if (i < 0 || i > m) throw std::invalid_argument("elementary symmetric index out of range");
  for (int v : index_set)
    if (v < 1 || v > nvars) throw std::invalid_argument("variable index out of range");
  for (std::size_t a = 0; a < index_set.size(); ++a)
    for (std::size_t b = a + 1; b < index_set.size(); ++b)
      if (index_set[a] == index_set[b])
        throw std::invalid_argument("repeated variable index in J");
  Polynomial<K> r(nvars, witness);
  const K one = witness.one_like();
  std::vector<int> pick(static_cast<std::size_t>(i));
  // iterate over all i-subsets of index_set in lexicographic position order
  auto emit = [&]() {
    std::vector<int> vars;
    vars.reserve(pick.size());
    for (int pos : pick) vars.push_back(index_set[static_cast<std::size_t>(pos)]);
    r.add_term(Monomial::squarefree(nvars, vars), one);
  };
  for (int k = 0; k < i; ++k) pick[static_cast<std::size_t>(k)] = k;
  while (true) {
    emit();
    int k = i - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == m - i + k) --k;
    if (k < 0) break;
    ++pick[static_cast<std::size_t>(k)];
    for (int l = k + 1; l < i; ++l)
      pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
  }
  return r;
}

}  // namespace gbx

#endif
