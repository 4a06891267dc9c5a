#include "gbx/monomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gbx {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int x : e_)
    if (x < 0) throw std::invalid_argument("negative exponent in monomial");
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(static_cast<std::size_t>(nvars), 0)); }

Monomial Monomial::variable(int nvars, int index1, int power) {
  if (index1 < 1 || index1 > nvars) throw std::invalid_argument("variable index out of range");
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index1 - 1)] = power;
  return Monomial(std::move(e));
}

Monomial Monomial::squarefree(int nvars, const std::vector<int>& index_set) {
  std::vector<int> e(static_cast<std::size_t>(nvars), 0);
  for (int i : index_set) {
    if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
    e[static_cast<std::size_t>(i - 1)] = 1;
  }
  return Monomial(std::move(e));
}

long long Monomial::degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0LL);
}

bool Monomial::is_one() const {
  for (int x : e_)
    if (x != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& m) const {
  if (e_.size() != m.e_.size()) throw std::invalid_argument("monomial dimension mismatch");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (e_.size() != m.e_.size()) throw std::invalid_argument("monomial dimension mismatch");
  std::vector<int> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& m) const {
  if (!m.divides(*this)) throw std::invalid_argument("inexact monomial division");
  std::vector<int> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= m.e_[i];
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (e_[i] > 1) os << "^" << e_[i];
    first = false;
  }
  if (first) return "1";
  return os.str();
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial dimension mismatch");
  std::vector<int> e(a.exponents());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = std::max(e[i], b.exponents()[i]);
  return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("monomial dimension mismatch");
  for (int i = 0; i < a.nvars(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

int TermOrder::compare(const Monomial& u, const Monomial& v) const {
  if (u.nvars() != nvars || v.nvars() != nvars)
    throw std::invalid_argument("monomial dimension does not match term order");
  if (kind == OrderKind::deglex) {
    const long long du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv ? -1 : 1;
  }
  // lex with variable 1 most significant
  for (int i = 0; i < nvars; ++i) {
    if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace gbx
