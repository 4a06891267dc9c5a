#ifndef GBX_IO_HPP
#define GBX_IO_HPP

#include <algorithm>
#include <cctype>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gbx/exactnum.hpp"
#include "gbx/pointideal.hpp"

namespace gbx {

// Coefficient field named on the command line or in input files:
// "rational", "f<p>" (also "fp:<p>"), "cyc<p>" (also "cyc:<p>").
struct FieldTag {
  enum class Kind { rational, fp, cyclotomic };
  Kind kind = Kind::rational;
  long long p = 0;

  static FieldTag parse(const std::string& text);
  std::string canonical() const;
};

using CoefficientWitness = std::variant<Rational, Fp, Cyclotomic>;
CoefficientWitness make_witness(const FieldTag& tag);

TermOrder parse_order(const std::string& name, int nvars);

// --- coefficient text -------------------------------------------------------

inline std::string coefficient_text(const Rational& c) { return c.str(); }
inline std::string coefficient_text(const Fp& c) { return c.str(); }
inline std::string coefficient_text(const Cyclotomic& c) { return c.str(); }

Rational parse_coefficient(const std::string& text, const Rational& witness);
Fp parse_coefficient(const std::string& text, const Fp& witness);
Cyclotomic parse_coefficient(const std::string& text, const Cyclotomic& witness);

// Rational embedded into the coefficient field; for F_p the denominator must
// be invertible.
inline Rational make_from_rational(const Rational& r, const Rational&) { return r; }
Fp make_from_rational(const Rational& r, const Fp& witness);
inline Cyclotomic make_from_rational(const Rational& r, const Cyclotomic& witness) {
  return Cyclotomic(witness.p(), r);
}

// Deterministic element order, used only to sort input points for
// reproducible runs.
inline int compare_elements(const Rational& a, const Rational& b) {
  return cmp(a.value(), b.value());
}
inline int compare_elements(const Fp& a, const Fp& b) {
  return a.value() < b.value() ? -1 : (a.value() > b.value() ? 1 : 0);
}
inline int compare_elements(const Cyclotomic& a, const Cyclotomic& b) {
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const int c = cmp(a.coeffs()[i].value(), b.coeffs()[i].value());
    if (c != 0) return c;
  }
  return 0;
}

template <class K>
bool point_less(const std::vector<K>& a, const std::vector<K>& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    const int c = compare_elements(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

// --- polynomial text format --------------------------------------------------
// Terms like "x1^2*x2 - 3*x3 + 1"; the '*' is optional; rationals as "a/b";
// cyclotomic coefficients in parentheses, e.g. "(1+w)*x1 - (w)".

namespace detail {
// Extra term factors beyond numbers and variables; only the cyclotomic field
// accepts a bare `w` power.
bool parse_field_factor(const std::string& s, std::size_t& i, Rational& coef);
bool parse_field_factor(const std::string& s, std::size_t& i, Fp& coef);
bool parse_field_factor(const std::string& s, std::size_t& i, Cyclotomic& coef);

inline bool print_as_negative(const Rational& c) { return sgn(c.value()) < 0; }
inline bool print_as_negative(const Fp&) { return false; }
inline bool print_as_negative(const Cyclotomic& c) {
  return c.is_rational() && sgn(c.rational_part().value()) < 0;
}

inline bool needs_parens(const Rational&) { return false; }
inline bool needs_parens(const Fp&) { return false; }
inline bool needs_parens(const Cyclotomic& c) { return !c.is_rational(); }
}  // namespace detail

template <class K>
Polynomial<K> parse_polynomial(const std::string& text, int nvars, const K& witness) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw parse_error("empty polynomial");

  Polynomial<K> out(nvars, witness);
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw parse_error("dangling sign in '" + text + "'");
    K coef = witness.one_like();
    std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
    bool any = false;
    while (i < s.size() && s[i] != '+' && s[i] != '-') {
      if (s[i] == '*') {
        ++i;
        continue;
      }
      if (s[i] == '(') {
        const std::size_t close = s.find(')', i);
        if (close == std::string::npos) throw parse_error("unbalanced '(' in '" + text + "'");
        coef *= parse_coefficient(s.substr(i + 1, close - i - 1), witness);
        i = close + 1;
      } else if (s[i] == 'x') {
        ++i;
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw parse_error("missing variable index in '" + text + "'");
        const int idx = std::stoi(s.substr(i, j - i));
        if (idx < 1 || idx > nvars)
          throw parse_error("variable x" + std::to_string(idx) + " out of range");
        i = j;
        int e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          j = i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          if (j == i) throw parse_error("missing exponent in '" + text + "'");
          e = std::stoi(s.substr(i, j - i));
          i = j;
        }
        exps[static_cast<std::size_t>(idx - 1)] += e;
      } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        std::size_t j = i;
        while (j < s.size() && (std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        coef *= make_from_rational(Rational::parse(s.substr(i, j - i)), witness);
        i = j;
      } else if (detail::parse_field_factor(s, i, coef)) {
        // consumed by the field-specific factor parser
      } else {
        throw parse_error(std::string("unexpected character '") + s[i] + "' in '" + text + "'");
      }
      any = true;
    }
    if (!any) throw parse_error("empty term in '" + text + "'");
    if (sign < 0) coef = -coef;
    out.add_term(Monomial(exps), coef);
  }
  return out;
}

template <class K>
std::string polynomial_text(const Polynomial<K>& f, const TermOrder& order) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, K>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    K shown = c;
    if (first) {
      if (detail::print_as_negative(c)) {
        out += "-";
        shown = -c;
      }
      first = false;
    } else if (detail::print_as_negative(c)) {
      out += " - ";
      shown = -c;
    } else {
      out += " + ";
    }
    const bool unit = shown.is_one();
    if (!unit || m.is_one()) {
      const std::string text = coefficient_text(shown);
      out += detail::needs_parens(shown) ? "(" + text + ")" : text;
      if (!m.is_one()) out += "*";
    }
    if (!m.is_one()) out += m.str();
  }
  return out;
}

// --- JSON forms ---------------------------------------------------------------

template <class K>
nlohmann::json polynomial_json(const Polynomial<K>& f, const TermOrder& order) {
  std::vector<std::pair<Monomial, K>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(),
            [&](const auto& a, const auto& b) { return order.greater(a.first, b.first); });
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [m, c] : terms)
    arr.push_back({{"exp", m.exponents()}, {"coef", coefficient_text(c)}});
  return arr;
}

template <class K>
Polynomial<K> polynomial_from_json(const nlohmann::json& j, int nvars, const K& witness) {
  if (!j.is_array()) throw parse_error("polynomial JSON must be an array of terms");
  Polynomial<K> f(nvars, witness);
  for (const auto& term : j) {
    if (!term.contains("exp") || !term.contains("coef"))
      throw parse_error("polynomial term needs 'exp' and 'coef'");
    std::vector<int> exps = term.at("exp").get<std::vector<int>>();
    if (static_cast<int>(exps.size()) != nvars)
      throw parse_error("term exponent vector has wrong length");
    f.add_term(Monomial(std::move(exps)),
               parse_coefficient(term.at("coef").get<std::string>(), witness));
  }
  return f;
}

template <class K>
nlohmann::json basis_json(const GroebnerBasis<K>& basis, const FieldTag& tag) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& f : basis.polys) polys.push_back(polynomial_json(f, basis.order));
  return {{"field", tag.canonical()},
          {"n", basis.order.nvars},
          {"order", basis.order.name()},
          {"reduced", basis.reduced},
          {"polys", polys}};
}

// Coordinate entry: JSON number (integers) or string parsed by the field.
template <class K>
K coordinate_from_json(const nlohmann::json& v, const K& witness) {
  if (v.is_number_integer())
    return make_from_integer(mpz_class(v.get<long>()), witness);
  if (v.is_string()) return parse_coefficient(v.get<std::string>(), witness);
  throw parse_error("point coordinate must be an integer or a string");
}

template <class K>
std::vector<K> point_from_json(const nlohmann::json& arr, int nvars, const K& witness) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != nvars)
    throw parse_error("point must be an array of length n");
  std::vector<K> pt;
  pt.reserve(arr.size());
  for (const auto& v : arr) pt.push_back(coordinate_from_json(v, witness));
  return pt;
}

template <class K>
PointSet<K> point_set_from_json(const nlohmann::json& j, const K& witness,
                                std::size_t max_points) {
  if (!j.contains("n") || !j.contains("points")) throw parse_error("points file needs 'n' and 'points'");
  const int n = j.at("n").get<int>();
  const auto& arr = j.at("points");
  if (!arr.is_array()) throw parse_error("'points' must be an array");
  if (arr.size() > max_points) throw guard_error("point-set size guard exceeded");
  std::vector<std::vector<K>> pts;
  pts.reserve(arr.size());
  for (const auto& row : arr) pts.push_back(point_from_json(row, n, witness));
  return PointSet<K>(n, std::move(pts));
}

}  // namespace gbx

#endif
