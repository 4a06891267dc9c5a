#include "gbx/io.hpp"

#include <cctype>

namespace gbx {

FieldTag FieldTag::parse(const std::string& text) {
  auto numeric_tail = [&](std::size_t from) -> long long {
    if (from >= text.size()) throw parse_error("missing prime in field tag '" + text + "'");
    for (std::size_t i = from; i < text.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("bad field tag '" + text + "'");
    return std::stoll(text.substr(from));
  };
  FieldTag tag;
  if (text == "rational" || text == "q" || text == "Q") {
    tag.kind = Kind::rational;
    return tag;
  }
  if (text.rfind("fp:", 0) == 0 || text.rfind("cyc:", 0) == 0 || text.rfind("cyc", 0) == 0 ||
      (text.size() >= 2 && text[0] == 'f' && std::isdigit(static_cast<unsigned char>(text[1])))) {
    if (text.rfind("cyc", 0) == 0) {
      tag.kind = Kind::cyclotomic;
      tag.p = numeric_tail(text[3] == ':' ? 4 : 3);
    } else {
      tag.kind = Kind::fp;
      tag.p = numeric_tail(text[1] == 'p' ? 3 : 1);
    }
    if (!Fp::is_prime(tag.p)) throw parse_error("field tag '" + text + "' needs a prime");
    return tag;
  }
  throw parse_error("unknown field tag '" + text + "'");
}

std::string FieldTag::canonical() const {
  switch (kind) {
    case Kind::rational:
      return "rational";
    case Kind::fp:
      return "f" + std::to_string(p);
    case Kind::cyclotomic:
      return "cyc" + std::to_string(p);
  }
  return "rational";
}

CoefficientWitness make_witness(const FieldTag& tag) {
  switch (tag.kind) {
    case FieldTag::Kind::rational:
      return Rational();
    case FieldTag::Kind::fp:
      return Fp(0, tag.p);
    case FieldTag::Kind::cyclotomic:
      return Cyclotomic(tag.p);
  }
  return Rational();
}

TermOrder parse_order(const std::string& name, int nvars) {
  if (name == "lex") return TermOrder{OrderKind::lex, nvars};
  if (name == "deglex") return TermOrder{OrderKind::deglex, nvars};
  throw parse_error("unknown term order '" + name + "'");
}

Rational parse_coefficient(const std::string& text, const Rational&) {
  return Rational::parse(text);
}

Fp parse_coefficient(const std::string& text, const Fp& witness) {
  return make_from_rational(Rational::parse(text), witness);
}

Cyclotomic parse_coefficient(const std::string& text, const Cyclotomic& witness) {
  return Cyclotomic::parse(witness.p(), text);
}

Fp make_from_rational(const Rational& r, const Fp& witness) {
  const Fp num = make_from_integer(r.numerator(), witness);
  const Fp den = make_from_integer(r.denominator(), witness);
  if (den.is_zero()) throw parse_error("denominator divisible by the field characteristic");
  return num * den.inverse();
}

namespace detail {

bool parse_field_factor(const std::string&, std::size_t&, Rational&) { return false; }
bool parse_field_factor(const std::string&, std::size_t&, Fp&) { return false; }

bool parse_field_factor(const std::string& s, std::size_t& i, Cyclotomic& coef) {
  if (i >= s.size() || s[i] != 'w') return false;
  std::size_t j = i + 1;
  long long e = 1;
  if (j < s.size() && s[j] == '^') {
    ++j;
    std::size_t k = j;
    while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
    if (k == j) throw parse_error("missing exponent after 'w^'");
    e = std::stoll(s.substr(j, k - j));
    j = k;
  }
  coef *= Cyclotomic::omega(coef.p(), e);
  i = j;
  return true;
}

}  // namespace detail

}  // namespace gbx
