// Recursive-descent parser for generator lists:
//
//   ideal          := term ("," term)*
//   term           := signed-product (("+" | "-") signed-product)*
//   signed-product := ["-"] factor ("*" factor)*
//   factor         := integer | variable ["^" n] | "(" term ")" ["^" n]

#include <cctype>
#include <map>

#include "lefschetz/errors.hpp"
#include "lefschetz/ideal.hpp"

namespace lefschetz::algebra {

namespace {

// Possibly inhomogeneous intermediate value.
using Sparse = std::map<Monomial, mpq_class, CanonicalOrder>;

void accumulate(Sparse& into, const Monomial& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = into.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) into.erase(it);
  }
}

Sparse multiply(const Sparse& a, const Sparse& b) {
  Sparse out;
  for (const auto& [m1, c1] : a) {
    for (const auto& [m2, c2] : b) accumulate(out, m1 * m2, c1 * c2);
  }
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& variables)
      : text_(text), variables_(variables) {}

  std::vector<std::pair<Sparse, std::size_t>> ideal() {
    std::vector<std::pair<Sparse, std::size_t>> out;
    do {
      skip_space();
      const std::size_t start = pos_;
      out.emplace_back(term(), start);
    } while (consume(','));
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

  Sparse single() {
    Sparse p = term();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool consume(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Sparse constant(const mpq_class& c) const {
    Sparse out;
    accumulate(out, Monomial::one(variables_.size()), c);
    return out;
  }

  Sparse term() {
    Sparse sum = signed_product();
    while (true) {
      skip_space();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-')) break;
      const bool minus = text_[pos_] == '-';
      ++pos_;
      Sparse next = signed_product();
      for (const auto& [m, c] : next) accumulate(sum, m, minus ? mpq_class(-c) : c);
    }
    return sum;
  }

  Sparse signed_product() {
    const bool negate = consume('-');
    Sparse product = factor();
    while (consume('*')) product = multiply(product, factor());
    if (negate) {
      for (auto& [m, c] : product) c = -c;
    }
    return product;
  }

  Sparse factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return constant(mpq_class(integer()));
    }
    if (c == '(') {
      ++pos_;
      Sparse inner = term();
      if (!consume(')')) fail("expected ')'");
      return power_of(std::move(inner));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      std::size_t index = variables_.size();
      for (std::size_t i = 0; i < variables_.size(); ++i) {
        if (variables_[i] == name) index = i;
      }
      if (index == variables_.size()) {
        throw ParseError("unknown variable '" + name + "'", start);
      }
      Sparse v;
      accumulate(v, Monomial::variable(variables_.size(), index), 1);
      return power_of(std::move(v));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Sparse power_of(Sparse base) {
    if (!consume('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    const mpz_class e = integer();
    if (e < 1 || e > 1000) throw ParseError("exponent must be a positive integer up to 1000", at);
    Sparse result = constant(1);
    for (long i = 0; i < e.get_si(); ++i) result = multiply(result, base);
    return result;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
};

HomogeneousPolynomial to_homogeneous(const Sparse& p, std::size_t num_vars,
                                     const arith::FieldSpec& field, std::size_t position) {
  Sparse reduced;
  for (const auto& [m, c] : p) accumulate(reduced, m, field.reduce(c));
  if (reduced.empty()) {
    throw DomainError("generator at position " + std::to_string(position) + " vanishes in " +
                      field.name());
  }
  const int degree = reduced.begin()->first.degree();
  HomogeneousPolynomial out(num_vars, degree);
  for (const auto& [m, c] : reduced) {
    if (m.degree() != degree) {
      throw DomainError("inhomogeneous generator at position " + std::to_string(position));
    }
    out.add_term(m, c);
  }
  return out;
}

}  // namespace

HomogeneousIdeal parse_ideal(std::string_view text, const std::vector<std::string>& variables,
                             const arith::FieldSpec& field) {
  Parser parser(text, variables);
  std::vector<HomogeneousPolynomial> gens;
  for (const auto& [p, position] : parser.ideal()) {
    gens.push_back(to_homogeneous(p, variables.size(), field, position));
  }
  return HomogeneousIdeal(variables.size(), std::move(gens));
}

HomogeneousPolynomial parse_polynomial(std::string_view text,
                                       const std::vector<std::string>& variables,
                                       const arith::FieldSpec& field) {
  Parser parser(text, variables);
  return to_homogeneous(parser.single(), variables.size(), field, 0);
}

}  // namespace lefschetz::algebra
