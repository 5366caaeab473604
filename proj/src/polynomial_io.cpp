#include <cctype>
#include <sstream>

#include "gsd/polynomial.hpp"

namespace gsd {

VariableNames VariableNames::matrix(int rows, int cols) {
  VariableNames n;
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) n.names_.push_back("x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  return n;
}

VariableNames VariableNames::indexed(std::string prefix, int count) {
  VariableNames n;
  for (int k = 1; k <= count; ++k) n.names_.push_back(prefix + "_{" + std::to_string(k) + "}");
  return n;
}

std::optional<int> VariableNames::lookup(const std::string& name) const {
  for (std::size_t v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return static_cast<int>(v);
  return std::nullopt;
}

std::string monomial_to_string(const Monomial& m, const VariableNames& names) {
  if (m.is_one()) return "1";
  std::string s;
  for (int v = 0; v < names.size(); ++v) {
    if (m[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += names.name(v);
    if (m[v] > 1) s += "^" + std::to_string(m[v]);
  }
  return s;
}

template <class F>
std::string to_string(const Polynomial<F>& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = p.field().to_string(t.coeff);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (t.monomial.is_one()) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += monomial_to_string(t.monomial, names);
    }
  }
  return out;
}

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const std::string& text, const VariableNames& names) : text_(text), names_(names) {}

  template <class F>
  Polynomial<F> parse(const F& field) {
    using Term = typename Polynomial<F>::Term;
    std::vector<Term> terms;
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      bool negative = false;
      skip_space();
      if (peek() == '+' || peek() == '-') {
        negative = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip_space();
      typename F::Element coeff = field.one();
      Monomial mono;
      bool have_factor = false;
      while (true) {
        skip_space();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          coeff = field.mul(coeff, field.parse(read_number()));
        } else {
          std::string name = read_name();
          auto v = names_.lookup(name);
          if (!v) fail("unknown variable '" + name + "'");
          int e = 1;
          skip_space();
          if (peek() == '^') {
            ++pos_;
            skip_space();
            e = std::stoi(read_number());
          }
          for (int k = 0; k < e; ++k) mono = mono.times_variable(*v);
        }
        have_factor = true;
        skip_space();
        if (peek() != '*') break;
        ++pos_;
      }
      if (!have_factor) fail("empty term");
      terms.push_back({mono, negative ? field.neg(coeff) : coeff});
      skip_space();
    }
    return Polynomial<F>::from_terms(field, names_.size(), std::move(terms));
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string read_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
    if (start == pos_) fail("expected a number");
    return text_.substr(start, pos_ - start);
  }
  std::string read_name() {
    std::size_t start = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable or coefficient");
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (peek() == '{') {
      while (pos_ < text_.size() && text_[pos_] != '}') ++pos_;
      if (peek() != '}') fail("unterminated variable subscript");
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  const std::string& text_;
  const VariableNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class F>
Polynomial<F> parse_polynomial(const std::string& text, const F& field, const VariableNames& names) {
  PolynomialParser parser(text, names);
  return parser.parse(field);
}

template std::string to_string(const Polynomial<PrimeField>&, const VariableNames&);
template std::string to_string(const Polynomial<RationalField>&, const VariableNames&);
template Polynomial<PrimeField> parse_polynomial(const std::string&, const PrimeField&, const VariableNames&);
template Polynomial<RationalField> parse_polynomial(const std::string&, const RationalField&, const VariableNames&);

}  // namespace gsd
