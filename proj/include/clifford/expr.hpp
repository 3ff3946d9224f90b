#ifndef CLIFFORD_EXPR_HPP
#define CLIFFORD_EXPR_HPP

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "clifford/multivector.hpp"

// Expression language for multivectors:
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' nat)?
//   atom   := number | 'i' | 'e' nat | 'rev' '(' expr ')' | '(' expr ')' | '-' atom
//
// Numbers are integers or p/q in the exact domains; the float domains also
// accept decimal and exponent notation. e<k> is the generator v_k.

namespace clifford {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
};

struct ExprNode {
  enum class Kind { number, imaginary, generator, add, sub, mul, pow, neg, rev };

  Kind kind;
  SourcePos pos;
  std::string text;       // number literal
  std::size_t value = 0;  // generator index or exponent
  std::vector<std::unique_ptr<ExprNode>> children;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : src_(src) { advance(); }

  std::unique_ptr<ExprNode> parse() {
    auto e = expr();
    if (tok_.kind != Tok::end) error_at(tok_.pos, "unexpected '" + tok_.text + "'");
    return e;
  }

 private:
  enum class Tok { number, imaginary, generator, rev, plus, minus, star, caret, lparen, rparen, end };
  struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t value = 0;
    SourcePos pos;
  };

  [[noreturn]] static void error_at(SourcePos p, const std::string& what) {
    fail(errc::syntax, p.to_string() + ": " + what);
  }

  char peek(std::size_t ahead = 0) const { return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0'; }

  void bump() {
    if (src_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  static bool digit(char c) { return c >= '0' && c <= '9'; }

  static constexpr std::size_t max_natural = 1'000'000;

  static std::size_t natural(const std::string& text, SourcePos p, const char* what) {
    if (text.size() > 7 || std::stoul(text) > max_natural)
      error_at(p, std::string(what) + " " + text + " exceeds " + std::to_string(max_natural));
    return std::stoul(text);
  }

  std::string digits() {
    std::string s;
    while (digit(peek())) {
      s.push_back(peek());
      bump();
    }
    return s;
  }

  void advance() {
    while (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r') bump();
    tok_ = Token{};
    tok_.pos = pos_;
    char c = peek();
    if (c == '\0') {
      tok_.kind = Tok::end;
      tok_.text = "end of input";
      return;
    }
    if (digit(c) || (c == '.' && digit(peek(1)))) {
      std::string s = digits();
      if (peek() == '.') {
        s.push_back('.');
        bump();
        s += digits();
      }
      if ((peek() == 'e' || peek() == 'E') &&
          (digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && digit(peek(2))))) {
        s.push_back(peek());
        bump();
        if (peek() == '+' || peek() == '-') {
          s.push_back(peek());
          bump();
        }
        s += digits();
      }
      if (peek() == '/') {
        s.push_back('/');
        bump();
        std::string den = digits();
        if (den.empty()) error_at(pos_, "expected denominator after '/'");
        s += den;
      }
      tok_.kind = Tok::number;
      tok_.text = std::move(s);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (std::isalpha(static_cast<unsigned char>(peek()))) {
        word.push_back(peek());
        bump();
      }
      if (word == "e") {
        std::string idx = digits();
        if (idx.empty()) error_at(tok_.pos, "expected a generator index after 'e'");
        tok_.value = natural(idx, tok_.pos, "generator index");
        if (tok_.value == 0) error_at(tok_.pos, "generator indices start at 1");
        tok_.kind = Tok::generator;
        tok_.text = "e" + idx;
        return;
      }
      if (word == "i") {
        tok_.kind = Tok::imaginary;
        tok_.text = word;
        return;
      }
      if (word == "rev") {
        tok_.kind = Tok::rev;
        tok_.text = word;
        return;
      }
      fail(errc::unknown_atom, tok_.pos.to_string() + ": unknown atom '" + word + "'");
    }
    bump();
    tok_.text = std::string(1, c);
    switch (c) {
      case '+': tok_.kind = Tok::plus; return;
      case '-': tok_.kind = Tok::minus; return;
      case '*': tok_.kind = Tok::star; return;
      case '^': tok_.kind = Tok::caret; return;
      case '(': tok_.kind = Tok::lparen; return;
      case ')': tok_.kind = Tok::rparen; return;
      default: error_at(tok_.pos, "unexpected character '" + tok_.text + "'");
    }
  }

  static std::unique_ptr<ExprNode> node(ExprNode::Kind k, SourcePos p) {
    auto n = std::make_unique<ExprNode>();
    n->kind = k;
    n->pos = p;
    return n;
  }

  static std::unique_ptr<ExprNode> binary(ExprNode::Kind k, SourcePos p, std::unique_ptr<ExprNode> l,
                                          std::unique_ptr<ExprNode> r) {
    auto n = node(k, p);
    n->children.push_back(std::move(l));
    n->children.push_back(std::move(r));
    return n;
  }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) error_at(tok_.pos, std::string("expected ") + what + ", found '" + tok_.text + "'");
    advance();
  }

  std::unique_ptr<ExprNode> expr() {
    auto lhs = term();
    while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
      auto k = tok_.kind == Tok::plus ? ExprNode::Kind::add : ExprNode::Kind::sub;
      SourcePos p = tok_.pos;
      advance();
      lhs = binary(k, p, std::move(lhs), term());
    }
    return lhs;
  }

  std::unique_ptr<ExprNode> term() {
    auto lhs = factor();
    while (tok_.kind == Tok::star) {
      SourcePos p = tok_.pos;
      advance();
      lhs = binary(ExprNode::Kind::mul, p, std::move(lhs), factor());
    }
    return lhs;
  }

  std::unique_ptr<ExprNode> factor() {
    auto base = atom();
    if (tok_.kind == Tok::caret) {
      SourcePos p = tok_.pos;
      advance();
      if (tok_.kind != Tok::number || !std::all_of(tok_.text.begin(), tok_.text.end(), digit))
        error_at(tok_.pos, "exponent must be a nonnegative integer");
      auto n = node(ExprNode::Kind::pow, p);
      n->value = natural(tok_.text, tok_.pos, "exponent");
      n->children.push_back(std::move(base));
      advance();
      return n;
    }
    return base;
  }

  std::unique_ptr<ExprNode> atom() {
    SourcePos p = tok_.pos;
    switch (tok_.kind) {
      case Tok::number: {
        auto n = node(ExprNode::Kind::number, p);
        n->text = tok_.text;
        advance();
        return n;
      }
      case Tok::imaginary: {
        advance();
        return node(ExprNode::Kind::imaginary, p);
      }
      case Tok::generator: {
        auto n = node(ExprNode::Kind::generator, p);
        n->value = tok_.value;
        advance();
        return n;
      }
      case Tok::rev: {
        advance();
        expect(Tok::lparen, "'(' after rev");
        auto n = node(ExprNode::Kind::rev, p);
        n->children.push_back(expr());
        expect(Tok::rparen, "')'");
        return n;
      }
      case Tok::lparen: {
        advance();
        auto e = expr();
        expect(Tok::rparen, "')'");
        return e;
      }
      case Tok::minus: {
        advance();
        auto n = node(ExprNode::Kind::neg, p);
        n->children.push_back(atom());
        return n;
      }
      default: error_at(p, "expected an operand, found '" + tok_.text + "'");
    }
  }

  std::string_view src_;
  std::size_t i_ = 0;
  SourcePos pos_;
  Token tok_;
};

template <Scalar S>
S number_value(const ExprNode& n) {
  if constexpr (scalar_traits<S>::exact) {
    if (n.text.find_first_of(".eE") != std::string::npos)
      fail(errc::syntax, n.pos.to_string() + ": decimal literal '" + n.text + "' in an exact domain");
  }
  try {
    return scalar_traits<S>::from_string(n.text);
  } catch (const error& e) {
    fail(errc::syntax, n.pos.to_string() + ": " + e.what());
  }
}

}  // namespace detail

inline std::unique_ptr<ExprNode> parse_expression(std::string_view text) {
  return detail::ExprParser(text).parse();
}

template <Scalar S>
Multivector<S> evaluate(const ExprNode& n, const typename Multivector<S>::signature_ptr& sig) {
  using K = ExprNode::Kind;
  switch (n.kind) {
    case K::number: return Multivector<S>::scalar(detail::number_value<S>(n), sig);
    case K::imaginary:
      if constexpr (scalar_traits<S>::has_imaginary_unit) {
        return Multivector<S>::scalar(scalar_traits<S>::imaginary_unit(), sig);
      } else {
        fail(errc::domain_mismatch, n.pos.to_string() + ": 'i' is not in the " +
                                        std::string(to_string(scalar_traits<S>::domain)) + " domain");
      }
    case K::generator: return Multivector<S>::generator(n.value, sig);
    case K::add: return evaluate<S>(*n.children[0], sig) + evaluate<S>(*n.children[1], sig);
    case K::sub: return evaluate<S>(*n.children[0], sig) - evaluate<S>(*n.children[1], sig);
    case K::mul: return evaluate<S>(*n.children[0], sig) * evaluate<S>(*n.children[1], sig);
    case K::pow: return power(evaluate<S>(*n.children[0], sig), n.value);
    case K::neg: return -evaluate<S>(*n.children[0], sig);
    case K::rev: return reverse(evaluate<S>(*n.children[0], sig));
  }
  fail(errc::syntax, "malformed expression tree");
}

template <Scalar S>
Multivector<S> parse(std::string_view text, const typename Multivector<S>::signature_ptr& sig) {
  return evaluate<S>(*parse_expression(text), sig);
}

template <Scalar S>
Multivector<S> parse(std::string_view text, const Signature<S>& sig = Signature<S>{}) {
  return parse<S>(text, std::make_shared<const Signature<S>>(sig));
}

namespace detail {

struct CoeffText {
  bool negative = false;
  bool unit = false;  // magnitude is exactly 1
  std::string text;   // magnitude as it should appear before '*'
};

inline CoeffText real_coeff(bool negative, std::string magnitude) {
  return {negative, magnitude == "1", std::move(magnitude)};
}

inline std::string imag_factor(const std::string& magnitude) { return magnitude == "1" ? "i" : magnitude + "*i"; }

inline CoeffText complex_coeff(bool re_zero, bool re_neg, const std::string& re_mag, bool im_zero, bool im_neg,
                               const std::string& im_mag) {
  if (im_zero) return real_coeff(re_neg, re_mag);
  if (re_zero) return {im_neg, false, imag_factor(im_mag)};
  std::string t = "(" + std::string(re_neg ? "-" : "") + re_mag + (im_neg ? " - " : " + ") + imag_factor(im_mag) + ")";
  return {false, false, std::move(t)};
}

inline CoeffText coeff_text(const Rational& c) { return real_coeff(c < 0, Rational(c < 0 ? -c : c).str()); }
inline CoeffText coeff_text(double c) { return real_coeff(std::signbit(c), format_double(std::abs(c))); }
inline CoeffText coeff_text(const Gaussian& c) {
  return complex_coeff(c.re == 0, c.re < 0, Rational(c.re < 0 ? -c.re : c.re).str(), c.im == 0, c.im < 0,
                       Rational(c.im < 0 ? -c.im : c.im).str());
}
inline CoeffText coeff_text(const Complex& c) {
  return complex_coeff(c.real() == 0.0, std::signbit(c.real()), format_double(std::abs(c.real())), c.imag() == 0.0,
                       std::signbit(c.imag()), format_double(std::abs(c.imag())));
}

}  // namespace detail

/// Canonical text form: terms in blade order, e.g. "1 - 3/4*e1*e2".
/// Parsing the result reproduces the multivector exactly.
template <Scalar S>
std::string to_expression(const Multivector<S>& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : a.terms()) {
    detail::CoeffText ct = detail::coeff_text(c);
    std::string blade;
    for (std::size_t k : b.indices()) blade += (blade.empty() ? "e" : "*e") + std::to_string(k);
    std::string term;
    if (blade.empty())
      term = ct.text;
    else
      term = ct.unit ? blade : ct.text + "*" + blade;
    if (first)
      out += (ct.negative ? "-" : "") + term;
    else
      out += (ct.negative ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace clifford

#endif  // CLIFFORD_EXPR_HPP
