#include <cctype>
#include <climits>

#include "cluster/error.hpp"
#include "cluster/laurent.hpp"

namespace cluster {

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := '-' unary | power
// power   := primary ('^' ['-'] digits)?
// primary := digits | 'x' digits | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), n_(nvars) {}

  LaurentPoly parse() {
    LaurentPoly f = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_int() {
    std::string d = digits();
    if (d.size() > 6) fail("number too large");
    return std::stoi(d);
  }

  LaurentPoly expr() {
    LaurentPoly f = term();
    for (;;) {
      if (accept('+')) f += term();
      else if (accept('-')) f -= term();
      else return f;
    }
  }

  LaurentPoly term() {
    LaurentPoly f = unary();
    for (;;) {
      if (accept('*')) f *= unary();
      else if (accept('/')) f = exact_divide(f, unary());
      else return f;
    }
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const int e = small_int();
    LaurentPoly p = base.pow(static_cast<unsigned>(e));
    return negative ? exact_divide(LaurentPoly::constant(n_, 1), p) : p;
  }

  LaurentPoly primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (c == 'x') {
      ++pos_;
      const int i = small_int();
      if (i < 1 || i > n_) fail("variable x" + std::to_string(i) + " out of range");
      return LaurentPoly::variable(n_, i - 1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly::constant(n_, mpz_class(digits()));
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, int nvars) { return Parser(text, nvars).parse(); }

}  // namespace cluster
