#include "lincomp/expr.hpp"

#include <cctype>
#include <string>

#include "lincomp/error.hpp"

namespace lincomp {

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : s_(text) {}

  OperatorPoly parse() {
    OperatorPoly v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression: " + msg + " at offset " + std::to_string(pos_),
                     pos_);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == 'a' || c == 'c' || c == 'D' ||
           std::isdigit(static_cast<unsigned char>(c));
  }

  OperatorPoly expr() {
    OperatorPoly v = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        v += term();
      } else if (peek('-')) {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  OperatorPoly term() {
    OperatorPoly v = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        v = v * unary();
      } else if (starts_factor()) {
        v = v * power();
      } else {
        return v;
      }
    }
  }

  OperatorPoly unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  OperatorPoly power() {
    OperatorPoly base = primary();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t e = read_digits();
      OperatorPoly r(1);
      for (std::size_t k = 0; k < e; ++k) r = r * base;
      return r;
    }
    return base;
  }

  std::size_t read_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::stoul(std::string(s_.substr(start, pos_ - start)));
  }

  OperatorPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      OperatorPoly v = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      read_digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        read_digits();
      }
      mpq_class q(std::string(s_.substr(start, pos_ - start)));
      if (q.get_den() == 0) fail("zero denominator");
      q.canonicalize();
      return OperatorPoly(MPoly(q));
    }
    if (c == 'D') {
      ++pos_;
      return OperatorPoly::d_power(1);
    }
    if (c == 'c') {
      ++pos_;
      return OperatorPoly(MPoly::variable(coefficient_var(static_cast<int>(read_digits()))));
    }
    if (c == 'a') {
      std::size_t start = pos_++;
      // a + two digits, or a + digits '_' digits
      std::size_t digits_start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '_') {
        ++pos_;
        read_digits();
      } else if (pos_ - digits_start > 2) {
        pos_ = digits_start + 2;
      }
      return OperatorPoly(MPoly::param(Param::parse(s_.substr(start, pos_ - start))));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

OperatorPoly parse_operator_poly(std::string_view text) {
  return ExprParser(text).parse();
}

MPoly parse_mpoly(std::string_view text) {
  OperatorPoly p = parse_operator_poly(text);
  if (p.degree() > 0) throw ParseError("expression contains D: " + std::string(text), 0);
  return p.coefficient(0);
}

}  // namespace lincomp
