#include "qsh/parse.hpp"

#include <cctype>
#include <string>

#include "qsh/errors.hpp"

namespace qsh {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc run() {
    RatFunc r = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression \"" + std::string(text_) + "\": " + what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        return acc;
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        RatFunc d = factor();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    RatFunc base = primary();
    if (accept('^')) {
      skip_space();
      bool negative = accept('-');
      skip_space();
      const std::string digits = read_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
      if (digits.empty() || digits.size() > 4) fail("expected a small integer exponent");
      const int e = std::stoi(digits);
      if (negative && base.is_zero()) fail("division by zero");
      return base.pow(negative ? -e : e);
    }
    return base;
  }

  RatFunc primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string digits = read_while([](char d) { return std::isdigit(static_cast<unsigned char>(d)) != 0; });
      return RatFunc(Rational(Integer(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name =
          read_while([](char d) { return std::isalnum(static_cast<unsigned char>(d)) != 0 || d == '_'; });
      try {
        return RatFunc::variable(VarId::parse(name));
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  template <typename Pred>
  std::string read_while(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expression(std::string_view text) { return Parser(text).run(); }

}  // namespace qsh
