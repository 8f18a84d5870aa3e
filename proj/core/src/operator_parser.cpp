#include <cctype>

#include "kch/qbinom.hpp"
#include "kch/qtorus.hpp"

namespace kch {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int rank, int sign) : text_(text), rank_(rank), sign_(sign) {}

  TorusElem parse() {
    TorusElem e = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
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

  TorusElem expr() {
    TorusElem e = term();
    for (;;) {
      if (accept('+')) e += term();
      else if (accept('-')) e -= term();
      else return e;
    }
  }

  TorusElem term() {
    TorusElem e = unary();
    while (accept('*')) e = e * unary();
    return e;
  }

  TorusElem unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  TorusElem power() {
    TorusElem base = atom();
    if (!accept('^')) return base;
    skip();
    std::size_t start = pos_;
    bool neg = false;
    if (accept('-')) neg = true;
    skip();
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) throw ParseError("expected an integer exponent", start);
    int e = std::stoi(std::string(text_.substr(digits, pos_ - digits)));
    return base.pow(neg ? -e : e);
  }

  TorusElem atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of operator", pos_);
    std::size_t start = pos_;
    if (accept('(')) {
      TorusElem e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational v(std::string(text_.substr(start, pos_ - start)));
      return TorusElem::scalar(rank_, RatFunc::constant(qg_table(), v), sign_);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return identifier(std::string(text_.substr(start, pos_ - start)), start);
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", start);
  }

  TorusElem identifier(const std::string& name, std::size_t at) {
    if (name == "q" || name == "g") {
      return TorusElem::scalar(rank_, RatFunc(LaurentPoly::variable(qg_table(), name)), sign_);
    }
    for (const char* base : {"nu", "L"}) {
      std::string b = base;
      if (name.rfind(b, 0) != 0) continue;
      std::string idx = name.substr(b.size());
      int i = 0;
      if (idx.empty()) {
        if (rank_ != 1) throw ParseError("'" + name + "' needs a component index", at);
      } else {
        bool digits = idx.find_first_not_of("0123456789") == std::string::npos;
        if (!digits) break;
        i = std::stoi(idx) - 1;
        if (i < 0 || i >= rank_) throw ParseError("component index out of range in '" + name + "'", at);
      }
      return b == "nu" ? TorusElem::nu(rank_, i, 1, sign_) : TorusElem::lambda(rank_, i, 1, sign_);
    }
    throw ParseError("unknown identifier '" + name + "'", at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int rank_;
  int sign_;
};

}  // namespace

TorusElem parse_operator(std::string_view text, int rank, int torus_sign) {
  return Parser(text, rank, torus_sign).parse();
}

}  // namespace kch
