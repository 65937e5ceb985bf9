#include "stratakit/expression.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "stratakit/error.hpp"

namespace stratakit {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  Parser(std::string_view src, const LineTable& lines) : src_(src), lines_(lines) {}

  Expr expression() {
    std::vector<Expr> terms{product()};
    while (accept('+')) terms.push_back(product());
    return terms.size() == 1 ? std::move(terms.front()) : Expr::sum(std::move(terms));
  }

  void expect_end() {
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < pos && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

 private:
  Expr product() {
    std::vector<Expr> factors{atom()};
    while (accept('*')) factors.push_back(atom());
    return factors.size() == 1 ? std::move(factors.front()) : Expr::product(std::move(factors));
  }

  Expr atom() {
    skip_ws();
    if (accept('(')) {
      Expr inner = expression();
      expect(')');
      return inner;
    }
    if (accept('Z')) {
      skip_ws();
      if (peek() == '[') return Expr::of_segment(segment());
      if (accept('{')) {
        std::vector<Segment> segs;
        if (!accept('}')) {
          do segs.push_back(segment());
          while (accept(','));
          expect('}');
        }
        return Expr::irreducible(Multisegment(std::move(segs)));
      }
      fail("expected '[' or '{' after 'Z'");
    }
    if (accept('D')) {
      expect('^');
      const int order = integer();
      if (order < 0) fail("derivative order must be nonnegative");
      expect('(');
      Expr inner = expression();
      expect(')');
      return Expr::derivative(order, std::move(inner));
    }
    if (pos_ >= src_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, src_[pos_]) + "'");
  }

  Segment segment() {
    skip_ws();
    const std::size_t at = pos_;
    expect('[');
    const int a = integer();
    expect(',');
    const int b = integer();
    std::string id = "rho";
    if (accept(';')) id = identifier();
    expect(']');
    if (b < a) fail_at(at, "segment end precedes its start");
    auto it = lines_.find(id);
    CuspidalLine line = it != lines_.end() ? it->second : CuspidalLine{id, 1, std::nullopt};
    line.id = id;
    try {
      return Segment(line, a, b);
    } catch (const DomainError& ex) {
      fail_at(at, ex.what());
    }
  }

  int integer() {
    skip_ws();
    const std::size_t begin = pos_;
    bool negative = false;
    if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) negative = src_[pos_++] == '-';
    if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_]))) fail("expected integer");
    long long value = 0;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      value = value * 10 + (src_[pos_++] - '0');
      if (value > std::numeric_limits<int>::max()) fail_at(begin, "integer out of range");
    }
    return static_cast<int>(negative ? -value : value);
  }

  std::string identifier() {
    skip_ws();
    const std::size_t begin = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' || src_[pos_] == '\''))
      ++pos_;
    if (begin == pos_) fail("expected line name");
    return std::string(src_.substr(begin, pos_ - begin));
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= src_.size()) fail("expected '" + std::string(1, c) + "' before end of input");
      fail("expected '" + std::string(1, c) + "'");
    }
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  std::string_view src_;
  const LineTable& lines_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view src, const LineTable& lines) {
  Parser p(src, lines);
  Expr e = p.expression();
  p.expect_end();
  return e;
}

Identity parse_identity(std::string_view src, const LineTable& lines) {
  Parser p(src, lines);
  Expr lhs = p.expression();
  if (!p.accept('=')) p.fail("expected '='");
  Expr rhs = p.expression();
  p.expect_end();
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace stratakit
