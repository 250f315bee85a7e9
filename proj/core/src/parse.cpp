#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "qcr/errors.hpp"
#include "qcr/expr.hpp"

namespace qcr {
namespace {

constexpr double kPi = 3.141592653589793;
constexpr double kE = 2.718281828459045;

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen,
                 rparen, end };

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;  // 1-based
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Expr parse_all() {
    Expr e = parse_expr();
    if (tok_.kind != Tok::end) {
      std::vector<std::string> expected;
      if (power_open_) expected.push_back("'^'");
      for (const char* s : {"'+'", "'-'", "'*'", "'/'", "end of input"}) {
        expected.emplace_back(s);
      }
      fail(std::move(expected));
    }
    return e;
  }

 private:
  Expr parse_expr() {
    Expr lhs = parse_term();
    while (tok_.kind == Tok::plus || tok_.kind == Tok::minus) {
      const BinaryOp op = tok_.kind == Tok::plus ? BinaryOp::add : BinaryOp::sub;
      advance();
      lhs = Expr::binary(op, std::move(lhs), parse_term());
    }
    return lhs;
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    while (tok_.kind == Tok::star || tok_.kind == Tok::slash) {
      const BinaryOp op = tok_.kind == Tok::star ? BinaryOp::mul : BinaryOp::div;
      advance();
      lhs = Expr::binary(op, std::move(lhs), parse_factor());
    }
    return lhs;
  }

  Expr parse_factor() {
    int negations = 0;
    while (tok_.kind == Tok::minus) {
      ++negations;
      advance();
    }
    Expr e = parse_power();
    for (int i = 0; i < negations; ++i) e = -e;
    return e;
  }

  Expr parse_power() {
    Expr base = parse_atom();
    power_open_ = true;
    if (tok_.kind != Tok::caret) return base;
    advance();
    power_open_ = false;
    bool negative = false;
    if (tok_.kind == Tok::minus) {
      negative = true;
      advance();
    }
    if (tok_.kind != Tok::number) fail({"integer exponent"});
    int exponent = 0;
    const auto* first = tok_.text.data();
    const auto* last = first + tok_.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last) fail({"integer exponent"});
    advance();
    return Expr::pow(std::move(base), negative ? -exponent : exponent);
  }

  Expr parse_atom() {
    power_open_ = false;
    switch (tok_.kind) {
      case Tok::number: {
        double value = 0.0;
        const auto* first = tok_.text.data();
        const auto* last = first + tok_.text.size();
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || ptr != last) fail({"number"});
        advance();
        return Expr::literal(value);
      }
      case Tok::ident:
        return parse_identifier();
      case Tok::lparen: {
        advance();
        Expr inner = parse_expr();
        expect(Tok::rparen, "')'");
        return inner;
      }
      default:
        fail({"number", "identifier", "'('", "'-'"});
    }
  }

  Expr parse_identifier() {
    const Token id = tok_;
    const std::string_view name = id.text;
    struct Func {
      std::string_view name;
      UnaryOp op;
    };
    static constexpr Func kFuncs[] = {{"sin", UnaryOp::sin},
                                      {"cos", UnaryOp::cos},
                                      {"exp", UnaryOp::exp},
                                      {"log", UnaryOp::log},
                                      {"sqrt", UnaryOp::sqrt}};
    for (const auto& f : kFuncs) {
      if (f.name == name) {
        advance();
        expect(Tok::lparen, "'('");
        Expr arg = parse_expr();
        expect(Tok::rparen, "')'");
        return Expr::unary(f.op, std::move(arg));
      }
    }
    static constexpr Variable kVars[] = {Variable::x1, Variable::x2,
                                         Variable::x3, Variable::x4,
                                         Variable::t};
    for (Variable v : kVars) {
      if (variable_name(v) == name) {
        advance();
        return Expr::variable(v);
      }
    }
    if (name == "pi") {
      advance();
      return Expr::literal(kPi);
    }
    if (name == "e") {
      advance();
      return Expr::literal(kE);
    }
    throw UnknownIdentifierError(id.offset, std::string(name));
  }

  void expect(Tok kind, const char* what) {
    if (tok_.kind != kind) fail({what});
    advance();
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found = tok_.kind == Tok::end
                            ? std::string("end of input")
                            : "'" + std::string(tok_.text) + "'";
    throw ParseError(tok_.offset, std::move(expected), std::move(found));
  }

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::end, {}, start + 1};
      return;
    }
    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      tok_ = {kind, text_.substr(start, 1), start + 1};
    };
    switch (c) {
      case '+': return single(Tok::plus);
      case '-': return single(Tok::minus);
      case '*': return single(Tok::star);
      case '/': return single(Tok::slash);
      case '^': return single(Tok::caret);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      default: break;
    }
    auto is_digit = [&](std::size_t i) {
      return i < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[i]));
    };
    if (is_digit(pos_) || (c == '.' && is_digit(pos_ + 1))) {
      while (is_digit(pos_)) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') {
        ++pos_;
        while (is_digit(pos_)) ++pos_;
      }
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t p = pos_ + 1;
        if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
        if (is_digit(p)) {
          pos_ = p;
          while (is_digit(pos_)) ++pos_;
        }
      }
      tok_ = {Tok::number, text_.substr(start, pos_ - start), start + 1};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      tok_ = {Tok::ident, text_.substr(start, pos_ - start), start + 1};
      return;
    }
    // Unknown byte: surface it as the offending token.
    tok_ = {Tok::end, text_.substr(start, 1), start + 1};
    throw ParseError(start + 1,
                     {"number", "identifier", "operator", "'('", "')'"},
                     "'" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::end, {}, 1};
  bool power_open_ = false;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace qcr
