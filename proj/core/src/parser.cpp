#include "polarlink/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace polarlink {

ParseError::ParseError(Kind kind, std::size_t position, const std::string& message)
    : std::runtime_error("at position " + std::to_string(position) + ": " + message),
      kind_(kind),
      position_(position) {}

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::Syntax) const {
    throw ParseError(kind, pos_, msg);
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

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Polynomial expr() {
    skip_space();
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    skip_space();
    if (pos_ < text_.size() && (is_ident_start(text_[pos_]) || is_digit(text_[pos_]) || text_[pos_] == '('))
      fail("implicit multiplication is not supported; use '*'");
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      if (pos_ < text_.size() && text_[pos_] == '-')
        fail("exponent must be a non-negative integer literal", ParseError::Kind::BadExponent);
      const auto d = digits();
      if (d.empty()) {
        pos_ = start;
        fail("exponent must be a non-negative integer literal", ParseError::Kind::BadExponent);
      }
      if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.')) {
        pos_ = start;
        fail("exponent must be a non-negative integer literal", ParseError::Kind::BadExponent);
      }
      if (d.size() > 4 || std::stoul(std::string(d)) > 1000) {
        pos_ = start;
        fail("exponent too large", ParseError::Kind::BadExponent);
      }
      b = b.pow(static_cast<unsigned>(std::stoul(std::string(d))));
    }
    return b;
  }

  Polynomial base() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (is_digit(c)) {
      const auto num = digits();
      std::string literal(num);
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        const std::size_t den_pos = pos_;
        const auto den = digits();
        if (den.empty()) fail("expected denominator digits");
        if (std::all_of(den.begin(), den.end(), [](char ch) { return ch == '0'; })) {
          pos_ = den_pos;
          fail("zero denominator");
        }
        literal += "/" + std::string(den);
      }
      return Polynomial::constant(vars_.size(), Rational::parse(literal));
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      const auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'", ParseError::Kind::UnknownVariable);
      }
      return Polynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars) {
  if (vars.size() > kMaxVariables - 1)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables - 1) + " variables are supported");
  return Parser(text, vars).parse();
}

std::vector<std::string> parse_variable_list(std::string_view text) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
    while (!piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
    if (piece.empty() || !is_ident_start(piece.front()) ||
        !std::all_of(piece.begin(), piece.end(), is_ident_char))
      throw std::invalid_argument("malformed variable name '" + std::string(piece) + "'");
    if (!seen.insert(std::string(piece)).second)
      throw std::invalid_argument("duplicate variable '" + std::string(piece) + "'");
    names.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return names;
}

}  // namespace polarlink
