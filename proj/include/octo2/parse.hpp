#pragma once
/**
 * @file parse.hpp
 * @brief Text grammars for field descriptors and field elements.
 *
 *   field   := "gf(2)" | "gf(2^n)" | "gf(N)" | "ratfunc(" field ";" name ["," name] ")"
 *   element := sum of products of factors, factor ^ integer, with "/" and parentheses;
 *              atoms are integers (read mod 2), "g" and indeterminate names.
 */

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "octo2/field.hpp"

namespace octo2 {

namespace detail {

inline std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

inline unsigned parse_finite_degree(const std::string& s) {
  // s is the inside of gf(...)
  if (s.empty()) fail(ErrorCode::ParseError, "empty field size");
  std::size_t caret = s.find('^');
  unsigned long n = 0;
  try {
    if (caret != std::string::npos) {
      if (s.substr(0, caret) != "2") fail(ErrorCode::UnsupportedField, "characteristic must be 2");
      n = std::stoul(s.substr(caret + 1));
    } else {
      unsigned long size = std::stoul(s);
      while ((1ul << n) < size) ++n;
      if ((1ul << n) != size || n == 0) fail(ErrorCode::UnsupportedField, "field size must be a power of 2");
    }
  } catch (const std::logic_error&) {
    fail(ErrorCode::ParseError, "bad field size '" + s + "'");
  }
  if (n < 1 || n > 16) fail(ErrorCode::UnsupportedField, "extension degree must be in 1..16");
  return static_cast<unsigned>(n);
}

class ElementParser {
 public:
  ElementParser(const Field& k, std::string src) : k_(k), s_(std::move(src)) {}

  Fe run() {
    if (s_.empty()) fail(ErrorCode::ParseError, "empty element literal");
    Fe v = expr();
    if (pos_ != s_.size()) error("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  [[nodiscard]] bool at(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  Fe expr() {
    Fe v = term();
    while (at('+') || at('-')) {
      ++pos_;
      v += term();
    }
    return v;
  }

  Fe term() {
    Fe v = power();
    while (at('*') || at('/')) {
      bool div = s_[pos_++] == '/';
      Fe w = power();
      v = div ? v / w : v * w;
    }
    return v;
  }

  Fe power() {
    Fe b = unary();
    if (at('^')) {
      ++pos_;
      bool neg = false;
      if (at('-')) {
        neg = true;
        ++pos_;
      }
      auto e = integer();
      b = b.pow(neg ? -e : e);
    }
    return b;
  }

  Fe unary() {
    if (at('-') || at('+')) {
      ++pos_;
      return unary();
    }
    return atom();
  }

  long long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected integer");
    if (pos_ - start > 12) error("integer too long");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  Fe atom() {
    if (at('(')) {
      ++pos_;
      Fe v = expr();
      if (!at(')')) error("expected ')'");
      ++pos_;
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      // Integers are read mod 2, so only the last digit matters.
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return k_.from_int(s_[pos_ - 1] - '0');
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("expected a value");
    std::string name = s_.substr(start, pos_ - start);
    if (name == "g") return k_.gen();
    for (std::size_t i = 0; i < k_.num_vars(); ++i)
      if (k_.vars()[i] == name) return k_.var(i);
    pos_ = start;
    error("unknown symbol '" + name + "'");
  }

  const Field& k_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Field parse_field(std::string_view text) {
  std::string s = detail::strip(text);
  if (s.rfind("gf(", 0) == 0 && s.back() == ')')
    return Field::finite(detail::parse_finite_degree(s.substr(3, s.size() - 4)));
  if (s.rfind("ratfunc(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(8, s.size() - 9);
    auto semi = inner.find(';');
    Field base = parse_field(inner.substr(0, semi));
    if (!base.is_finite()) fail(ErrorCode::UnsupportedField, "coefficient field must be finite");
    std::vector<std::string> vars;
    if (semi != std::string::npos) {
      std::string rest = inner.substr(semi + 1);
      std::size_t p = 0;
      while (p <= rest.size()) {
        auto comma = rest.find(',', p);
        std::string name = rest.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
        if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
          fail(ErrorCode::ParseError, "bad indeterminate name '" + name + "'");
        vars.push_back(name);
        if (comma == std::string::npos) break;
        p = comma + 1;
      }
    }
    return Field::rational(base.base().degree(), std::move(vars));
  }
  fail(ErrorCode::ParseError, "unrecognized field descriptor '" + std::string(text) + "'");
}

inline Fe parse_element(const Field& k, std::string_view text) {
  return detail::ElementParser(k, detail::strip(text)).run();
}

}  // namespace octo2
