#pragma once

#include <brieskorn/errors.hpp>
#include <brieskorn/polyring.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace brieskorn {

/// Canonical text: descending graded-lex terms, "a/b" coefficients, "^"
/// powers, "*" between factors. "0" for the zero polynomial.
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const Ring& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = c;
    if (c < 0) {
      out += first ? "-" : " - ";
      mag = -c;
    } else if (!first) {
      out += " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += ring.name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, RingPtr ring)
      : text_(text), ring_(std::move(ring)), spellings_(ring_->spellings()) {}

  Polynomial parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Polynomial p = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // expr := ['+'|'-'] term (('+'|'-') term)*
  Polynomial expr() {
    Polynomial acc(ring_);
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Polynomial t = term();
    acc += negate ? -t : t;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial next = term();
      if (c == '+') acc += next; else acc -= next;
    }
    return acc;
  }

  // term := factor (('*' | '/' | <juxtaposition>) factor)*
  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= factor();
      } else if (c == '/') {
        std::size_t where = pos_++;
        Polynomial divisor = factor();
        if (divisor.is_zero()) throw ParseError("division by zero", where);
        if (divisor.degree() != 0) throw ParseError("division by a non-constant", where);
        acc *= Rational(1) / divisor.terms().begin()->second;
      } else if (starts_primary(c)) {
        acc *= factor();
      } else {
        break;
      }
    }
    return acc;
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  // factor := '-' factor | primary ['^' exponent]
  Polynomial factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    Polynomial base = primary();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      return pow(base, exponent());
    }
    return base;
  }

  unsigned long exponent() {
    skip_ws();
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
      skip_ws();
    }
    if (peek() == '-') throw ParseError("negative exponent", pos_);
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected exponent", pos_);
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (paren) {
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    }
    return e;
  }

  Polynomial primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      return Polynomial::constant(ring_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // longest ring spelling that prefixes the remaining input
      std::string_view rest = text_.substr(pos_);
      const std::string* best = nullptr;
      for (const auto& s : spellings_)
        if (rest.substr(0, s.size()) == s && (!best || s.size() > best->size())) best = &s;
      if (!best) {
        std::size_t end = pos_ + 1;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        throw ParseError("unknown variable '" + std::string(text_.substr(pos_, end - pos_)) + "'", pos_);
      }
      pos_ += best->size();
      return Polynomial::variable(ring_, *ring_->index_of(*best));
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  RingPtr ring_;
  std::vector<std::string> spellings_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses +, -, *, /, ^, parentheses, integer and rational constants and the
/// ring's variable names. Juxtaposition multiplies ("x^2y^2", "3x").
inline Polynomial parse_poly(std::string_view text, RingPtr ring) {
  return detail::PolyParser(text, std::move(ring)).parse();
}

/// Variable names appearing in an expression: a letter followed by optional
/// digits is one name ("xz" is x and z, "x12" is one name). Ordered x, y, z,
/// t first, then alphabetically.
inline std::vector<std::string> infer_variables(std::string_view text) {
  std::set<std::string> found;
  for (std::size_t i = 0; i < text.size();) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      found.emplace(text.substr(i, j - i));
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  std::vector<std::string> out;
  for (const char* preferred : {"x", "y", "z", "t"}) {
    if (found.erase(preferred)) out.emplace_back(preferred);
  }
  out.insert(out.end(), found.begin(), found.end());
  return out;
}

}  // namespace brieskorn
