// Copyright 2026 The Monodromy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "monodromy/parser.hpp"

#include <cctype>
#include <set>
#include <utility>

#include "monodromy/errors.hpp"

namespace monodromy {

namespace {

class Parser {
 public:
  Parser(std::string_view text, SeriesKind kind) : text_(text), kind_(kind) {}

  std::vector<ParsedTerm> series() {
    std::vector<ParsedTerm> terms;
    terms.push_back(term());
    while (peek() == '+') {
      ++pos_;
      terms.push_back(term());
    }
    if (peek() != '\0') fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { fail_at(what, pos_); }

  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const {
    throw Error(ErrorKind::kSyntax, what + " at offset " + std::to_string(at), at);
  }

  // Next non-blank character, or '\0' at the end.
  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  BigInt integer(bool allow_sign) {
    char c = peek();
    std::size_t start = pos_;
    if (allow_sign && c == '-') ++pos_;
    if (pos_ >= text_.size() || !is_digit(text_[pos_])) fail("expected an integer");
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    return BigInt(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Rational rational() {
    BigInt num = integer(true);
    if (peek() != '/') return Rational(std::move(num));
    ++pos_;
    peek();
    std::size_t den_at = pos_;
    BigInt den = integer(false);
    if (den == 0) fail_at("zero denominator", den_at);
    return Rational(std::move(num), std::move(den));
  }

  ParsedTerm term() {
    ParsedTerm t;
    char c = peek();
    t.offset = pos_;
    if (c == '\0') fail("expected a term");
    if (c == '-' || is_digit(c)) {
      std::size_t at = pos_;
      t.coefficient = rational();
      if (t.coefficient->sign() == 0) {
        throw Error(ErrorKind::kZeroCoefficient,
                    "zero coefficient at offset " + std::to_string(at), at);
      }
      expect('*');
    }
    bool seen_x = false;
    bool seen_y = false;
    factor(t, seen_x, seen_y);
    while (peek() == '*') {
      ++pos_;
      factor(t, seen_x, seen_y);
    }
    return t;
  }

  void factor(ParsedTerm& t, bool& seen_x, bool& seen_y) {
    const char var = peek();
    const std::size_t at = pos_;
    if (var != 'x' && var != 'y') fail("expected 'x' or 'y'");
    if (var == 'x' && kind_ == SeriesKind::kCurve) {
      throw Error(ErrorKind::kWrongVariable,
                  "curve series use only y; found x at offset " + std::to_string(at), at);
    }
    bool& seen = var == 'x' ? seen_x : seen_y;
    if (seen) fail("variable repeated within a term");
    seen = true;
    ++pos_;

    Rational exponent(1);
    std::size_t exponent_at = pos_;
    if (peek() == '^') {
      ++pos_;
      exponent_at = pos_;
      if (peek() == '(') {
        ++pos_;
        exponent_at = pos_;
        exponent = rational();
        expect(')');
      } else {
        exponent_at = pos_;
        const char next = peek();
        if (next != '-' && !is_digit(next)) fail("expected '(' or an integer exponent");
        exponent = Rational(integer(true));
      }
    }
    if (exponent.sign() < 0) {
      throw Error(ErrorKind::kNegativeExponent,
                  "negative exponent " + exponent.to_string() + " at offset " +
                      std::to_string(exponent_at),
                  exponent_at);
    }
    (var == 'x' ? t.lambda : t.mu) = std::move(exponent);
  }

  std::string_view text_;
  SeriesKind kind_;
  std::size_t pos_ = 0;
};

bool looks_like_json(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

Rational rational_from_json(const nlohmann::json& value) {
  try {
    if (value.is_number_integer()) return Rational(BigInt(value.dump(), 10));
    if (value.is_string()) return Rational::parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorKind::kSyntax, e.what());
  }
  throw Error(ErrorKind::kSyntax, "exponent must be a \"p/q\" string or an integer, got " +
                                      value.dump());
}

void check_nonnegative(const Rational& r) {
  if (r.sign() < 0) {
    throw Error(ErrorKind::kNegativeExponent, "negative exponent " + r.to_string());
  }
}

std::string render_power(char var, const Rational& exponent) {
  std::string out(1, var);
  if (exponent == Rational(1)) return out;
  if (exponent.is_integer()) return out + "^" + exponent.to_string();
  return out + "^(" + exponent.to_string() + ")";
}

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, SeriesKind kind) {
  return Parser(text, kind).series();
}

CurveSeries parse_curve(std::string_view text) {
  return std::get<CurveSeries>(parse_series(text, SeriesKind::kCurve));
}

SurfaceSeries parse_surface(std::string_view text) {
  return std::get<SurfaceSeries>(parse_series(text, SeriesKind::kSurface));
}

Series parse_series(std::string_view text, SeriesKind kind) {
  if (looks_like_json(text)) {
    nlohmann::json object;
    try {
      object = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::kSyntax, std::string("invalid JSON: ") + e.what());
    }
    Series series = series_from_json(object);
    const bool is_curve = std::holds_alternative<CurveSeries>(series);
    if (is_curve != (kind == SeriesKind::kCurve)) {
      throw Error(ErrorKind::kSyntax, std::string("JSON input is not a ") +
                                          (kind == SeriesKind::kCurve ? "curve" : "surface"));
    }
    return series;
  }

  const std::vector<ParsedTerm> terms = parse_terms(text, kind);
  std::set<RationalPair> seen;
  for (const auto& t : terms) {
    if (!seen.insert({t.lambda, t.mu}).second) {
      throw Error(ErrorKind::kDuplicateTerm,
                  "repeated monomial at offset " + std::to_string(t.offset), t.offset);
    }
  }
  if (kind == SeriesKind::kCurve) {
    std::vector<Rational> exponents;
    for (const auto& t : terms) {
      if (t.mu.sign() == 0) {
        throw Error(ErrorKind::kNegativeExponent,
                    "curve exponents must be positive (term at offset " +
                        std::to_string(t.offset) + ")",
                    t.offset);
      }
      exponents.push_back(t.mu);
    }
    return CurveSeries(std::move(exponents));
  }
  std::vector<RationalPair> pairs;
  for (const auto& t : terms) pairs.push_back({t.lambda, t.mu});
  return SurfaceSeries(std::move(pairs));
}

Series series_from_json(const nlohmann::json& object) {
  if (!object.is_object()) throw Error(ErrorKind::kSyntax, "series JSON must be an object");
  auto kind_it = object.find("kind");
  if (kind_it == object.end() || !kind_it->is_string()) {
    throw Error(ErrorKind::kSyntax, "series JSON needs a \"kind\" string");
  }
  const std::string kind = kind_it->get<std::string>();
  if (kind != "curve" && kind != "surface") {
    throw Error(ErrorKind::kSyntax, "unknown series kind \"" + kind + "\"");
  }
  const SeriesKind series_kind = kind == "curve" ? SeriesKind::kCurve : SeriesKind::kSurface;

  if (auto expr = object.find("expr"); expr != object.end()) {
    if (!expr->is_string()) throw Error(ErrorKind::kSyntax, "\"expr\" must be a string");
    const std::string text = expr->get<std::string>();
    if (looks_like_json(text)) throw Error(ErrorKind::kSyntax, "\"expr\" must use the series grammar");
    return parse_series(text, series_kind);
  }

  if (series_kind == SeriesKind::kCurve) {
    auto list = object.find("exponents");
    if (list == object.end() || !list->is_array()) {
      throw Error(ErrorKind::kSyntax, "curve JSON needs an \"exponents\" array");
    }
    std::vector<Rational> exponents;
    for (const auto& v : *list) {
      Rational r = rational_from_json(v);
      check_nonnegative(r);
      exponents.push_back(std::move(r));
    }
    return CurveSeries(std::move(exponents));
  }

  auto list = object.find("pairs");
  if (list == object.end() || !list->is_array()) {
    throw Error(ErrorKind::kSyntax, "surface JSON needs a \"pairs\" array");
  }
  std::vector<RationalPair> pairs;
  for (const auto& v : *list) {
    if (!v.is_array() || v.size() != 2) {
      throw Error(ErrorKind::kSyntax, "each pair must be a two-element array, got " + v.dump());
    }
    RationalPair p{rational_from_json(v[0]), rational_from_json(v[1])};
    check_nonnegative(p.lambda);
    check_nonnegative(p.mu);
    pairs.push_back(std::move(p));
  }
  return SurfaceSeries(std::move(pairs));
}

nlohmann::json series_to_json(const Series& series) {
  nlohmann::json out;
  if (const auto* curve = std::get_if<CurveSeries>(&series)) {
    out["kind"] = "curve";
    out["exponents"] = nlohmann::json::array();
    for (const auto& e : curve->exponents()) out["exponents"].push_back(e.to_string());
  } else {
    const auto& surface = std::get<SurfaceSeries>(series);
    out["kind"] = "surface";
    out["pairs"] = nlohmann::json::array();
    for (const auto& p : surface.pairs()) {
      out["pairs"].push_back({p.lambda.to_string(), p.mu.to_string()});
    }
  }
  return out;
}

std::string render_series(const CurveSeries& series) {
  std::string out;
  for (const auto& e : series.exponents()) {
    if (!out.empty()) out += " + ";
    out += render_power('y', e);
  }
  return out;
}

std::string render_series(const SurfaceSeries& series) {
  std::string out;
  for (const auto& p : series.pairs()) {
    if (!out.empty()) out += " + ";
    if (p.lambda.sign() == 0 && p.mu.sign() == 0) {
      out += "x^0";
    } else if (p.lambda.sign() == 0) {
      out += render_power('y', p.mu);
    } else if (p.mu.sign() == 0) {
      out += render_power('x', p.lambda);
    } else {
      out += render_power('x', p.lambda) + "*" + render_power('y', p.mu);
    }
  }
  return out;
}

}  // namespace monodromy
