#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliffqt/algebra.hpp"

namespace cliffqt {

namespace detail {

class MvParser {
 public:
  MvParser(std::string_view text, const Signature& sig, Field field)
      : text_(text), sig_(sig), field_(field) {}

  std::vector<std::pair<Blade, Coefficient<Rational>>> parse() {
    std::vector<std::pair<Blade, Coefficient<Rational>>> terms;
    skip_ws();
    if (at_end()) fail("empty multivector");
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    terms.push_back(term(negate));
    for (skip_ws(); !at_end(); skip_ws()) {
      char op = peek();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      terms.push_back(term(op == '-'));
    }
    return terms;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  std::pair<Blade, Coefficient<Rational>> term(bool negate) {
    skip_ws();
    Coefficient<Rational> coef(Rational(1));
    Blade blade;
    if (peek() == 'e') {
      blade = parse_blade();
    } else {
      coef = parse_coeff();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != 'e') fail("expected a blade after '*'");
        blade = parse_blade();
      }
    }
    if (negate) coef = -coef;
    return {blade, coef};
  }

  Coefficient<Rational> parse_coeff() {
    std::size_t start = pos_;
    if (peek() == 'i') {
      ++pos_;
      require_complex(start);
      return {Rational(0), Rational(1)};
    }
    while (!at_end() && (is_digit(peek()) || peek() == '/' || peek() == '.')) ++pos_;
    if (pos_ == start) fail("expected a coefficient or blade");
    Rational value;
    const std::string_view token = text_.substr(start, pos_ - start);
    if (!parse_rational(token, value))
      throw ParseError("malformed rational '" + std::string(token) + "'", 1, start + 1);
    if (peek() == 'i') {
      ++pos_;
      require_complex(start);
      return {Rational(0), value};
    }
    return {value, Rational(0)};
  }

  void require_complex(std::size_t at) const {
    if (field_ != Field::Complex)
      throw ParseError("imaginary coefficient in a real multivector", 1, at + 1);
  }

  Blade parse_blade() {
    ++pos_;  // 'e'
    std::vector<int> indices;
    if (peek() == '{') {
      ++pos_;
      for (;;) {
        skip_ws();
        std::size_t num_start = pos_;
        while (is_digit(peek())) ++pos_;
        if (pos_ == num_start) fail("expected a generator index");
        indices.push_back(std::stoi(std::string(text_.substr(num_start, pos_ - num_start))));
        check_index(indices, num_start);
        skip_ws();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == '}') {
          ++pos_;
          break;
        }
        fail("expected ',' or '}' in blade");
      }
    } else {
      while (is_digit(peek())) {
        if (sig_.n() > 9) fail("digit-form blades require n <= 9; use e{...}");
        indices.push_back(peek() - '0');
        check_index(indices, pos_);
        ++pos_;
      }
    }
    return Blade::from_indices(indices);
  }

  void check_index(const std::vector<int>& indices, std::size_t at) const {
    const int a = indices.back();
    if (a < 1 || a > sig_.n())
      throw ParseError("generator index " + std::to_string(a) + " outside 1.." +
                           std::to_string(sig_.n()),
                       1, at + 1);
    if (indices.size() >= 2) {
      const int prev = indices[indices.size() - 2];
      if (a == prev)
        throw ParseError("duplicate generator index " + std::to_string(a), 1, at + 1);
      if (a < prev) throw ParseError("blade indices must be increasing", 1, at + 1);
    }
  }

  std::string_view text_;
  Signature sig_;
  Field field_;
  std::size_t pos_ = 0;
};

inline std::string format_blade(Blade b, int n) {
  if (b.rank() == 0) return "e";
  std::string out = "e";
  const auto idx = b.indices();
  if (n <= 9) {
    for (int a : idx) out += static_cast<char>('0' + a);
    return out;
  }
  out += '{';
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(idx[i]);
  }
  return out + '}';
}

template <Scalar S>
bool is_negative(const S& x) {
  return x < 0;
}

template <Scalar S>
std::string magnitude_text(const S& x) {
  return ScalarTraits<S>::to_string(x < 0 ? S(-x) : x);
}

}  // namespace detail

/// Reads the text grammar: `2 + 3*e12 - e{1,5}`, `i*e23`, `3/2i`. Repeated
/// blades are summed.
template <Scalar S = Rational>
Multivector<S> parse_mv(std::string_view text, const Signature& sig, Field field) {
  detail::MvParser parser(text, sig, field);
  auto terms = parser.parse();
  auto exact = Multivector<Rational>::from_terms(sig, field, std::move(terms));
  if constexpr (std::is_same_v<S, Rational>)
    return exact;
  else
    return convert_rational<S>(exact);
}

/// Canonical text: blades by rank then index order; a complex coefficient is
/// written as a real term followed by an imaginary term on the same blade.
template <Scalar S>
std::string format_mv(const Multivector<S>& u) {
  if (u.is_zero()) return "0";
  std::vector<std::pair<Blade, Coefficient<S>>> terms(u.terms().begin(), u.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  std::string out;
  const int n = u.signature().n();
  auto emit = [&](const S& value, bool imaginary, Blade blade) {
    if (ScalarTraits<S>::is_zero(value)) return;
    const bool negative = detail::is_negative(value);
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string mag = detail::magnitude_text(value);
    const bool unit = mag == "1";
    if (blade.rank() == 0) {
      out += imaginary ? (unit ? "i" : mag + "i") : mag;
      return;
    }
    if (imaginary) out += unit ? "i*" : mag + "i*";
    else if (!unit) out += mag + "*";
    out += detail::format_blade(blade, n);
  };
  for (const auto& [blade, coef] : terms) {
    emit(coef.re, false, blade);
    emit(coef.im, true, blade);
  }
  return out;
}

/// Structured form: {signature:{p,q}, field, backend, terms:[{blade, re, im}]}
/// with coefficients as exact strings ("3/2") on the exact backend.
template <Scalar S>
nlohmann::json to_json(const Multivector<S>& u) {
  nlohmann::json terms = nlohmann::json::array();
  std::vector<std::pair<Blade, Coefficient<S>>> sorted(u.terms().begin(), u.terms().end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  for (const auto& [blade, coef] : sorted)
    terms.push_back({{"blade", blade.indices()},
                     {"re", ScalarTraits<S>::to_string(coef.re)},
                     {"im", ScalarTraits<S>::to_string(coef.im)}});
  return {{"signature", {{"p", u.signature().p()}, {"q", u.signature().q()}}},
          {"field", std::string(to_string(u.field()))},
          {"backend", std::string(to_string(ScalarTraits<S>::backend))},
          {"terms", terms}};
}

inline Multivector<Rational> exact_mv_from_json(const nlohmann::json& j) {
  try {
    Signature sig(j.at("signature").at("p").get<int>(), j.at("signature").at("q").get<int>());
    const auto field_name = j.at("field").get<std::string>();
    if (field_name != "real" && field_name != "complex")
      throw UsageError("unknown field '" + field_name + "'");
    const Field field = field_name == "real" ? Field::Real : Field::Complex;
    std::vector<std::pair<Blade, Coefficient<Rational>>> terms;
    for (const auto& t : j.at("terms")) {
      const auto idx = t.at("blade").get<std::vector<int>>();
      Rational re, im;
      if (!parse_rational(t.at("re").get<std::string>(), re) ||
          !parse_rational(t.at("im").get<std::string>(), im))
        throw UsageError("malformed rational in structured multivector");
      for (int a : idx)
        if (a < 1 || a > sig.n()) throw UsageError("blade index outside 1..n");
      terms.emplace_back(Blade::from_indices(idx), Coefficient<Rational>(re, im));
    }
    return Multivector<Rational>::from_terms(sig, field, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed structured multivector: ") + e.what());
  }
}

}  // namespace cliffqt
