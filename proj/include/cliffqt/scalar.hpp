#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "cliffqt/errors.hpp"

namespace cliffqt {

using Rational = mpq_class;

enum class Field { Real, Complex };
enum class Backend { Exact, Float };

inline std::string_view to_string(Field f) {
  return f == Field::Real ? "real" : "complex";
}
inline std::string_view to_string(Backend b) {
  return b == Backend::Exact ? "exact" : "float";
}

/// Per-backend scalar operations. Rational is the exact backend (reduced
/// fractions, no rounding); double is the float backend.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr Backend backend = Backend::Exact;
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static double magnitude(const Rational& x) { return std::fabs(x.get_d()); }
  static Rational from_rational(const Rational& x) { return x; }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr Backend backend = Backend::Float;
  static bool is_zero(double x) { return x == 0.0; }
  static double magnitude(double x) { return std::fabs(x); }
  static double from_rational(const Rational& x) { return x.get_d(); }
  static std::string to_string(double x) {
    // 17 significant digits round-trip a double.
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
  }
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::backend; };

/// Parses "3", "-3/2" or "0.25" into an exact rational. Returns false on
/// malformed input or a zero denominator.
inline bool parse_rational(std::string_view text, Rational& out) {
  if (text.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::string& dst) {
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') dst += text[i++];
    return i > start;
  };
  std::string whole;
  if (!digits(whole)) return false;
  if (i == text.size()) {
    out = Rational(mpz_class(whole, 10));
  } else if (text[i] == '/') {
    ++i;
    std::string den;
    if (!digits(den) || i != text.size()) return false;
    mpz_class d(den, 10);
    if (d == 0) return false;
    out = Rational(mpz_class(whole, 10), d);
    out.canonicalize();
  } else if (text[i] == '.') {
    ++i;
    std::string frac;
    digits(frac);
    if (i != text.size()) return false;
    mpz_class num(whole + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    out = Rational(num, den);
    out.canonicalize();
  } else {
    return false;
  }
  if (negative) out = -out;
  return true;
}

/// A field element: `im` is identically zero for the real field.
template <class S>
struct Coefficient {
  S re{};
  S im{};

  Coefficient() = default;
  Coefficient(S r) : re(std::move(r)), im() {}  // NOLINT: implicit from scalar
  Coefficient(S r, S i) : re(std::move(r)), im(std::move(i)) {}

  static Coefficient imaginary_unit() { return {S(0), S(1)}; }

  bool is_zero() const {
    return ScalarTraits<S>::is_zero(re) && ScalarTraits<S>::is_zero(im);
  }
  bool is_real() const { return ScalarTraits<S>::is_zero(im); }

  Coefficient conj() const { return {re, -im}; }

  Coefficient operator-() const { return {-re, -im}; }
  Coefficient& operator+=(const Coefficient& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Coefficient& operator-=(const Coefficient& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    return {S(a.re * b.re - a.im * b.im), S(a.re * b.im + a.im * b.re)};
  }
  friend bool operator==(const Coefficient& a, const Coefficient& b) {
    return a.re == b.re && a.im == b.im;
  }
};

}  // namespace cliffqt
