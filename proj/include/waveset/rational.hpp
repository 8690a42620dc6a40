#pragma once

// Exact rational scalar type and the handful of integer helpers the rest of
// the library leans on (floor division, dyadic scaling, binary logarithms).
// Every endpoint and coefficient in this project is a Rational; floating
// point only appears at the metric/integral boundary.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace waveset {

using BigInt = boost::multiprecision::number<
    boost::multiprecision::backends::cpp_int_backend<>,
    boost::multiprecision::et_off>;

using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

// Affine exponents are capped; desk-scale constructions never get close.
inline constexpr int kMaxExponent = 64;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  return Rational(num, den);
}

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// floor(p/q) with q > 0.
inline BigInt floor_int(const Rational& r) {
  BigInt p = numerator(r), q = denominator(r);
  BigInt t = p / q;  // truncates toward zero
  if (p % q != 0 && p < 0) --t;
  return t;
}

inline BigInt ceil_int(const Rational& r) { return -floor_int(-r); }

// 2^e as an exact rational, e in [-kMaxExponent, kMaxExponent].
inline Rational pow2(int e) {
  if (e > kMaxExponent || e < -kMaxExponent)
    throw std::overflow_error("dyadic exponent out of range: " +
                              std::to_string(e));
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(1, BigInt(1) << (-e));
}

namespace detail {
inline Rational pow2_unchecked(long e) {
  if (e >= 0) return Rational(BigInt(1) << e);
  return Rational(1, BigInt(1) << (-e));
}
}  // namespace detail

// Largest k with 2^k <= r, for r > 0.
inline int floor_log2(const Rational& r) {
  if (r <= 0) throw std::domain_error("floor_log2 of non-positive rational");
  BigInt p = numerator(r), q = denominator(r);
  // msb difference is within 1 of the true logarithm; settle exactly.
  long k = static_cast<long>(boost::multiprecision::msb(p)) -
           static_cast<long>(boost::multiprecision::msb(q));
  while (detail::pow2_unchecked(k) > r) --k;
  while (detail::pow2_unchecked(k + 1) <= r) ++k;
  return static_cast<int>(k);
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Serialized as "p/q", or just "p" when the denominator is one.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q <= 0) throw std::domain_error("non-positive denominator");
    return Rational(p, q);
  } catch (const std::runtime_error&) {
    throw std::domain_error("malformed rational: '" + text + "'");
  }
}

}  // namespace waveset
