// rational.hpp - Exact rational scalars extended with +infinity
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef REGULA_RATIONAL_HPP
#define REGULA_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace regula {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact rational number extended with a single point +infinity.
///
/// All exponent algebra in the engine runs on this type; there is no
/// floating point anywhere in the classification or certificate paths.
/// Finite values are kept in lowest terms with positive denominator.
/// The extension is one-sided: operations whose exact result would be
/// -infinity or an indeterminate form (inf - inf, 0 * inf, inf / inf)
/// throw std::domain_error instead of inventing a value.
class ExtRational {
public:
  ExtRational() : finite_(true), v_(0) {}
  ExtRational(int n) : finite_(true), v_(n) {}
  ExtRational(long long n) : finite_(true), v_(n) {}
  ExtRational(long long num, long long den);
  explicit ExtRational(BigRational v) : finite_(true), v_(std::move(v)) {}

  static ExtRational infinity();

  /// Parses "inf", "a/b", an integer, or a plain decimal such as "2.75".
  /// Decimals convert exactly; throws std::invalid_argument on bad input.
  static ExtRational from_string(std::string_view s);

  bool is_finite() const { return finite_; }
  bool is_infinite() const { return !finite_; }
  bool is_zero() const { return finite_ && v_.is_zero(); }

  /// -1, 0 or +1; infinity has sign +1.
  int sign() const;

  BigInt numerator() const;    // throws on infinity
  BigInt denominator() const;  // throws on infinity

  /// 1/x with reciprocal(inf) = 0; reciprocal(0) throws.
  ExtRational reciprocal() const;

  ExtRational operator-() const;  // throws on infinity

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator-(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator*(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator/(const ExtRational& a, const ExtRational& b);

  ExtRational& operator+=(const ExtRational& o) { return *this = *this + o; }
  ExtRational& operator-=(const ExtRational& o) { return *this = *this - o; }
  ExtRational& operator*=(const ExtRational& o) { return *this = *this * o; }
  ExtRational& operator/=(const ExtRational& o) { return *this = *this / o; }

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a,
                                          const ExtRational& b);

  /// Canonical text form: "num/den" in lowest terms, or "inf".
  std::string str() const;

private:
  bool finite_;
  BigRational v_;
};

ExtRational min(const ExtRational& a, const ExtRational& b);
ExtRational max(const ExtRational& a, const ExtRational& b);
ExtRational abs(const ExtRational& a);

/// Nearest double; infinity maps to +HUGE_VAL.
double to_double(const ExtRational& a);

}  // namespace regula

#endif
