// rational.cpp - Exact rational scalars extended with +infinity
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "regula/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace regula {

namespace {

[[noreturn]] void indeterminate(const char* what) {
  throw std::domain_error(std::string("indeterminate extended-rational form: ") + what);
}

}  // namespace

ExtRational::ExtRational(long long num, long long den) : finite_(true) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  v_ = BigRational(BigInt(num), BigInt(den));
}

ExtRational ExtRational::infinity() {
  ExtRational x;
  x.finite_ = false;
  return x;
}

ExtRational ExtRational::from_string(std::string_view s) {
  auto bad = [&]() -> ExtRational {
    throw std::invalid_argument("cannot parse rational: '" + std::string(s) + "'");
  };
  if (s.empty()) return bad();
  if (s == "inf") return infinity();

  bool neg = false;
  size_t i = 0;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size()) return bad();

  BigInt num = 0, den = 1;
  bool saw_digit = false, saw_slash = false, saw_dot = false;
  for (; i < s.size(); ++i) {
    char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      num = num * 10 + (ch - '0');
      if (saw_dot) den *= 10;
      saw_digit = true;
    } else if (ch == '/' && !saw_slash && !saw_dot && saw_digit) {
      saw_slash = true;
      // parse denominator
      ++i;
      BigInt d = 0;
      bool dd = false;
      for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return bad();
        d = d * 10 + (s[i] - '0');
        dd = true;
      }
      if (!dd || d == 0) return bad();
      den = d;
      break;
    } else if (ch == '.' && !saw_dot && !saw_slash) {
      saw_dot = true;
    } else {
      return bad();
    }
  }
  if (!saw_digit) return bad();
  if (neg) num = -num;
  return ExtRational(BigRational(num, den));
}

int ExtRational::sign() const {
  if (!finite_) return 1;
  return v_.sign();
}

BigInt ExtRational::numerator() const {
  if (!finite_) throw std::domain_error("numerator of infinity");
  return boost::multiprecision::numerator(v_);
}

BigInt ExtRational::denominator() const {
  if (!finite_) throw std::domain_error("denominator of infinity");
  return boost::multiprecision::denominator(v_);
}

ExtRational ExtRational::reciprocal() const {
  if (!finite_) return ExtRational(0);
  if (v_.is_zero()) throw std::domain_error("reciprocal of zero");
  return ExtRational(BigRational(boost::multiprecision::denominator(v_),
                                 boost::multiprecision::numerator(v_)));
}

ExtRational ExtRational::operator-() const {
  if (!finite_) indeterminate("-inf");
  return ExtRational(BigRational(-v_));
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (!a.finite_ || !b.finite_) return ExtRational::infinity();
  return ExtRational(BigRational(a.v_ + b.v_));
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) {
  if (!b.finite_) indeterminate(a.finite_ ? "finite - inf" : "inf - inf");
  if (!a.finite_) return ExtRational::infinity();
  return ExtRational(BigRational(a.v_ - b.v_));
}

ExtRational operator*(const ExtRational& a, const ExtRational& b) {
  if (!a.finite_ || !b.finite_) {
    const ExtRational& fin = a.finite_ ? a : b;
    if (fin.is_finite() && fin.sign() <= 0) indeterminate("inf * nonpositive");
    return ExtRational::infinity();
  }
  return ExtRational(BigRational(a.v_ * b.v_));
}

ExtRational operator/(const ExtRational& a, const ExtRational& b) {
  if (!b.finite_) {
    if (!a.finite_) indeterminate("inf / inf");
    return ExtRational(0);
  }
  if (b.v_.is_zero()) throw std::domain_error("division by zero");
  if (!a.finite_) {
    if (b.sign() < 0) indeterminate("inf / negative");
    return ExtRational::infinity();
  }
  return ExtRational(BigRational(a.v_ / b.v_));
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.finite_ != b.finite_) return false;
  if (!a.finite_) return true;
  return a.v_ == b.v_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
  if (!a.finite_) return std::strong_ordering::greater;
  if (!b.finite_) return std::strong_ordering::less;
  if (a.v_ < b.v_) return std::strong_ordering::less;
  if (a.v_ > b.v_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtRational::str() const {
  if (!finite_) return "inf";
  return boost::multiprecision::numerator(v_).str() + "/" +
         boost::multiprecision::denominator(v_).str();
}

ExtRational min(const ExtRational& a, const ExtRational& b) { return a <= b ? a : b; }
ExtRational max(const ExtRational& a, const ExtRational& b) { return a >= b ? a : b; }

ExtRational abs(const ExtRational& a) {
  if (a.is_infinite() || a.sign() >= 0) return a;
  return -a;
}

double to_double(const ExtRational& a) {
  if (a.is_infinite()) return HUGE_VAL;
  return static_cast<double>(BigRational(a.numerator(), a.denominator()));
}

}  // namespace regula
