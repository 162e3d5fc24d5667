#pragma once
#include <string>

#include "errors.hpp"

namespace curvecx {

// exact rational scalar for weights, lengths and areas; stored reduced with
// positive denominator, intermediates widened to __int128
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n) {}
  Rational(long long n, long long d) { *this = make(n, d); }

  static Rational make(__int128 n, __int128 d) {
    if (d == 0) throw input_error("rational with zero denominator");
    if (d < 0) n = -n, d = -d;
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 r = a % b;
      a = b;
      b = r;
    }
    if (a) n /= a, d /= a;
    const __int128 lim = static_cast<__int128>(1) << 62;
    if (n >= lim || -n >= lim || d >= lim)
      throw resource_error("rational overflow");
    Rational q;
    q.num = static_cast<long long>(n);
    q.den = static_cast<long long>(d);
    return q;
  }

  double to_double() const { return static_cast<double>(num) / den; }

  std::string str() const {
    std::string s = std::to_string(num);
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  }

  friend Rational operator+(Rational a, Rational b) {
    return make(static_cast<__int128>(a.num) * b.den +
                    static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator-(Rational a, Rational b) {
    return make(static_cast<__int128>(a.num) * b.den -
                    static_cast<__int128>(b.num) * a.den,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator*(Rational a, Rational b) {
    return make(static_cast<__int128>(a.num) * b.num,
                static_cast<__int128>(a.den) * b.den);
  }
  friend Rational operator/(Rational a, Rational b) {
    if (b.num == 0) throw input_error("division by zero rational");
    return make(static_cast<__int128>(a.num) * b.den,
                static_cast<__int128>(a.den) * b.num);
  }
  friend bool operator==(Rational a, Rational b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(Rational a, Rational b) { return !(a == b); }
  friend bool operator<(Rational a, Rational b) {
    return static_cast<__int128>(a.num) * b.den <
           static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(Rational a, Rational b) { return !(b < a); }
  friend bool operator>(Rational a, Rational b) { return b < a; }
  friend bool operator>=(Rational a, Rational b) { return !(a < b); }
};

// accepts "3", "-3", "2/5" and decimal "0.25"
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw input_error("empty rational");
  auto digits = [](const std::string& p) {
    if (p.empty() || p.size() > 18) throw input_error("malformed rational");
    for (char c : p)
      if (c < '0' || c > '9') throw input_error("malformed rational");
    return p;
  };
  std::string body = s;
  bool neg = body[0] == '-';
  if (neg || body[0] == '+') body.erase(0, 1);
  __int128 num = 0, den = 1;
  if (auto k = body.find('/'); k != std::string::npos) {
    for (char c : digits(body.substr(0, k))) num = num * 10 + (c - '0');
    for (char c : digits(body.substr(k + 1))) den = den * 10 + (c - '0');
  } else if (auto k2 = body.find('.'); k2 != std::string::npos) {
    for (char c : digits(body.substr(0, k2))) num = num * 10 + (c - '0');
    for (char c : digits(body.substr(k2 + 1))) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else {
    for (char c : digits(body)) num = num * 10 + (c - '0');
  }
  return Rational::make(neg ? -num : num, den);
}

}  // namespace curvecx
