// Exact scalar types used throughout: arbitrary-precision rationals (the
// default working field) and a small prime field for modular runs.  No
// floating point anywhere.

#ifndef STRALG_FIELD_HPP_
#define STRALG_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stralg {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(Rational const& x) { return x.str(); }

/// Parses "p", "-p" or "p/q".
inline Rational rational_from_string(std::string const& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
  boost::multiprecision::cpp_int num(s.substr(0, slash)), den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rational(num, den);
}

// Prime field with a process-wide modulus.  The workbench is single threaded;
// set_modulus must be called before any arithmetic.
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long long x) {
    long long p = modulus();
    v_ = x % p;
    if (v_ < 0) v_ += p;
  }

  static void set_modulus(long long p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("modulus is not prime");
    modulus_ref() = p;
  }
  static long long modulus() {
    long long p = modulus_ref();
    if (p == 0) throw std::logic_error("Fp modulus not set");
    return p;
  }

  long long value() const { return v_; }

  friend Fp operator+(Fp a, Fp b) { return Fp(a.v_ + b.v_); }
  friend Fp operator-(Fp a, Fp b) { return Fp(a.v_ - b.v_); }
  friend Fp operator*(Fp a, Fp b) { return Fp(a.v_ * b.v_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  friend Fp operator-(Fp a) { return Fp(-a.v_); }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  Fp& operator/=(Fp b) { return *this = *this / b; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("division by zero in Fp");
    // extended Euclid
    long long p = modulus(), a = v_, b = p, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long t = a - q * b;
      a = b;
      b = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    return Fp(x0);
  }

 private:
  static long long& modulus_ref() {
    static long long p = 0;
    return p;
  }
  long long v_;
};

inline std::string to_string(Fp const& x) { return std::to_string(x.value()); }

inline Fp fp_from_string(std::string const& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Fp(std::stoll(s));
  return Fp(std::stoll(s.substr(0, slash))) / Fp(std::stoll(s.substr(slash + 1)));
}

}  // namespace stralg

#endif
