// Shared basics: error taxonomy, exact rationals, roots of unity.

#ifndef WEYLEXT_BASE_HPP_
#define WEYLEXT_BASE_HPP_

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylext {

// Error taxonomy. The CLI maps these to exit codes: input/inconsistent
// data -> 2, theorem violation -> 3, resource guard / numerical
// degeneracy -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or invalid input (bad indices, bad tables, failed validation).
class InputError : public Error {
 public:
  using Error::Error;
};

// Input that parses but contradicts itself (e.g. a stabilizer that moves
// the root set it is supposed to preserve).
class InconsistentDatumError : public InputError {
 public:
  using InputError::InputError;
};

// A structural identity that is a theorem for valid data failed; signals
// corrupted input rather than a bug in the caller's usage.
class TheoremViolationError : public Error {
 public:
  using Error::Error;
};

// Enumeration or search-space guard exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A numerical computation could not be resolved at the working tolerance.
class ComputationError : public Error {
 public:
  using Error::Error;
};

// Exact rational number with a non-negative denominator.
struct Frac {
  long long num = 0;
  long long den = 1;

  Frac() = default;
  Frac(long long n) : num(n), den(1) {}
  Frac(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw InputError("Frac: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }

  friend Frac operator+(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    return Frac(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Frac operator*(const Frac& a, const Frac& b) {
    return Frac(a.num * b.num, a.den * b.den);
  }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num == 0) throw InputError("Frac: division by zero");
    return Frac(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const Frac& a, const Frac& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Frac& a, const Frac& b) { return !(a == b); }
};

// Root of unity stored as an exact exponent in Q/Z: value = exp(2*pi*i*num/den),
// normalized so that 0 <= num < den.
struct UnitRoot {
  long long num = 0;
  long long den = 1;

  UnitRoot() = default;
  UnitRoot(long long n, long long d) : num(n), den(d) { normalize(); }

  static UnitRoot one() { return UnitRoot(); }

  void normalize() {
    if (den <= 0) throw InputError("UnitRoot: nonpositive denominator");
    num %= den;
    if (num < 0) num += den;
    long long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_one() const { return num == 0; }

  UnitRoot inverse() const { return UnitRoot(-num, den); }

  friend UnitRoot operator*(const UnitRoot& a, const UnitRoot& b) {
    return UnitRoot(a.num * b.den + b.num * a.den, a.den * b.den);
  }

  UnitRoot pow(long long k) const { return UnitRoot(num * k, den); }

  std::complex<double> value() const {
    const double two_pi = 6.283185307179586476925286766559;
    double t = two_pi * double(num) / double(den);
    return {std::cos(t), std::sin(t)};
  }

  friend bool operator==(const UnitRoot& a, const UnitRoot& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const UnitRoot& a, const UnitRoot& b) {
    return !(a == b);
  }
};

inline std::string vec_to_string(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace weylext

#endif  // WEYLEXT_BASE_HPP_
