#pragma once

// Integer Laurent polynomials in v: the ground ring Z[v, v^-1].

#include <cstdint>
#include <map>
#include <string>

namespace afftl {

class LaurentPoly {
 public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  LaurentPoly(Coeff constant);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exponent, Coeff c = 1);
  static LaurentPoly v() { return monomial(1); }
  // [2] = v + v^-1, the value of a contractible loop.
  static LaurentPoly delta();
  static LaurentPoly delta_power(int x);

  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coeff(int exponent) const;
  const std::map<int, Coeff>& terms() const noexcept { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly scaled(Coeff c) const;
  LaurentPoly operator-() const { return scaled(-1); }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  // e.g. "v^2 + 2 + v^-2"
  std::string to_string() const;

 private:
  void add_term(int exponent, Coeff c);
  std::map<int, Coeff> terms_;  // no zero coefficients
};

}  // namespace afftl
