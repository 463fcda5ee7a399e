#pragma once

#include <string>
#include <vector>

#include "crossnest/bigint.hpp"
#include "crossnest/errors.hpp"

namespace crossnest {

// Dense univariate polynomial over the integers, coefficients ascending,
// trailing zeros trimmed.  The zero polynomial has an empty vector.
struct IntPoly {
  std::vector<BigCount> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<BigCount> coeffs) : c(std::move(coeffs)) { trim(); }

  static IntPoly constant(BigCount v);
  static IntPoly monomial(BigCount v, int degree);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  BigCount coeff(int i) const;
  void trim();

  BigCount eval(const BigCount& x) const;
  BigCount content() const;          // nonnegative gcd of coefficients
  IntPoly primitive_part() const;    // sign of the leading coefficient kept

  bool operator==(const IntPoly&) const = default;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

// Exact division; throws on a nonzero remainder.
IntPoly divexact(const IntPoly& a, const IntPoly& b);

// gcd over Z[x] (content gcd times primitive-part gcd), positive leading
// coefficient, via the primitive pseudo-remainder sequence.
IntPoly poly_gcd(IntPoly a, IntPoly b);

}  // namespace crossnest
