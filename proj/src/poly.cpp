#include "crossnest/poly.hpp"

#include <algorithm>

namespace crossnest {

IntPoly IntPoly::constant(BigCount v) {
  IntPoly p;
  p.c.push_back(std::move(v));
  p.trim();
  return p;
}

IntPoly IntPoly::monomial(BigCount v, int degree) {
  IntPoly p;
  if (degree < 0) throw OutOfRange("monomial degree must be nonnegative");
  p.c.assign(static_cast<std::size_t>(degree) + 1, 0);
  p.c.back() = std::move(v);
  p.trim();
  return p;
}

BigCount IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c.size())) return 0;
  return c[static_cast<std::size_t>(i)];
}

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

BigCount IntPoly::eval(const BigCount& x) const {
  BigCount acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigCount IntPoly::content() const {
  BigCount g = 0;
  for (const auto& v : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  BigCount g = content();
  IntPoly out = *this;
  for (auto& v : out.c) v /= g;
  return out;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] += b.c[i];
  out.trim();
  return out;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly out;
  out.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] += a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) out.c[i] -= b.c[i];
  out.trim();
  return out;
}

IntPoly operator-(const IntPoly& a) {
  IntPoly out = a;
  for (auto& v : out.c) v = -v;
  return out;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntPoly out;
  out.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
  }
  out.trim();
  return out;
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw Error("inexact polynomial division");
  IntPoly rem = a;
  IntPoly quot;
  quot.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const BigCount& lead = b.c.back();
  for (int d = a.degree(); d >= b.degree(); --d) {
    BigCount top = rem.coeff(d);
    if (top == 0) continue;
    BigCount q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw Error("inexact polynomial division");
    std::size_t shift = static_cast<std::size_t>(d - b.degree());
    quot.c[shift] = q;
    for (std::size_t i = 0; i < b.c.size(); ++i) rem.c[shift + i] -= q * b.c[i];
  }
  rem.trim();
  if (!rem.is_zero()) throw Error("inexact polynomial division");
  quot.trim();
  return quot;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a  mod  b
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const BigCount& lead = b.c.back();
  int steps = a.degree() - b.degree() + 1;
  for (int s = 0; s < steps; ++s) {
    for (auto& v : a.c) v *= lead;
    BigCount top = a.coeff(a.degree());
    int shift = a.degree() - b.degree();
    if (a.degree() >= b.degree() && top != 0) {
      BigCount q = top / lead;
      for (std::size_t i = 0; i < b.c.size(); ++i)
        a.c[static_cast<std::size_t>(shift) + i] -= q * b.c[i];
    }
    a.trim();
    if (a.degree() < b.degree()) {
      // pad the remaining multiplications so the power of lc(b) is as stated
      for (int t = s + 1; t < steps; ++t)
        for (auto& v : a.c) v *= lead;
      break;
    }
  }
  return a;
}

}  // namespace

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  auto normalize = [](IntPoly p) {
    if (!p.is_zero() && p.c.back() < 0)
      for (auto& v : p.c) v = -v;
    return p;
  };
  if (a.is_zero()) return normalize(std::move(b));
  if (b.is_zero()) return normalize(std::move(a));
  BigCount cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  a = a.primitive_part();
  b = b.primitive_part();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  a = normalize(std::move(a));
  for (auto& v : a.c) v *= cont;
  return a;
}

}  // namespace crossnest
