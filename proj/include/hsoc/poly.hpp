#pragma once

#include <vector>

#include "hsoc/gf.hpp"

namespace hsoc {

// Dense polynomials over the tower field, ascending coefficients.
// The zero polynomial is the empty vector.

inline void poly_trim(std::vector<Fel>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int poly_deg(const std::vector<Fel>& a) { return (int)a.size() - 1; }

inline std::vector<Fel> poly_add(const Field& F, std::vector<Fel> a,
                                 const std::vector<Fel>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
  poly_trim(a);
  return a;
}

inline std::vector<Fel> poly_neg(const Field& F, std::vector<Fel> a) {
  for (auto& c : a) c = F.neg(c);
  return a;
}

inline std::vector<Fel> poly_sub(const Field& F, std::vector<Fel> a,
                                 const std::vector<Fel>& b) {
  return poly_add(F, std::move(a), poly_neg(F, b));
}

inline std::vector<Fel> poly_mul(const Field& F, const std::vector<Fel>& a,
                                 const std::vector<Fel>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Fel> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
  }
  poly_trim(c);
  return c;
}

inline std::vector<Fel> poly_scale(const Field& F, std::vector<Fel> a, Fel s) {
  for (auto& c : a) c = F.mul(c, s);
  poly_trim(a);
  return a;
}

// quotient-and-remainder; divisor need not be monic
inline std::pair<std::vector<Fel>, std::vector<Fel>> poly_divmod(
    const Field& F, std::vector<Fel> a, const std::vector<Fel>& b) {
  if (b.empty()) throw error("polynomial division by zero");
  std::vector<Fel> quo;
  if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, 0);
  Fel lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    Fel c = F.mul(a.back(), lead_inv);
    std::size_t shift = a.size() - b.size();
    quo[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    a.pop_back();
    poly_trim(a);
  }
  poly_trim(quo);
  return {quo, a};
}

inline Fel poly_eval(const Field& F, const std::vector<Fel>& a, Fel x) {
  Fel r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
  return r;
}

// x^n - 1
inline std::vector<Fel> poly_xn_minus_1(const Field& F, std::size_t n) {
  std::vector<Fel> f(n + 1, 0);
  f[0] = F.neg(1);
  f[n] = 1;
  return f;
}

}  // namespace hsoc
