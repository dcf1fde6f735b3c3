#pragma once

#include <cstdint>
#include <vector>

namespace coxforge::modp {

using u64 = std::uint64_t;
using FpPoly = std::vector<u64>;

/// Dense polynomial arithmetic over F_ell, ell < 2^32.
struct Fp {
  u64 ell;
  u64 mul(u64 a, u64 b) const { return a * b % ell; }
  u64 add(u64 a, u64 b) const { return (a + b) % ell; }
  u64 sub(u64 a, u64 b) const { return (a + ell - b) % ell; }
  u64 inv(u64 a) const { return pow(a, ell - 2); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    a %= ell;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  static void trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  FpPoly mod(FpPoly a, const FpPoly& f) const {
    trim(a);
    const std::size_t df = f.size() - 1;
    u64 li = inv(f.back());
    while (a.size() > df) {
      u64 c = mul(a.back(), li);
      std::size_t shift = a.size() - 1 - df;
      for (std::size_t j = 0; j <= df; ++j) a[shift + j] = sub(a[shift + j], mul(c, f[j]));
      trim(a);
    }
    return a;
  }
  FpPoly mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f) const {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    return mod(std::move(r), f);
  }
  FpPoly powmod(FpPoly base, u64 e, const FpPoly& f) const {
    FpPoly r{1};
    base = mod(std::move(base), f);
    while (e) {
      if (e & 1) r = mulmod(r, base, f);
      base = mulmod(base, base, f);
      e >>= 1;
    }
    return r;
  }
  FpPoly gcd(FpPoly a, FpPoly b) const {
    trim(a);
    trim(b);
    while (!b.empty()) {
      FpPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.empty()) {
      u64 li = inv(a.back());
      for (auto& c : a) c = mul(c, li);
    }
    return a;
  }
  FpPoly div(FpPoly a, const FpPoly& f) const {
    trim(a);
    const std::size_t df = f.size() - 1;
    if (a.size() <= df) return {};
    FpPoly q(a.size() - df, 0);
    u64 li = inv(f.back());
    for (std::size_t i = a.size() - 1; i + 1 > df; --i) {
      u64 c = mul(a[i], li);
      q[i - df] = c;
      for (std::size_t j = 0; j <= df; ++j) a[i - df + j] = sub(a[i - df + j], mul(c, f[j]));
      if (i == 0) break;
    }
    trim(q);
    return q;
  }
  FpPoly derivative(const FpPoly& a) const {
    FpPoly d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(mul(a[i], i % ell));
    trim(d);
    return d;
  }
};

}  // namespace coxforge::modp
