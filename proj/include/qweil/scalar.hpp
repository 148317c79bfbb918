// The coefficient field used everywhere: Q(q, L, c) extended by the radicals
// t and r2 with t^2 = c(q^2+1)/q and r2^2 = 2.  Elements are stored as
// a0 + a1*t + a2*r2 + a3*t*r2 over RatFunc, always canonical.
//
// eval_q1 moves into the companion tower where t^2 = 2c (the relation the
// first one degenerates to at q = 1), so arithmetic stays consistent after
// the substitution.

#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "qweil/rational.hpp"

namespace qweil {

enum class BarMode {
  UNIT_CIRCLE,  // q -> q^-1, L -> L^-1
  REAL,         // identity on q, L
};

struct UnitTower {
  static RatFunc t_squared() {
    // c(q^2+1)/q
    return RatFunc(Poly::var_c() * (Poly::var_q(2) + Poly(1L)), Poly::var_q());
  }
};

struct LimitTower {
  static RatFunc t_squared() { return RatFunc(Poly::var_c().scaled(Rat(2))); }
};

template <class Tower>
class ScalarT {
 public:
  ScalarT() = default;
  explicit ScalarT(RatFunc a0) { comp_[0] = std::move(a0); }
  explicit ScalarT(long n) { comp_[0] = RatFunc(n); }

  static ScalarT zero() { return ScalarT(); }
  static ScalarT one() { return ScalarT(1L); }
  static ScalarT integer(long n) { return ScalarT(n); }
  static ScalarT rational(long num, long den) { return ScalarT(RatFunc(Rat(num, den))); }
  static ScalarT q(int e = 1) { return ScalarT(RatFunc::q(e)); }
  static ScalarT L(int e = 1) { return ScalarT(RatFunc::L(e)); }
  static ScalarT c(int e = 1) { return ScalarT(RatFunc::c(e)); }
  static ScalarT t() {
    ScalarT s;
    s.comp_[1] = RatFunc(Rat(1));
    return s;
  }
  static ScalarT r2() {
    ScalarT s;
    s.comp_[2] = RatFunc(Rat(1));
    return s;
  }
  static ScalarT from(RatFunc a0, RatFunc at, RatFunc ar, RatFunc atr) {
    ScalarT s;
    s.comp_ = {std::move(a0), std::move(at), std::move(ar), std::move(atr)};
    return s;
  }

  // [m]_q = (q^m - q^-m)/(q - q^-1)
  static ScalarT qnumber(int m) {
    return ScalarT((RatFunc::q(m) - RatFunc::q(-m)) / (RatFunc::q(1) - RatFunc::q(-1)));
  }

  const RatFunc& part(int i) const { return comp_[i]; }
  bool is_zero() const {
    for (auto& f : comp_)
      if (!f.is_zero()) return false;
    return true;
  }
  bool is_rational_part_only() const {
    return comp_[1].is_zero() && comp_[2].is_zero() && comp_[3].is_zero();
  }
  const RatFunc& rational_part() const { return comp_[0]; }

  friend bool operator==(const ScalarT& a, const ScalarT& b) {
    return a.comp_ == b.comp_;
  }

  friend ScalarT operator+(const ScalarT& a, const ScalarT& b) {
    ScalarT r;
    for (int i = 0; i < 4; ++i) r.comp_[i] = a.comp_[i] + b.comp_[i];
    return r;
  }
  friend ScalarT operator-(const ScalarT& a, const ScalarT& b) {
    ScalarT r;
    for (int i = 0; i < 4; ++i) r.comp_[i] = a.comp_[i] - b.comp_[i];
    return r;
  }
  ScalarT operator-() const {
    ScalarT r;
    for (int i = 0; i < 4; ++i) r.comp_[i] = -comp_[i];
    return r;
  }

  friend ScalarT operator*(const ScalarT& a, const ScalarT& b) {
    // component bits: 1 = carries t, 2 = carries r2; the product of basis
    // radicals i and j lands in component i^j with factor T^(t overlap) *
    // 2^(r2 overlap)
    static const RatFunc T = Tower::t_squared();
    ScalarT r;
    for (int i = 0; i < 4; ++i) {
      if (a.comp_[i].is_zero()) continue;
      for (int j = 0; j < 4; ++j) {
        if (b.comp_[j].is_zero()) continue;
        RatFunc term = a.comp_[i] * b.comp_[j];
        if (i & j & 1) term *= T;
        if (i & j & 2) term *= RatFunc(2L);
        r.comp_[i ^ j] += term;
      }
    }
    return r;
  }

  ScalarT inverse() const {
    if (is_zero()) throw std::domain_error("zero divisor");
    // Norm-form inversion done in polynomial arithmetic: bring everything
    // over one denominator and replace t by the polynomial radical
    // th := t * den(t^2), so the two conjugation steps stay fraction-free.
    const RatFunc T = Tower::t_squared();
    const Poly& Tn = T.num();
    const Poly& Td = T.den();
    const Poly That = Tn * Td;  // th^2

    Poly D(Rat(1));
    for (int i = 0; i < 4; ++i) {
      if (comp_[i].is_zero()) continue;
      Poly g = poly_gcd(D, comp_[i].den());
      D = D * comp_[i].den().div_exact(g);
    }
    std::array<Poly, 4> A;  // x = (A0 + A1 th + A2 r2 + A3 th r2) / (Td * D)
    for (int i = 0; i < 4; ++i) {
      if (comp_[i].is_zero()) continue;
      A[i] = comp_[i].num() * D.div_exact(comp_[i].den());
      if (i == 0 || i == 2) A[i] = A[i] * Td;
    }
    const Poly two = Poly(Rat(2));
    Poly n0 = A[0] * A[0] + A[1] * A[1] * That - two * (A[2] * A[2]) -
              two * (A[3] * A[3] * That);
    Poly n1 = two * (A[0] * A[1] - two * A[2] * A[3]);
    Poly dhat = n0 * n0 - n1 * n1 * That;
    if (dhat.is_zero()) throw std::domain_error("zero divisor");

    Poly y0 = A[0] * n0 - A[1] * n1 * That;
    Poly y1 = A[1] * n0 - A[0] * n1;
    Poly y2 = A[3] * n1 * That - A[2] * n0;
    Poly y3 = A[2] * n1 - A[3] * n0;

    Poly Dp = Td * D;
    ScalarT r;
    r.comp_[0] = RatFunc(Dp * y0, dhat);
    r.comp_[1] = RatFunc(Dp * y1 * Td, dhat);
    r.comp_[2] = RatFunc(Dp * y2, dhat);
    r.comp_[3] = RatFunc(Dp * y3 * Td, dhat);
    return r;
  }

  friend ScalarT operator/(const ScalarT& a, const ScalarT& b) { return a * b.inverse(); }
  ScalarT& operator+=(const ScalarT& o) { return *this = *this + o; }
  ScalarT& operator-=(const ScalarT& o) { return *this = *this - o; }
  ScalarT& operator*=(const ScalarT& o) { return *this = *this * o; }
  ScalarT& operator/=(const ScalarT& o) { return *this = *this / o; }

  ScalarT pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    ScalarT r = one(), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  ScalarT bar(BarMode mode) const {
    if (mode == BarMode::REAL) return *this;
    ScalarT r;
    for (int i = 0; i < 4; ++i) r.comp_[i] = comp_[i].bar_inverted();
    return r;
  }

  ScalarT specialize_L(int n) const {
    ScalarT r;
    for (int i = 0; i < 4; ++i) r.comp_[i] = comp_[i].specialize_L(n);
    return r;
  }

  std::string str() const {
    static const char* radicals[4] = {"", "t", "r2", "t*r2"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
      if (comp_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += comp_[i].str();
      } else if (comp_[i].is_one()) {
        out += radicals[i];
      } else {
        out += comp_[i].str() + std::string("*") + radicals[i];
      }
    }
    return out.empty() ? "0" : out;
  }

  std::array<RatFunc, 4> components() const { return comp_; }

 private:
  std::array<RatFunc, 4> comp_;  // 1, t, r2, t*r2
};

using Scalar = ScalarT<UnitTower>;
using ScalarQ1 = ScalarT<LimitTower>;

inline ScalarQ1 eval_q1(const Scalar& s) {
  return ScalarQ1::from(s.part(0).eval_q1(), s.part(1).eval_q1(),
                        s.part(2).eval_q1(), s.part(3).eval_q1());
}

}  // namespace qweil
