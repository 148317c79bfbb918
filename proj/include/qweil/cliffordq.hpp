// The 8-dimensional q-Clifford algebra of sl2 on the PBW basis
//   1, v2, v0, vm2, v2 vm2, v2 v0, v0 vm2, v2 v0 vm2,
// the classical Clifford algebra Cl(sl2), the central element gamma, the
// two spin modules, the isomorphism phi and the maps alpha, alpha0.
//
// Multiplication straightens words with the six table rules
//   v2 v2 = 0, vm2 vm2 = 0, v0 v2 = -q^-2 v2 v0, vm2 v0 = -q^-2 v0 vm2,
//   v0 v0 = (1-q^4)/q^3 v2 vm2 + (q^2+1)/q c,
//   vm2 v2 = -v2 vm2 + (q^2+1)/q^2 c.

#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweil/uqsl2.hpp"

namespace qweil {

// --- q-deformed Clifford algebra ----------------------------------------

enum class ClBasis : int {
  One = 0,
  V2 = 1,
  V0 = 2,
  Vm2 = 3,
  V2Vm2 = 4,
  V2V0 = 5,
  V0Vm2 = 6,
  V2V0Vm2 = 7,
};

constexpr int kClDim = 8;

inline int cl_weight(ClBasis b) {
  static constexpr int w[kClDim] = {0, 2, 0, -2, 0, 2, -2, 0};
  return w[static_cast<int>(b)];
}
inline int cl_parity(ClBasis b) {
  static constexpr int p[kClDim] = {0, 1, 1, 1, 0, 0, 0, 1};
  return p[static_cast<int>(b)];
}

// generator letters of a basis monomial, in PBW order v2 < v0 < vm2
inline const std::vector<int>& cl_letters(ClBasis b) {
  static const std::array<std::vector<int>, kClDim> w = {{
      {},
      {0},
      {1},
      {2},
      {0, 2},
      {0, 1},
      {1, 2},
      {0, 1, 2},
  }};
  return w[static_cast<int>(b)];
}

class ClqElem {
 public:
  ClqElem() = default;
  static ClqElem zero() { return {}; }
  static ClqElem basis(ClBasis b, Scalar s = Scalar::one()) {
    ClqElem x;
    x.c_[static_cast<int>(b)] = std::move(s);
    return x;
  }
  static ClqElem one() { return basis(ClBasis::One); }
  static ClqElem v2() { return basis(ClBasis::V2); }
  static ClqElem v0() { return basis(ClBasis::V0); }
  static ClqElem vm2() { return basis(ClBasis::Vm2); }

  const Scalar& coeff(ClBasis b) const { return c_[static_cast<int>(b)]; }
  Scalar& coeff(ClBasis b) { return c_[static_cast<int>(b)]; }
  const std::array<Scalar, kClDim>& coeffs() const { return c_; }

  bool is_zero() const {
    for (auto& s : c_)
      if (!s.is_zero()) return false;
    return true;
  }
  friend bool operator==(const ClqElem& a, const ClqElem& b) { return a.c_ == b.c_; }

  friend ClqElem operator+(ClqElem a, const ClqElem& b) {
    for (int i = 0; i < kClDim; ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend ClqElem operator-(ClqElem a, const ClqElem& b) {
    for (int i = 0; i < kClDim; ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  ClqElem operator-() const { return scaled(-Scalar::one()); }
  ClqElem& operator+=(const ClqElem& o) { return *this = *this + o; }
  ClqElem& operator-=(const ClqElem& o) { return *this = *this - o; }
  ClqElem scaled(const Scalar& s) const {
    ClqElem r;
    for (int i = 0; i < kClDim; ++i)
      if (!c_[i].is_zero()) r.c_[i] = c_[i] * s;
    return r;
  }

  std::string str() const;

 private:
  std::array<Scalar, kClDim> c_;
};

namespace clq_detail {

// Straighten a word in the letters {0: v2, 1: v0, 2: vm2}.
inline ClqElem straighten(const std::vector<int>& word, const Scalar& coeff) {
  if (coeff.is_zero()) return ClqElem::zero();
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    int a = word[i], b = word[i + 1];
    if (a < b) continue;
    auto rest = [&](std::vector<int> mid) {
      std::vector<int> w(word.begin(), word.begin() + i);
      w.insert(w.end(), mid.begin(), mid.end());
      w.insert(w.end(), word.begin() + i + 2, word.end());
      return w;
    };
    if (a == 0 && b == 0) return ClqElem::zero();  // v2 v2 = 0
    if (a == 2 && b == 2) return ClqElem::zero();  // vm2 vm2 = 0
    if (a == 1 && b == 0)                          // v0 v2 = -q^-2 v2 v0
      return straighten(rest({0, 1}), coeff * -Scalar::q(-2));
    if (a == 2 && b == 1)                          // vm2 v0 = -q^-2 v0 vm2
      return straighten(rest({1, 2}), coeff * -Scalar::q(-2));
    if (a == 1 && b == 1) {
      // v0 v0 = (1-q^4)/q^3 v2 vm2 + (q^2+1)/q c
      Scalar s1 = (Scalar::one() - Scalar::q(4)) * Scalar::q(-3);
      Scalar s2 = (Scalar::q(2) + Scalar::one()) * Scalar::q(-1) * Scalar::c();
      return straighten(rest({0, 2}), coeff * s1) + straighten(rest({}), coeff * s2);
    }
    // a == 2 && b == 0: vm2 v2 = -v2 vm2 + (q^2+1)/q^2 c
    Scalar s2 = (Scalar::q(2) + Scalar::one()) * Scalar::q(-2) * Scalar::c();
    return straighten(rest({0, 2}), -coeff) + straighten(rest({}), coeff * s2);
  }
  // sorted word of distinct letters
  static constexpr ClBasis lut[2][2][2] = {
      {{ClBasis::One, ClBasis::Vm2}, {ClBasis::V0, ClBasis::V0Vm2}},
      {{ClBasis::V2, ClBasis::V2Vm2}, {ClBasis::V2V0, ClBasis::V2V0Vm2}}};
  bool h0 = false, h1 = false, h2 = false;
  for (int l : word) (l == 0 ? h0 : l == 1 ? h1 : h2) = true;
  return ClqElem::basis(lut[h0][h1][h2], coeff);
}

// 8x8 structure constants, built once by straightening.
inline const std::array<std::array<ClqElem, kClDim>, kClDim>& table() {
  static const auto tab = [] {
    std::array<std::array<ClqElem, kClDim>, kClDim> t;
    for (int i = 0; i < kClDim; ++i)
      for (int j = 0; j < kClDim; ++j) {
        std::vector<int> w = cl_letters(static_cast<ClBasis>(i));
        const auto& wj = cl_letters(static_cast<ClBasis>(j));
        w.insert(w.end(), wj.begin(), wj.end());
        t[i][j] = straighten(w, Scalar::one());
      }
    return t;
  }();
  return tab;
}

}  // namespace clq_detail

inline ClqElem clq_mul(const ClqElem& x, const ClqElem& y) {
  ClqElem out;
  const auto& tab = clq_detail::table();
  for (int i = 0; i < kClDim; ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    for (int j = 0; j < kClDim; ++j) {
      if (y.coeffs()[j].is_zero()) continue;
      out += tab[i][j].scaled(x.coeffs()[i] * y.coeffs()[j]);
    }
  }
  return out;
}

// gamma = v2 v0 vm2 + c v0, central with gamma^2 = c^2 t^2
inline ClqElem gamma() {
  return ClqElem::basis(ClBasis::V2V0Vm2) + ClqElem::basis(ClBasis::V0, Scalar::c());
}
inline ClqElem gamma_pm(int sign) {
  Scalar ct = Scalar::c() * Scalar::t();
  return gamma() + ClqElem::one().scaled(sign >= 0 ? ct : -ct);
}

// --- U_q-module-algebra action on Cl_q ----------------------------------

namespace clq_detail {

inline ClqElem act_K(const ClqElem& v, int b) {
  ClqElem out;
  for (int i = 0; i < kClDim; ++i) {
    if (v.coeffs()[i].is_zero()) continue;
    ClBasis bb = static_cast<ClBasis>(i);
    out += ClqElem::basis(bb, v.coeffs()[i] * Scalar::q(b * cl_weight(bb)));
  }
  return out;
}

// Per-basis-monomial actions of E and F, built in word-length order from
// the generator table and the Leibniz rules
//   E.(v w) = (E.v)(K.w) + v (E.w),  F.(v w) = (F.v) w + (K^-1.v)(F.w).
struct ClqActionTables {
  std::array<ClqElem, kClDim> E, F;

  ClqActionTables() {
    auto letter_basis = [](int l) {
      return l == 0 ? ClBasis::V2 : l == 1 ? ClBasis::V0 : ClBasis::Vm2;
    };
    auto actE_letter = [](int l) {
      switch (l) {
        case 0: return ClqElem::zero();
        case 1: return ClqElem::v2().scaled(-(Scalar::q(1) + Scalar::q(-1)));
        default: return ClqElem::v0();
      }
    };
    auto actF_letter = [](int l) {
      switch (l) {
        case 0: return ClqElem::v0().scaled(-Scalar::one());
        case 1: return ClqElem::vm2().scaled(Scalar::q(1) + Scalar::q(-1));
        default: return ClqElem::zero();
      }
    };
    auto word_basis = [](const std::vector<int>& w) {
      for (int i = 0; i < kClDim; ++i)
        if (cl_letters(static_cast<ClBasis>(i)) == w) return static_cast<ClBasis>(i);
      throw std::logic_error("not a basis word");
    };
    // order of increasing word length: One, V2, V0, Vm2 come first in the enum,
    // then the pairs, then the triple, so a single forward pass works
    for (int i = 0; i < kClDim; ++i) {
      ClBasis b = static_cast<ClBasis>(i);
      const auto& w = cl_letters(b);
      if (w.empty()) {
        E[i] = ClqElem::zero();
        F[i] = ClqElem::zero();
        continue;
      }
      if (w.size() == 1) {
        E[i] = actE_letter(w[0]);
        F[i] = actF_letter(w[0]);
        continue;
      }
      std::vector<int> rest(w.begin() + 1, w.end());
      ClBasis rb = word_basis(rest);
      ClqElem rest_elem = ClqElem::basis(rb);
      ClqElem head_elem = ClqElem::basis(letter_basis(w[0]));
      int rest_weight = cl_weight(rb);
      int head_weight = cl_weight(letter_basis(w[0]));
      E[i] = clq_mul(actE_letter(w[0]), rest_elem).scaled(Scalar::q(rest_weight)) +
             clq_mul(head_elem, E[static_cast<int>(rb)]);
      F[i] = clq_mul(actF_letter(w[0]), rest_elem) +
             clq_mul(head_elem, F[static_cast<int>(rb)]).scaled(Scalar::q(-head_weight));
    }
  }
};

inline const ClqActionTables& action_tables() {
  static const ClqActionTables tabs;
  return tabs;
}

inline ClqElem act_E(const ClqElem& v) {
  const auto& tab = action_tables().E;
  ClqElem out;
  for (int i = 0; i < kClDim; ++i)
    if (!v.coeffs()[i].is_zero()) out += tab[i].scaled(v.coeffs()[i]);
  return out;
}
inline ClqElem act_F(const ClqElem& v) {
  const auto& tab = action_tables().F;
  ClqElem out;
  for (int i = 0; i < kClDim; ++i)
    if (!v.coeffs()[i].is_zero()) out += tab[i].scaled(v.coeffs()[i]);
  return out;
}

}  // namespace clq_detail

// x acts through the PBW factorization F^a K^b E^e, E first.
inline ClqElem uq_action_clq(const UqElem& x, const ClqElem& v) {
  ClqElem out;
  for (auto& [m, s] : x.terms()) {
    ClqElem cur = v;
    for (int i = 0; i < m.e && !cur.is_zero(); ++i) cur = clq_detail::act_E(cur);
    if (m.k != 0 && !cur.is_zero()) cur = clq_detail::act_K(cur, m.k);
    for (int i = 0; i < m.f && !cur.is_zero(); ++i) cur = clq_detail::act_F(cur);
    out += cur.scaled(s);
  }
  return out;
}

// --- spin modules ---------------------------------------------------------

struct SpinMatrix {
  // row-major 2x2 on the ordered basis (s_1, s_-1)
  std::array<Scalar, 4> m;

  static SpinMatrix zero() { return {}; }
  static SpinMatrix identity() {
    SpinMatrix r;
    r.m[0] = r.m[3] = Scalar::one();
    return r;
  }
  friend bool operator==(const SpinMatrix& a, const SpinMatrix& b) { return a.m == b.m; }
  friend SpinMatrix operator+(SpinMatrix a, const SpinMatrix& b) {
    for (int i = 0; i < 4; ++i) a.m[i] += b.m[i];
    return a;
  }
  friend SpinMatrix operator*(const SpinMatrix& a, const SpinMatrix& b) {
    SpinMatrix r;
    r.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
    r.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
    r.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
    r.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
    return r;
  }
  SpinMatrix scaled(const Scalar& s) const {
    SpinMatrix r;
    for (int i = 0; i < 4; ++i) r.m[i] = m[i] * s;
    return r;
  }
};

enum class SpinSign { Plus, Minus };

namespace clq_detail {

inline SpinMatrix spin_gen(SpinSign sign, int letter) {
  SpinMatrix r;
  Scalar t = Scalar::t();
  switch (letter) {
    case 0:  // v2
      r.m[1] = t;
      break;
    case 1:  // v0: diag(t/q^2, -t) on S-, diag(-t/q^2, t) on S+
      if (sign == SpinSign::Minus) {
        r.m[0] = t * Scalar::q(-2);
        r.m[3] = -t;
      } else {
        r.m[0] = -t * Scalar::q(-2);
        r.m[3] = t;
      }
      break;
    default:  // vm2
      r.m[2] = t * Scalar::q(-1);
      break;
  }
  return r;
}

}  // namespace clq_detail

inline SpinMatrix spin_rep(SpinSign sign, const ClqElem& x) {
  SpinMatrix out = SpinMatrix::zero();
  for (int i = 0; i < kClDim; ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    SpinMatrix acc = SpinMatrix::identity();
    for (int letter : cl_letters(static_cast<ClBasis>(i)))
      acc = acc * clq_detail::spin_gen(sign, letter);
    out = out + acc.scaled(x.coeffs()[i]);
  }
  return out;
}

// U_q-module structure on the spin modules (basis s_1, s_-1).
struct SpinVector {
  std::array<Scalar, 2> v;
  friend bool operator==(const SpinVector&, const SpinVector&) = default;
  friend SpinVector operator+(SpinVector a, const SpinVector& b) {
    a.v[0] += b.v[0];
    a.v[1] += b.v[1];
    return a;
  }
  SpinVector scaled(const Scalar& s) const { return {{v[0] * s, v[1] * s}}; }
  bool is_zero() const { return v[0].is_zero() && v[1].is_zero(); }
};

inline SpinVector spin_apply(const SpinMatrix& m, const SpinVector& x) {
  return {{m.m[0] * x.v[0] + m.m[1] * x.v[1], m.m[2] * x.v[0] + m.m[3] * x.v[1]}};
}

// E, F, K act on the spin module by E s_-1 = (+-) s_1, F s_1 = (+-) s_-1,
// K s_(+-1) = q^(+-1) s_(+-1); the sign is + on S- and - on S+, the unique
// pairing compatible with the Cl_q action through the coproduct.
inline SpinVector spin_uq_action(SpinSign sign, const UqElem& x, const SpinVector& sv) {
  Scalar fsign = sign == SpinSign::Minus ? Scalar::one() : -Scalar::one();
  auto actE = [&](const SpinVector& s) {
    return SpinVector{{fsign * s.v[1], Scalar::zero()}};
  };
  auto actF = [&](const SpinVector& s) {
    return SpinVector{{Scalar::zero(), fsign * s.v[0]}};
  };
  auto actK = [&](const SpinVector& s, int b) {
    return SpinVector{{s.v[0] * Scalar::q(b), s.v[1] * Scalar::q(-b)}};
  };
  SpinVector out{};
  for (auto& [m, s] : x.terms()) {
    SpinVector cur = sv;
    for (int i = 0; i < m.e; ++i) cur = actE(cur);
    if (m.k != 0) cur = actK(cur, m.k);
    for (int i = 0; i < m.f; ++i) cur = actF(cur);
    out = out + cur.scaled(s);
  }
  return out;
}

// --- classical Clifford algebra Cl(sl2) ----------------------------------

// basis of sorted monomials in e < h < f with
//   e^2 = 0, f^2 = 0, h^2 = 2, fe = -ef + 2, he = -eh, fh = -hf
enum class ClcBasis : int {
  One = 0,
  E = 1,
  H = 2,
  F = 3,
  EH = 4,
  EF = 5,
  HF = 6,
  EHF = 7,
};

inline const std::vector<int>& clc_letters(ClcBasis b) {
  // letters 0:e, 1:h, 2:f
  static const std::array<std::vector<int>, kClDim> w = {{
      {},
      {0},
      {1},
      {2},
      {0, 1},
      {0, 2},
      {1, 2},
      {0, 1, 2},
  }};
  return w[static_cast<int>(b)];
}

class ClElem {
 public:
  ClElem() = default;
  static ClElem zero() { return {}; }
  static ClElem basis(ClcBasis b, Scalar s = Scalar::one()) {
    ClElem x;
    x.c_[static_cast<int>(b)] = std::move(s);
    return x;
  }
  static ClElem one() { return basis(ClcBasis::One); }
  static ClElem e() { return basis(ClcBasis::E); }
  static ClElem f() { return basis(ClcBasis::F); }
  static ClElem h() { return basis(ClcBasis::H); }

  const std::array<Scalar, kClDim>& coeffs() const { return c_; }
  Scalar& coeff(ClcBasis b) { return c_[static_cast<int>(b)]; }
  const Scalar& coeff(ClcBasis b) const { return c_[static_cast<int>(b)]; }
  bool is_zero() const {
    for (auto& s : c_)
      if (!s.is_zero()) return false;
    return true;
  }
  friend bool operator==(const ClElem& a, const ClElem& b) { return a.c_ == b.c_; }
  friend ClElem operator+(ClElem a, const ClElem& b) {
    for (int i = 0; i < kClDim; ++i) a.c_[i] += b.c_[i];
    return a;
  }
  friend ClElem operator-(ClElem a, const ClElem& b) {
    for (int i = 0; i < kClDim; ++i) a.c_[i] -= b.c_[i];
    return a;
  }
  ClElem operator-() const { return scaled(-Scalar::one()); }
  ClElem& operator+=(const ClElem& o) { return *this = *this + o; }
  ClElem scaled(const Scalar& s) const {
    ClElem r;
    for (int i = 0; i < kClDim; ++i)
      if (!c_[i].is_zero()) r.c_[i] = c_[i] * s;
    return r;
  }

  std::string str() const;

 private:
  std::array<Scalar, kClDim> c_;
};

namespace clc_detail {

inline ClElem straighten(const std::vector<int>& word, const Scalar& coeff) {
  if (coeff.is_zero()) return ClElem::zero();
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    int a = word[i], b = word[i + 1];
    if (a < b) continue;
    auto rest = [&](std::vector<int> mid) {
      std::vector<int> w(word.begin(), word.begin() + i);
      w.insert(w.end(), mid.begin(), mid.end());
      w.insert(w.end(), word.begin() + i + 2, word.end());
      return w;
    };
    if (a == 0 && b == 0) return ClElem::zero();  // e e = 0
    if (a == 2 && b == 2) return ClElem::zero();  // f f = 0
    if (a == 1 && b == 1)                         // h h = 2
      return straighten(rest({}), coeff * Scalar::integer(2));
    if (a == 1 && b == 0)                         // h e = -e h
      return straighten(rest({0, 1}), -coeff);
    if (a == 2 && b == 1)                         // f h = -h f
      return straighten(rest({1, 2}), -coeff);
    // f e = -e f + 2
    return straighten(rest({0, 2}), -coeff) +
           straighten(rest({}), coeff * Scalar::integer(2));
  }
  static constexpr ClcBasis lut[2][2][2] = {
      {{ClcBasis::One, ClcBasis::F}, {ClcBasis::H, ClcBasis::HF}},
      {{ClcBasis::E, ClcBasis::EF}, {ClcBasis::EH, ClcBasis::EHF}}};
  bool h0 = false, h1 = false, h2 = false;
  for (int l : word) (l == 0 ? h0 : l == 1 ? h1 : h2) = true;
  return ClElem::basis(lut[h0][h1][h2], coeff);
}

inline const std::array<std::array<ClElem, kClDim>, kClDim>& table() {
  static const auto tab = [] {
    std::array<std::array<ClElem, kClDim>, kClDim> t;
    for (int i = 0; i < kClDim; ++i)
      for (int j = 0; j < kClDim; ++j) {
        std::vector<int> w = clc_letters(static_cast<ClcBasis>(i));
        const auto& wj = clc_letters(static_cast<ClcBasis>(j));
        w.insert(w.end(), wj.begin(), wj.end());
        t[i][j] = straighten(w, Scalar::one());
      }
    return t;
  }();
  return tab;
}

}  // namespace clc_detail

inline ClElem cl_mul(const ClElem& x, const ClElem& y) {
  ClElem out;
  const auto& tab = clc_detail::table();
  for (int i = 0; i < kClDim; ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    for (int j = 0; j < kClDim; ++j) {
      if (y.coeffs()[j].is_zero()) continue;
      out += tab[i][j].scaled(x.coeffs()[i] * y.coeffs()[j]);
    }
  }
  return out;
}

// --- the isomorphism phi and the maps alpha, alpha0 ----------------------

namespace clq_detail {

inline ClElem phi_letter(int letter) {
  Scalar t = Scalar::t(), r2 = Scalar::r2();
  switch (letter) {
    case 0:  // phi(v2) = t e
      return ClElem::e().scaled(t);
    case 1: {
      // phi(v0) = (r2/2) t h (1 - (q^2-1)/(2 q^2) e f)
      Scalar k = (Scalar::q(2) - Scalar::one()) / (Scalar::integer(2) * Scalar::q(2));
      ClElem inner = ClElem::one() - ClElem::basis(ClcBasis::EF, k);
      return cl_mul(ClElem::h(), inner).scaled(r2 * t / Scalar::integer(2));
    }
    default:  // phi(vm2) = t/(2q) f
      return ClElem::f().scaled(t / (Scalar::integer(2) * Scalar::q(1)));
  }
}

inline ClqElem phi_inv_letter(int letter) {
  Scalar t = Scalar::t(), r2 = Scalar::r2();
  switch (letter) {
    case 0:  // phi^-1(e) = (1/t) v2
      return ClqElem::v2().scaled(Scalar::one() / t);
    case 1: {
      // phi^-1(h) = (r2/t) v0 - r2 (q^2-1)/(c t (q^2+1)) v2 v0 vm2
      Scalar k = r2 * (Scalar::q(2) - Scalar::one()) /
                 (Scalar::c() * t * (Scalar::q(2) + Scalar::one()));
      return ClqElem::v0().scaled(r2 / t) -
             ClqElem::basis(ClBasis::V2V0Vm2, k);
    }
    default:  // phi^-1(f) = (2q/t) vm2
      return ClqElem::vm2().scaled(Scalar::integer(2) * Scalar::q(1) / t);
  }
}

}  // namespace clq_detail

inline ClElem phi(const ClqElem& x) {
  ClElem out;
  for (int i = 0; i < kClDim; ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    ClElem acc = ClElem::one();
    for (int letter : cl_letters(static_cast<ClBasis>(i)))
      acc = cl_mul(acc, clq_detail::phi_letter(letter));
    out += acc.scaled(x.coeffs()[i]);
  }
  return out;
}

inline ClqElem phi_inv(const ClElem& x) {
  ClqElem out;
  for (int i = 0; i < kClDim; ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    ClqElem acc = ClqElem::one();
    for (int letter : clc_letters(static_cast<ClcBasis>(i)))
      acc = clq_mul(acc, clq_detail::phi_inv_letter(letter));
    out += acc.scaled(x.coeffs()[i]);
  }
  return out;
}

// alpha: U_q(sl2) -> Cl_q(sl2), multiplicative on the PBW factorization.
namespace clq_detail {

inline ClqElem alpha_E() {
  Scalar k = -Scalar::q(1) / ((Scalar::one() + Scalar::q(2)) * Scalar::c());
  return ClqElem::basis(ClBasis::V2V0, k);
}
inline ClqElem alpha_F() {
  Scalar k = -Scalar::q(2) / ((Scalar::one() + Scalar::q(2)) * Scalar::c());
  return ClqElem::basis(ClBasis::V0Vm2, k);
}
inline ClqElem alpha_K(int sign) {
  Scalar k = (Scalar::q(3) - Scalar::q(1)) / ((Scalar::one() + Scalar::q(2)) * Scalar::c());
  if (sign > 0)
    return ClqElem::basis(ClBasis::V2Vm2, k) + ClqElem::one().scaled(Scalar::q(-1));
  return ClqElem::basis(ClBasis::V2Vm2, -k) + ClqElem::one().scaled(Scalar::q(1));
}

}  // namespace clq_detail

inline ClqElem alpha(const UqElem& x) {
  ClqElem out;
  for (auto& [m, s] : x.terms()) {
    ClqElem acc = ClqElem::one();
    for (int i = 0; i < m.f; ++i) acc = clq_mul(acc, clq_detail::alpha_F());
    for (int i = 0; i < std::abs(m.k); ++i)
      acc = clq_mul(acc, clq_detail::alpha_K(m.k > 0 ? 1 : -1));
    for (int i = 0; i < m.e; ++i) acc = clq_mul(acc, clq_detail::alpha_E());
    out += acc.scaled(s);
  }
  return out;
}

inline ClElem alpha0(const UqElem& x) { return phi(alpha(x)); }

// --- printing -------------------------------------------------------------

inline std::string ClqElem::str() const {
  static const char* names[kClDim] = {"1",      "v2",       "v0",       "vm2",
                                      "v2*vm2", "v2*v0", "v0*vm2", "v2*v0*vm2"};
  std::string out;
  for (int i = 0; i < kClDim; ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].str() + ")";
    if (i != 0) out += std::string("*") + names[i];
  }
  return out.empty() ? "0" : out;
}

inline std::string ClElem::str() const {
  static const char* names[kClDim] = {"1",   "e",   "h",   "f",
                                      "e*h", "e*f", "h*f", "e*h*f"};
  std::string out;
  for (int i = 0; i < kClDim; ++i) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].str() + ")";
    if (i != 0) out += std::string("*") + names[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace qweil
