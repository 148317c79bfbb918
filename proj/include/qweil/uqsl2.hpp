// U_q(sl2) with PBW basis F^a K^b E^e.  Straightening uses the exchange
// relations
//   E F = F E + (K - K^-1)/(q - q^-1),   E K = q^-2 K E,   F K = q^2 K F,
// extended to powers recursively.  Coproduct, antipode, counit and the left
// adjoint action ad_a b = sum a_(1) b S(a_(2)) are algebra-map extensions of
// the generator formulas.

#pragma once

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "qweil/scalar.hpp"

namespace qweil {

enum class UqGen { E, F, K, Ki };

struct UqMonomial {
  int f = 0;  // power of F
  int k = 0;  // power of K (any sign)
  int e = 0;  // power of E

  friend bool operator==(const UqMonomial&, const UqMonomial&) = default;
  friend auto operator<=>(const UqMonomial& a, const UqMonomial& b) {
    return std::tie(a.f, a.k, a.e) <=> std::tie(b.f, b.k, b.e);
  }
  bool is_unit() const { return f == 0 && k == 0 && e == 0; }
  int ad_weight() const { return 2 * (e - f); }
  int degree() const { return f + e; }
};

class UqElem {
 public:
  using Terms = std::map<UqMonomial, Scalar>;

  UqElem() = default;
  static UqElem zero() { return {}; }
  static UqElem one() { return monomial({0, 0, 0}); }
  static UqElem monomial(UqMonomial m, Scalar s = Scalar::one()) {
    UqElem x;
    x.add_term(m, s);
    return x;
  }
  static UqElem E() { return monomial({0, 0, 1}); }
  static UqElem F() { return monomial({1, 0, 0}); }
  static UqElem K(int b = 1) { return monomial({0, b, 0}); }
  static UqElem Ki() { return K(-1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const UqElem& a, const UqElem& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(const UqMonomial& m, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  UqElem& operator+=(const UqElem& o) {
    for (auto& [m, s] : o.terms_) add_term(m, s);
    return *this;
  }
  UqElem& operator-=(const UqElem& o) {
    for (auto& [m, s] : o.terms_) add_term(m, -s);
    return *this;
  }
  friend UqElem operator+(UqElem a, const UqElem& b) { return a += b; }
  friend UqElem operator-(UqElem a, const UqElem& b) { return a -= b; }
  UqElem operator-() const { return scaled(-Scalar::one()); }
  UqElem scaled(const Scalar& s) const {
    UqElem r;
    if (s.is_zero()) return r;
    for (auto& [m, co] : terms_) r.terms_[m] = co * s;
    return r;
  }

  Scalar counit() const {
    Scalar s;
    for (auto& [m, co] : terms_)
      if (m.f == 0 && m.e == 0) s += co;
    return s;
  }

  std::string str() const;

 private:
  Terms terms_;
};

// --- straightening -----------------------------------------------------

namespace uq_detail {

inline Scalar q_shift() { return Scalar::q(1) - Scalar::q(-1); }  // q - q^-1

// E * (F^a K^b E^e), one left multiplication by E.
inline UqElem left_mul_E(const UqElem& x);

// E F^a in PBW form.
inline UqElem e_times_fpow_compute(int a) {
  if (a == 0) return UqElem::E();
  // E F^a = F (E F^{a-1}) + (1/(q-q^-1)) (q^{-2(a-1)} F^{a-1} K - q^{2(a-1)} F^{a-1} K^-1)
  UqElem rec = e_times_fpow_compute(a - 1);
  UqElem out;
  for (auto& [m, s] : rec.terms()) out.add_term({m.f + 1, m.k, m.e}, s);
  Scalar inv = Scalar::one() / q_shift();
  out.add_term({a - 1, 1, 0}, Scalar::q(-2 * (a - 1)) * inv);
  out.add_term({a - 1, -1, 0}, -Scalar::q(2 * (a - 1)) * inv);
  return out;
}

inline const UqElem& e_times_fpow(int a) {
  thread_local std::vector<UqElem> cache;
  while (static_cast<int>(cache.size()) <= a)
    cache.push_back(e_times_fpow_compute(static_cast<int>(cache.size())));
  return cache[a];
}

inline UqElem left_mul_E(const UqElem& x) {
  UqElem out;
  for (auto& [m, s] : x.terms()) {
    // E F^f K^k E^e = (E F^f) K^k E^e, then E^{e'} K^k = q^{-2 e' k} K^k E^{e'}
    const UqElem& ef = e_times_fpow(m.f);
    for (auto& [mm, ss] : ef.terms()) {
      Scalar coeff = s * ss * Scalar::q(-2 * mm.e * m.k);
      out.add_term({mm.f, mm.k + m.k, mm.e + m.e}, coeff);
    }
  }
  return out;
}

// E^e F^a in PBW form, memoized per thread.
inline const UqElem& epow_times_fpow(int e, int a) {
  thread_local std::map<std::pair<int, int>, UqElem> cache;
  auto it = cache.find({e, a});
  if (it != cache.end()) return it->second;
  UqElem val;
  if (e == 0) val = UqElem::monomial({a, 0, 0});
  else val = left_mul_E(epow_times_fpow(e - 1, a));
  return cache.emplace(std::pair{e, a}, std::move(val)).first->second;
}

inline UqElem monomial_product(const UqMonomial& a, const UqMonomial& b) {
  // F^{a.f} K^{a.k} (E^{a.e} F^{b.f}) K^{b.k} E^{b.e}
  const UqElem& mid = epow_times_fpow(a.e, b.f);
  UqElem out;
  for (auto& [m, s] : mid.terms()) {
    // K^{a.k} F^{m.f} = q^{-2 a.k m.f} F^{m.f} K^{a.k};  E^{m.e} K^{b.k} = q^{-2 m.e b.k} ...
    Scalar coeff = s * Scalar::q(-2 * (a.k * m.f + m.e * b.k));
    out.add_term({a.f + m.f, a.k + m.k + b.k, m.e + b.e}, coeff);
  }
  return out;
}

}  // namespace uq_detail

inline UqElem uq_mul(const UqElem& x, const UqElem& y) {
  UqElem out;
  for (auto& [mx, sx] : x.terms())
    for (auto& [my, sy] : y.terms()) {
      UqElem prod = uq_detail::monomial_product(mx, my);
      Scalar s = sx * sy;
      for (auto& [m, co] : prod.terms()) out.add_term(m, co * s);
    }
  return out;
}

inline UqElem uq_pow(const UqElem& x, int n) {
  UqElem r = UqElem::one();
  for (int i = 0; i < n; ++i) r = uq_mul(r, x);
  return r;
}

inline UqElem uq_generator(UqGen g) {
  switch (g) {
    case UqGen::E: return UqElem::E();
    case UqGen::F: return UqElem::F();
    case UqGen::K: return UqElem::K();
    case UqGen::Ki: return UqElem::Ki();
  }
  throw std::logic_error("bad generator");
}

// PBW normal form of a generator word with a scalar prefactor.
inline UqElem uq_normal_form(const Scalar& coeff, const std::vector<UqGen>& word) {
  UqElem r = UqElem::one().scaled(coeff);
  for (UqGen g : word) r = uq_mul(r, uq_generator(g));
  return r;
}

// --- Hopf structure ----------------------------------------------------

class UqTensor {
 public:
  using Key = std::pair<UqMonomial, UqMonomial>;
  using Terms = std::map<Key, Scalar>;

  static UqTensor one() {
    UqTensor t;
    t.add_term({{}, {}}, Scalar::one());
    return t;
  }
  static UqTensor of(const UqElem& a, const UqElem& b) {
    UqTensor t;
    for (auto& [ma, sa] : a.terms())
      for (auto& [mb, sb] : b.terms()) t.add_term({ma, mb}, sa * sb);
    return t;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const UqTensor& a, const UqTensor& b) {
    return a.terms_ == b.terms_;
  }

  void add_term(const Key& k, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  UqTensor& operator+=(const UqTensor& o) {
    for (auto& [k, s] : o.terms_) add_term(k, s);
    return *this;
  }
  friend UqTensor operator+(UqTensor a, const UqTensor& b) { return a += b; }
  friend UqTensor operator-(UqTensor a, const UqTensor& b) {
    for (auto& [k, s] : b.terms_) a.add_term(k, -s);
    return a;
  }

  friend UqTensor tensor_mul(const UqTensor& x, const UqTensor& y) {
    UqTensor out;
    for (auto& [kx, sx] : x.terms_)
      for (auto& [ky, sy] : y.terms_) {
        UqElem left = uq_detail::monomial_product(kx.first, ky.first);
        UqElem right = uq_detail::monomial_product(kx.second, ky.second);
        Scalar s = sx * sy;
        for (auto& [ml, sl] : left.terms())
          for (auto& [mr, sr] : right.terms())
            out.add_term({ml, mr}, s * sl * sr);
      }
    return out;
  }

 private:
  Terms terms_;
};

namespace uq_detail {

inline const UqTensor& coproduct_monomial(const UqMonomial& mono) {
  thread_local std::map<UqMonomial, UqTensor> cache;
  auto it = cache.find(mono);
  if (it != cache.end()) return it->second;
  static const auto dE = [] {
    UqTensor t;
    t.add_term({{0, 0, 1}, {0, 1, 0}}, Scalar::one());  // E (x) K
    t.add_term({{}, {0, 0, 1}}, Scalar::one());         // 1 (x) E
    return t;
  }();
  static const auto dF = [] {
    UqTensor t;
    t.add_term({{1, 0, 0}, {}}, Scalar::one());          // F (x) 1
    t.add_term({{0, -1, 0}, {1, 0, 0}}, Scalar::one());  // K^-1 (x) F
    return t;
  }();
  // Delta(F^f K^k E^e) = (Delta F)^f (Delta K)^k (Delta E)^e
  UqTensor acc;
  if (mono.is_unit()) {
    acc = UqTensor::one();
  } else if (mono.e > 0) {
    UqMonomial prev = mono;
    prev.e--;
    acc = tensor_mul(coproduct_monomial(prev), dE);
  } else if (mono.f > 0) {
    UqMonomial prev = mono;
    prev.f--;
    acc = tensor_mul(dF, coproduct_monomial(prev));
  } else {
    acc = UqTensor::of(UqElem::K(mono.k), UqElem::K(mono.k));
  }
  return cache.emplace(mono, std::move(acc)).first->second;
}

}  // namespace uq_detail

inline UqTensor coproduct(const UqElem& x) {
  UqTensor out;
  for (auto& [m, s] : x.terms()) {
    const UqTensor& acc = uq_detail::coproduct_monomial(m);
    for (auto& [k, sk] : acc.terms()) out.add_term(k, s * sk);
  }
  return out;
}

namespace uq_detail {

inline const UqElem& antipode_monomial(const UqMonomial& mono) {
  thread_local std::map<UqMonomial, UqElem> cache;
  auto it = cache.find(mono);
  if (it != cache.end()) return it->second;
  // S(E) = -E K^-1, S(F) = -K F, S(K^b) = K^-b; antihomomorphism.
  static const UqElem sE = uq_mul(UqElem::E(), UqElem::Ki()).scaled(-Scalar::one());
  static const UqElem sF = uq_mul(UqElem::K(), UqElem::F()).scaled(-Scalar::one());
  // S(F^f K^k E^e) = S(E)^e S(K^k) S(F)^f, reversing the factors
  UqElem acc;
  if (mono.is_unit()) {
    acc = UqElem::one();
  } else if (mono.e > 0) {
    UqMonomial prev = mono;
    prev.e--;
    acc = uq_mul(sE, antipode_monomial(prev));
  } else if (mono.f > 0) {
    UqMonomial prev = mono;
    prev.f--;
    acc = uq_mul(antipode_monomial(prev), sF);
  } else {
    acc = UqElem::K(-mono.k);
  }
  return cache.emplace(mono, std::move(acc)).first->second;
}

}  // namespace uq_detail

inline UqElem antipode(const UqElem& x) {
  UqElem out;
  for (auto& [m, s] : x.terms())
    out += uq_detail::antipode_monomial(m).scaled(s);
  return out;
}

inline Scalar counit(const UqElem& x) { return x.counit(); }

// left adjoint action
inline UqElem uq_ad(const UqElem& x, const UqElem& y) {
  UqTensor dx = coproduct(x);
  UqElem out;
  for (auto& [k, s] : dx.terms()) {
    UqElem term = uq_mul(uq_mul(UqElem::monomial(k.first), y),
                         antipode(UqElem::monomial(k.second)));
    out += term.scaled(s);
  }
  return out;
}

// right adjoint action b -> sum S(a_(1)) b a_(2)
inline UqElem uq_ad_right(const UqElem& x, const UqElem& y) {
  UqTensor dx = coproduct(x);
  UqElem out;
  for (auto& [k, s] : dx.terms()) {
    UqElem term = uq_mul(uq_mul(antipode(UqElem::monomial(k.first)), y),
                         UqElem::monomial(k.second));
    out += term.scaled(s);
  }
  return out;
}

// fast paths for the generators (same formulas, fewer allocations)
inline UqElem uq_ad_E(const UqElem& y) {
  return uq_mul(uq_mul(UqElem::E(), y), UqElem::Ki()) -
         uq_mul(uq_mul(y, UqElem::E()), UqElem::Ki());
}
inline UqElem uq_ad_F(const UqElem& y) {
  return uq_mul(UqElem::F(), y) -
         uq_mul(uq_mul(uq_mul(UqElem::Ki(), y), UqElem::K()), UqElem::F());
}
inline UqElem uq_ad_K(const UqElem& y, int b = 1) {
  return uq_mul(uq_mul(UqElem::K(b), y), UqElem::K(-b));
}

// --- distinguished elements ---------------------------------------------

inline UqElem uq_X() { return UqElem::E(); }
// Z = v_0 = q^-2 E F - F E
inline UqElem uq_Z() {
  return uq_mul(UqElem::E(), UqElem::F()).scaled(Scalar::q(-2)) -
         uq_mul(UqElem::F(), UqElem::E());
}
inline UqElem uq_Y() { return uq_mul(UqElem::K(), UqElem::F()); }
inline UqElem uq_W() { return UqElem::Ki(); }

// C = E F + (q^-1 K + q K^-1)/(q - q^-1)^2
inline UqElem casimir() {
  Scalar d = (Scalar::q(1) - Scalar::q(-1)).pow(2);
  return uq_mul(UqElem::E(), UqElem::F()) +
         UqElem::K().scaled(Scalar::q(-1) / d) + UqElem::Ki().scaled(Scalar::q(1) / d);
}

// C = q/(q^2-1)^2 (q^2 K + K^-1) + F E
inline UqElem casimir_alt() {
  Scalar d = (Scalar::q(2) - Scalar::one()).pow(2);
  return UqElem::K().scaled(Scalar::q(3) / d) + UqElem::Ki().scaled(Scalar::q(1) / d) +
         UqElem::monomial({1, 0, 1});
}

// C_q = 2C - 2q(q^2+1)/(q^2-1)^2, the recentering with a finite q->1 limit.
inline UqElem casimir_recentered() {
  Scalar shift = Scalar::integer(2) * Scalar::q(1) * (Scalar::q(2) + Scalar::one()) /
                 (Scalar::q(2) - Scalar::one()).pow(2);
  return casimir().scaled(Scalar::integer(2)) - UqElem::one().scaled(shift);
}

// C_V = X Y + q/(1+q^2) Z^2 + q^-2 Y X
inline UqElem uq_CV() {
  UqElem Z = uq_Z();
  return uq_mul(uq_X(), uq_Y()) +
         uq_mul(Z, Z).scaled(Scalar::q(1) / (Scalar::one() + Scalar::q(2))) +
         uq_mul(uq_Y(), uq_X()).scaled(Scalar::q(-2));
}

inline UqElem uq_commutator(const UqElem& a, const UqElem& b) {
  return uq_mul(a, b) - uq_mul(b, a);
}

inline bool is_central(const UqElem& x) {
  return uq_commutator(x, UqElem::E()).is_zero() &&
         uq_commutator(x, UqElem::F()).is_zero() &&
         uq_commutator(x, UqElem::K()).is_zero();
}

// --- triple tensors, for the coassociativity check ----------------------

using UqTensor3 = std::map<std::array<UqMonomial, 3>, Scalar>;

inline void add3(UqTensor3& t, const std::array<UqMonomial, 3>& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = t.emplace(k, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
  }
}

inline UqTensor3 coproduct_leg(const UqTensor& t, int leg) {
  UqTensor3 out;
  for (auto& [k, s] : t.terms()) {
    UqTensor d = coproduct(UqElem::monomial(leg == 0 ? k.first : k.second));
    for (auto& [dk, ds] : d.terms()) {
      std::array<UqMonomial, 3> key = leg == 0
          ? std::array<UqMonomial, 3>{dk.first, dk.second, k.second}
          : std::array<UqMonomial, 3>{k.first, dk.first, dk.second};
      add3(out, key, s * ds);
    }
  }
  return out;
}

inline std::string UqElem::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [m, s] : terms_) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> factors;
    factors.push_back("(" + s.str() + ")");
    auto power = [&](const char* g, int e) {
      if (e == 1)
        factors.push_back(g);
      else if (e != 0)
        factors.push_back(std::string(g) + "^" + std::to_string(e));
    };
    power("F", m.f);
    power("K", m.k);
    power("E", m.e);
    std::string term;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) term += "*";
      term += factors[i];
    }
    out += term;
  }
  return out;
}

}  // namespace qweil
