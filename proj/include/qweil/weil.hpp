// The braided Weil algebra W_q(sl2) = U_q(sl2) (x)_R Cl_q(sl2) with the
// product (x (x) v)(y (x) w) = sum x y_i (x) v_i w, where sigma_R(v (x) y)
// = sum y_i (x) v_i, together with the cubic Dirac element D_q, its square,
// invariance, the unbraiding maps chi/zeta, the star structures of the
// three real forms, and the q->1 limit identities.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweil/braiding.hpp"

namespace qweil {

class WqElem {
 public:
  WqElem() = default;
  static WqElem zero() { return {}; }
  static WqElem one() { return of_term({0, 0, 0}, ClBasis::One, Scalar::one()); }
  static WqElem of_term(const UqMonomial& m, ClBasis b, const Scalar& s) {
    WqElem w;
    add_term(w.terms_, m, b, s);
    return w;
  }
  static WqElem of(const UqElem& u, const ClqElem& v) {
    WqElem w;
    for (auto& [m, su] : u.terms())
      for (int b = 0; b < kClDim; ++b)
        if (!v.coeffs()[b].is_zero())
          add_term(w.terms_, m, static_cast<ClBasis>(b), su * v.coeffs()[b]);
    return w;
  }
  static WqElem from_uq(const UqElem& u) { return of(u, ClqElem::one()); }
  static WqElem from_clq(const ClqElem& v) { return of(UqElem::one(), v); }
  static WqElem from_terms(UqClTerms t) {
    WqElem w;
    w.terms_ = std::move(t);
    return w;
  }

  const UqClTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const WqElem& a, const WqElem& b) {
    return a.terms_ == b.terms_;
  }

  WqElem& operator+=(const WqElem& o) {
    for (auto& [k, s] : o.terms_) add_term(terms_, k.first, k.second, s);
    return *this;
  }
  WqElem& operator-=(const WqElem& o) {
    for (auto& [k, s] : o.terms_) add_term(terms_, k.first, k.second, -s);
    return *this;
  }
  friend WqElem operator+(WqElem a, const WqElem& b) { return a += b; }
  friend WqElem operator-(WqElem a, const WqElem& b) { return a -= b; }
  WqElem operator-() const { return scaled(-Scalar::one()); }
  WqElem scaled(const Scalar& s) const {
    WqElem w;
    if (s.is_zero()) return w;
    for (auto& [k, t] : terms_) w.terms_[k] = t * s;
    return w;
  }

  std::string str() const;

 private:
  UqClTerms terms_;
};

// --- multiplication --------------------------------------------------------

namespace weil_detail {

template <class Braider>
WqElem mul_with(const WqElem& x, const WqElem& y, Braider&& braid) {
  WqElem out;
  UqClTerms acc;
  for (auto& [kx, sx] : x.terms()) {
    for (auto& [ky, sy] : y.terms()) {
      // braid the inner Clifford factor past the U_q monomial of y
      UqClTerms braided = braid(ClqElem::basis(kx.second), UqElem::monomial(ky.first));
      Scalar pref = sx * sy;
      for (auto& [kb, sb] : braided) {
        UqElem uq = uq_detail::monomial_product(kx.first, kb.first);
        const ClqElem& cl = clq_detail::table()[static_cast<int>(kb.second)]
                                               [static_cast<int>(ky.second)];
        Scalar p2 = pref * sb;
        for (auto& [mu, su] : uq.terms())
          for (int b = 0; b < kClDim; ++b)
            if (!cl.coeffs()[b].is_zero())
              add_term(acc, mu, static_cast<ClBasis>(b), p2 * su * cl.coeffs()[b]);
      }
    }
  }
  return WqElem::from_terms(std::move(acc));
}

}  // namespace weil_detail

inline WqElem wq_mul(const WqElem& x, const WqElem& y) {
  return weil_detail::mul_with(x, y, [](const ClqElem& v, const UqElem& u) {
    return sigma_R_cl_uq(v, u);
  });
}

// product of W_q^+: braiding by the inverse opposite R-matrix
inline WqElem wq_mul_plus(const WqElem& x, const WqElem& y) {
  return weil_detail::mul_with(x, y, [](const ClqElem& v, const UqElem& u) {
    return r21_inv_op_cl_uq(v, u);
  });
}

// --- the cubic Dirac elements ----------------------------------------------

inline Scalar dirac_cubic_coeff() {
  // (q^2-1)^2 / (2q(q^2+1)c^2)
  return (Scalar::q(2) - Scalar::one()).pow(2) /
         (Scalar::integer(2) * Scalar::q(1) * (Scalar::q(2) + Scalar::one()) *
          Scalar::c(2));
}

inline WqElem dirac_quadratic_part() {
  Scalar invc = Scalar::one() / Scalar::c();
  return WqElem::of(uq_X(), ClqElem::vm2()).scaled(invc) +
         WqElem::of(uq_Z(), ClqElem::v0())
             .scaled(Scalar::q(1) / ((Scalar::one() + Scalar::q(2)) * Scalar::c())) +
         WqElem::of(uq_Y(), ClqElem::v2()).scaled(Scalar::q(-2) * invc);
}

inline WqElem dirac() {
  return dirac_quadratic_part() -
         WqElem::of(casimir(), gamma()).scaled(dirac_cubic_coeff());
}

inline WqElem dirac_plus() {
  return dirac_quadratic_part().scaled(Scalar::q(4)) -
         WqElem::of(casimir(), gamma()).scaled(dirac_cubic_coeff());
}

// right side of the Dirac-square identity
inline WqElem dirac_squared_rhs() {
  Scalar a = (Scalar::q(2) + Scalar::one()) * (Scalar::q(2) - Scalar::one()).pow(2) /
             (Scalar::integer(4) * Scalar::q(3) * Scalar::c());
  Scalar b = Scalar::q(1) * (Scalar::q(2) + Scalar::one()) /
             ((Scalar::q(2) - Scalar::one()).pow(2) * Scalar::c());
  UqElem C = casimir();
  return WqElem::from_uq(uq_mul(C, C)).scaled(a) - WqElem::one().scaled(b);
}

inline WqElem wq_commutator(const WqElem& a, const WqElem& b) {
  return wq_mul(a, b) - wq_mul(b, a);
}

inline std::vector<WqElem> wq_generators() {
  return {WqElem::from_uq(UqElem::E()),   WqElem::from_uq(UqElem::F()),
          WqElem::from_uq(UqElem::K()),   WqElem::from_clq(ClqElem::v2()),
          WqElem::from_clq(ClqElem::v0()), WqElem::from_clq(ClqElem::vm2())};
}

inline bool dirac_squared_check() {
  WqElem D = dirac();
  WqElem D2 = wq_mul(D, D);
  WqElem rhs = dirac_squared_rhs();
  if (!(D2 == rhs)) return false;
  for (const WqElem& g : wq_generators())
    if (!wq_commutator(D2, g).is_zero()) return false;
  // the companion element squares to the same value in the plus product
  WqElem Dp = dirac_plus();
  if (!(wq_mul_plus(Dp, Dp) == rhs)) return false;
  // expansion in the recentered Casimir
  UqElem Cq = casimir_recentered();
  Scalar A = (Scalar::one() + Scalar::q(2)) * (Scalar::q(2) - Scalar::one()).pow(2) /
             (Scalar::integer(16) * Scalar::q(3) * Scalar::c());
  Scalar B = (Scalar::q(2) + Scalar::one()).pow(2) /
             (Scalar::integer(4) * Scalar::q(2) * Scalar::c());
  Scalar G = (Scalar::q(2) + Scalar::one()) /
             (Scalar::integer(4) * Scalar::q(1) * Scalar::c());
  WqElem cq_form = WqElem::from_uq(uq_mul(Cq, Cq)).scaled(A) +
                   WqElem::from_uq(Cq).scaled(B) + WqElem::one().scaled(G);
  return D2 == cq_form;
}

// --- U_q action and invariance ----------------------------------------------

// diagonal action through the coproduct: x . (u (x) v) =
// sum ad_{x_(1)}(u) (x) (x_(2) . v)
inline WqElem uq_action_wq(const UqElem& x, const WqElem& w) {
  UqTensor dx = coproduct(x);
  WqElem out;
  for (auto& [legs, s] : dx.terms()) {
    UqElem leg1 = UqElem::monomial(legs.first);
    UqElem leg2 = UqElem::monomial(legs.second);
    for (auto& [k, sw] : w.terms()) {
      UqElem adu = uq_ad(leg1, UqElem::monomial(k.first));
      ClqElem actv = uq_action_clq(leg2, ClqElem::basis(k.second));
      if (adu.is_zero() || actv.is_zero()) continue;
      out += WqElem::of(adu, actv).scaled(s * sw);
    }
  }
  return out;
}

inline bool dirac_invariance_check() {
  WqElem D = dirac();
  for (const UqElem& x : {UqElem::E(), UqElem::F(), UqElem::K(), UqElem::Ki()}) {
    if (!(uq_action_wq(x, D) == D.scaled(counit(x)))) return false;
  }
  return true;
}

// --- unbraiding --------------------------------------------------------------

namespace weil_detail {

inline WqElem chi_minus_letter(int letter) {
  switch (letter) {
    case 0:  // chi(v2) = K^-1 (x) v2
      return WqElem::of_term({0, -1, 0}, ClBasis::V2, Scalar::one());
    case 1: {
      // chi(v0) = 1 (x) v0 + (q^2+1)(q^2-1)/q^4 F (x) v2
      Scalar k = (Scalar::q(2) + Scalar::one()) * (Scalar::q(2) - Scalar::one()) *
                 Scalar::q(-4);
      return WqElem::of_term({0, 0, 0}, ClBasis::V0, Scalar::one()) +
             WqElem::of_term({1, 0, 0}, ClBasis::V2, k);
    }
    default: {
      // chi(vm2) = K (x) vm2 + (1-q^2)/q^3 FK (x) v0 - (q^2-1)^2/q^7 F^2K (x) v2
      Scalar k1 = (Scalar::one() - Scalar::q(2)) * Scalar::q(-3);
      Scalar k2 = (Scalar::q(2) - Scalar::one()).pow(2) * Scalar::q(-7);
      return WqElem::of_term({0, 1, 0}, ClBasis::Vm2, Scalar::one()) +
             WqElem::of_term({1, 1, 0}, ClBasis::V0, k1) -
             WqElem::of_term({2, 1, 0}, ClBasis::V2, k2);
    }
  }
}

}  // namespace weil_detail

inline WqElem chi_minus(const ClqElem& v) {
  WqElem out;
  for (int i = 0; i < kClDim; ++i) {
    if (v.coeffs()[i].is_zero()) continue;
    WqElem acc = WqElem::one();
    for (int letter : cl_letters(static_cast<ClBasis>(i)))
      acc = wq_mul(acc, weil_detail::chi_minus_letter(letter));
    out += acc.scaled(v.coeffs()[i]);
  }
  return out;
}

inline WqElem zeta_minus(const ClElem& y) { return chi_minus(phi_inv(y)); }

// The unbraided form of D_q.  The middle coefficient has two candidate
// readings; the checker reports which one reproduces the braided Dirac
// element exactly (1 or 2), or 0 on failure.
inline int dirac_unbraided_reading() {
  Scalar t = Scalar::t(), r2 = Scalar::r2(), c = Scalar::c();
  WqElem zf = zeta_minus(ClElem::f());
  WqElem zh = zeta_minus(ClElem::h());
  WqElem ze = zeta_minus(ClElem::e());
  // gamma0 = -1/2 (e h f + h)
  ClElem gamma0 =
      (cl_mul(cl_mul(ClElem::e(), ClElem::h()), ClElem::f()) + ClElem::h())
          .scaled(-Scalar::one() / Scalar::integer(2));
  WqElem zg = zeta_minus(gamma0);

  UqElem ek = uq_mul(UqElem::E(), UqElem::Ki());
  UqElem kk = (UqElem::K() - UqElem::Ki())
                  .scaled(Scalar::q(1) / (Scalar::q(2) - Scalar::one()));
  UqElem ef = uq_mul(UqElem::E(), UqElem::F());
  WqElem D = dirac();
  for (int reading = 1; reading <= 2; ++reading) {
    Scalar kappa = reading == 1 ? Scalar::q(2) - Scalar::one()
                                : Scalar::one() + Scalar::q(2);
    UqElem mid = kk + ef.scaled(kappa);
    WqElem cand =
        (wq_mul(WqElem::from_uq(ek), zf).scaled(Scalar::one() / (Scalar::integer(2) * Scalar::q(1))) +
         wq_mul(WqElem::from_uq(mid), zh)
             .scaled(Scalar::one() / (Scalar::integer(2) * r2 * Scalar::q(1))) +
         wq_mul(WqElem::from_uq(UqElem::F()), ze) +
         wq_mul(WqElem::from_uq(UqElem::Ki()), zg).scaled(Scalar::one() / r2))
            .scaled(t / c);
    if (cand == D) return reading;
  }
  return 0;
}

inline bool dirac_unbraided_check() {
  // chi images of the Clifford relations vanish and commute with U_q (x) 1
  ClqElem cv2 = ClqElem::v2(), cv0 = ClqElem::v0(), cvm = ClqElem::vm2();
  WqElem x2 = chi_minus(cv2), x0 = chi_minus(cv0), xm = chi_minus(cvm);
  Scalar cpl = (Scalar::q(2) + Scalar::one()) * Scalar::q(-1) * Scalar::c();
  Scalar cmi = (Scalar::q(2) + Scalar::one()) * Scalar::q(-2) * Scalar::c();
  bool rel = wq_mul(x2, x2).is_zero() && wq_mul(xm, xm).is_zero() &&
             (wq_mul(x0, x2) + wq_mul(x2, x0).scaled(Scalar::q(-2))).is_zero() &&
             (wq_mul(xm, x0) + wq_mul(x0, xm).scaled(Scalar::q(-2))).is_zero() &&
             wq_mul(x0, x0) ==
                 wq_mul(x2, xm).scaled((Scalar::one() - Scalar::q(4)) * Scalar::q(-3)) +
                     WqElem::one().scaled(cpl) &&
             wq_mul(xm, x2) == -wq_mul(x2, xm) + WqElem::one().scaled(cmi);
  if (!rel) return false;
  for (const WqElem& ximg : {x2, x0, xm})
    for (const UqElem& g : {UqElem::E(), UqElem::F(), UqElem::K()})
      if (!wq_commutator(ximg, WqElem::from_uq(g)).is_zero()) return false;

  if (dirac_unbraided_reading() == 0) return false;

  // the four elements spanning V0 (+) V_2pi under the right adjoint action;
  // the middle coefficient q^2 - 1 is the one that closes the span
  std::vector<UqElem> span = {
      uq_mul(UqElem::E(), UqElem::Ki()),
      (UqElem::K() - UqElem::Ki()).scaled(Scalar::q(1) / (Scalar::q(2) - Scalar::one())) +
          uq_mul(UqElem::E(), UqElem::F()).scaled(Scalar::q(2) - Scalar::one()),
      UqElem::F(), UqElem::Ki()};
  // collect the PBW monomials that appear
  std::vector<UqMonomial> monos;
  auto note = [&](const UqElem& e) {
    for (auto& [m, s] : e.terms()) {
      bool seen = false;
      for (auto& mm : monos)
        if (mm == m) seen = true;
      if (!seen) monos.push_back(m);
    }
  };
  std::vector<UqElem> images;
  for (const UqElem& b : span) {
    note(b);
    for (const UqElem& a : {UqElem::E(), UqElem::F(), UqElem::K(), UqElem::Ki()})
      images.push_back(uq_ad_right(a, b));
  }
  for (const UqElem& e : images) note(e);
  auto coords = [&](const UqElem& e) {
    ScalarVec v(monos.size(), Scalar::zero());
    for (auto& [m, s] : e.terms())
      for (size_t i = 0; i < monos.size(); ++i)
        if (monos[i] == m) v[i] = s;
    return v;
  };
  ScalarMat span_rows;
  for (const UqElem& b : span) span_rows.push_back(coords(b));
  if (rank_of(span_rows) != 4) return false;
  for (const UqElem& e : images)
    if (!in_span(span_rows, coords(e))) return false;
  return true;
}

// --- star structures ----------------------------------------------------------

enum class RealForm { SL2R, SU2, SU11 };
enum class StarVariant { InvReal, MinusToPlus, PlusToMinus };

struct StarMap {
  RealForm form;
  StarVariant variant;

  StarMap(RealForm f, StarVariant v) : form(f), variant(v) {
    bool ok = (f == RealForm::SL2R) == (v == StarVariant::InvReal);
    if (!ok) throw std::domain_error("incompatible real form");
  }
  BarMode mode() const {
    return form == RealForm::SL2R ? BarMode::UNIT_CIRCLE : BarMode::REAL;
  }
};

namespace weil_detail {

inline UqElem star_uq_gen(RealForm form, UqGen g) {
  switch (form) {
    case RealForm::SL2R:
      switch (g) {
        case UqGen::E: return -UqElem::E();
        case UqGen::F: return -UqElem::F();
        case UqGen::K: return UqElem::K();
        case UqGen::Ki: return UqElem::Ki();
      }
      break;
    case RealForm::SU2:
      switch (g) {
        case UqGen::E: return uq_mul(UqElem::F(), UqElem::K());
        case UqGen::F: return uq_mul(UqElem::Ki(), UqElem::E());
        case UqGen::K: return UqElem::K();
        case UqGen::Ki: return UqElem::Ki();
      }
      break;
    case RealForm::SU11:
      switch (g) {
        case UqGen::E: return uq_mul(UqElem::F(), UqElem::K()).scaled(-Scalar::one());
        case UqGen::F: return uq_mul(UqElem::Ki(), UqElem::E()).scaled(-Scalar::one());
        case UqGen::K: return UqElem::K();
        case UqGen::Ki: return UqElem::Ki();
      }
      break;
  }
  throw std::logic_error("bad generator");
}

inline ClqElem star_clq_gen(RealForm form, int letter) {
  switch (form) {
    case RealForm::SL2R:
      // v2* = -v2, v0* = -q^2 v0, vm2* = -q^2 vm2
      switch (letter) {
        case 0: return ClqElem::v2().scaled(-Scalar::one());
        case 1: return ClqElem::v0().scaled(-Scalar::q(2));
        default: return ClqElem::vm2().scaled(-Scalar::q(2));
      }
    case RealForm::SU2:
      // v2* = q^2 vm2, v0* = v0, vm2* = q^-2 v2
      switch (letter) {
        case 0: return ClqElem::vm2().scaled(Scalar::q(2));
        case 1: return ClqElem::v0();
        default: return ClqElem::v2().scaled(Scalar::q(-2));
      }
    default:
      // v2* = -q^2 vm2, v0* = v0, vm2* = -q^-2 v2
      switch (letter) {
        case 0: return ClqElem::vm2().scaled(-Scalar::q(2));
        case 1: return ClqElem::v0();
        default: return ClqElem::v2().scaled(-Scalar::q(-2));
      }
  }
}

}  // namespace weil_detail

// antilinear antihomomorphism on the U_q factor
inline UqElem star_uq(const UqElem& x, const StarMap& map) {
  BarMode mode = map.mode();
  UqElem out;
  for (auto& [m, s] : x.terms()) {
    // (F^f K^k E^e)* = (E*)^e (K*)^k (F*)^f
    UqElem acc = UqElem::one();
    UqElem se = weil_detail::star_uq_gen(map.form, UqGen::E);
    UqElem sf = weil_detail::star_uq_gen(map.form, UqGen::F);
    for (int i = 0; i < m.e; ++i) acc = uq_mul(acc, se);
    if (m.k != 0) acc = uq_mul(acc, UqElem::K(m.k));
    for (int i = 0; i < m.f; ++i) acc = uq_mul(acc, sf);
    out += acc.scaled(s.bar(mode));
  }
  return out;
}

inline ClqElem star_clq(const ClqElem& x, const StarMap& map) {
  BarMode mode = map.mode();
  ClqElem out;
  for (int i = 0; i < kClDim; ++i) {
    if (x.coeffs()[i].is_zero()) continue;
    const auto& letters = cl_letters(static_cast<ClBasis>(i));
    ClqElem acc = ClqElem::one();
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      acc = clq_mul(acc, weil_detail::star_clq_gen(map.form, *it));
    out += acc.scaled(x.coeffs()[i].bar(mode));
  }
  return out;
}

// (a (x) b)* = tau . R (b* (x) a*) for the inverse-real case and for
// W+ -> W-; tau . R21^-1 (b* (x) a*) for W- -> W+.
inline WqElem star(const WqElem& w, const StarMap& map) {
  BarMode mode = map.mode();
  WqElem out;
  for (auto& [k, s] : w.terms()) {
    UqElem us = star_uq(UqElem::monomial(k.first), map);
    ClqElem vs = star_clq(ClqElem::basis(k.second), map);
    Scalar pref = s.bar(mode);
    for (auto& [mu, su] : us.terms()) {
      UqClTerms braided =
          map.variant == StarVariant::MinusToPlus
              ? r21_inv_op_cl_uq(vs, UqElem::monomial(mu))
              : r_matrix_op_cl_uq(vs, UqElem::monomial(mu));
      for (auto& [kb, sb] : braided)
        out += WqElem::of_term(kb.first, kb.second, pref * su * sb);
    }
  }
  return out;
}

inline bool star_theorem_checks() {
  WqElem D = dirac(), Dp = dirac_plus();
  StarMap sl2r(RealForm::SL2R, StarVariant::InvReal);
  if (!(star(D, sl2r) == D)) return false;
  for (RealForm form : {RealForm::SU2, RealForm::SU11}) {
    StarMap mtp(form, StarVariant::MinusToPlus);
    StarMap ptm(form, StarVariant::PlusToMinus);
    if (!(star(D, mtp) == Dp)) return false;
    if (!(star(Dp, ptm) == D)) return false;
  }
  // gamma is star-fixed in all three forms
  for (RealForm form : {RealForm::SL2R, RealForm::SU2, RealForm::SU11}) {
    StarMap m(form, form == RealForm::SL2R ? StarVariant::InvReal
                                           : StarVariant::MinusToPlus);
    if (!(star(WqElem::from_clq(gamma()), m) == WqElem::from_clq(gamma())))
      return false;
  }
  return true;
}

// --- q -> 1 limit -------------------------------------------------------------

inline bool limit_q1_check() {
  // D_q in the recentered-Casimir form
  UqElem Cq = casimir_recentered();
  Scalar A1 = (Scalar::q(2) - Scalar::one()).pow(2) /
              (Scalar::integer(4) * Scalar::q(1) * (Scalar::q(2) + Scalar::one()) *
               Scalar::c(2));
  Scalar B1 = Scalar::one() / (Scalar::integer(2) * Scalar::c(2));
  WqElem dform = dirac_quadratic_part() -
                 WqElem::of(Cq.scaled(A1) + UqElem::one().scaled(B1), gamma());
  if (!(dform == dirac())) return false;

  // D_q^2 in the recentered-Casimir basis
  Scalar A = (Scalar::one() + Scalar::q(2)) * (Scalar::q(2) - Scalar::one()).pow(2) /
             (Scalar::integer(16) * Scalar::q(3) * Scalar::c());
  Scalar B = (Scalar::q(2) + Scalar::one()).pow(2) /
             (Scalar::integer(4) * Scalar::q(2) * Scalar::c());
  Scalar G = (Scalar::q(2) + Scalar::one()) /
             (Scalar::integer(4) * Scalar::q(1) * Scalar::c());
  WqElem D2 = wq_mul(dirac(), dirac());
  WqElem cq_form = WqElem::from_uq(uq_mul(Cq, Cq)).scaled(A) +
                   WqElem::from_uq(Cq).scaled(B) + WqElem::one().scaled(G);
  if (!(D2 == cq_form)) return false;

  // coefficients at q = 1: 0, 1/c, 1/(2c)
  ScalarQ1 invc = ScalarQ1(RatFunc(1L) / RatFunc::c());
  ScalarQ1 half_invc = ScalarQ1(RatFunc(Rat(1, 2)) / RatFunc::c());
  return eval_q1(A).is_zero() && eval_q1(B) == invc && eval_q1(G) == half_invc;
}

// --- printing ------------------------------------------------------------------

inline std::string WqElem::str() const {
  if (terms_.empty()) return "0";
  static const char* names[kClDim] = {"1",      "v2",       "v0",       "vm2",
                                      "v2*vm2", "v2*v0", "v0*vm2", "v2*v0*vm2"};
  std::string out;
  for (auto& [k, s] : terms_) {
    if (!out.empty()) out += " + ";
    UqElem u = UqElem::monomial(k.first, s);
    out += u.str() + " ox " + names[static_cast<int>(k.second)];
  }
  return out;
}

}  // namespace qweil
