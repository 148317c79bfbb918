// R-matrix braiding on weight modules.  Everything is computed from the
// truncated series
//   R = q^(H(x)H/2) sum_m q^(m(m-1)/2) (q-q^-1)^m / [m]_q!  E^m (x) F^m,
// where the diagonal part acts on a pair of weight vectors by q^(w1 w2 / 2)
// and the sum cuts off because E (and F) act nilpotently on the 8-dim
// Clifford module.  The normalized braiding on V (x) V is defined through
// the spectral projectors of sigma_R, with eigenvalues q^2, -q^-2, q^-4
// rescaled to +1, -1, +1.

#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qweil/cliffordq.hpp"
#include "qweil/linalg.hpp"

namespace qweil {

// --- R-matrix series coefficients ----------------------------------------

inline Scalar r_matrix_coeff(int m) {
  // q^(m(m-1)/2) (q-q^-1)^m / [m]_q!
  Scalar num = Scalar::q(m * (m - 1) / 2) * (Scalar::q(1) - Scalar::q(-1)).pow(m);
  Scalar fact = Scalar::one();
  for (int i = 1; i <= m; ++i) fact *= Scalar::qnumber(i);
  return num / fact;
}

constexpr int kBraidCutoff = 3;  // E^3 kills every Clifford basis vector

// --- braiding of Cl_q past U_q --------------------------------------------

// Terms of an element of U_q (x) Cl_q (or of Cl_q (x) U_q before the flip;
// the key order is fixed as (U_q monomial, Clifford index) either way).
using UqClTerms = std::map<std::pair<UqMonomial, ClBasis>, Scalar>;

inline void add_term(UqClTerms& t, const UqMonomial& m, ClBasis b, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = t.emplace(std::pair{m, b}, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
  }
}

namespace braid_detail {

// E^m and F^m applied to the Clifford basis, precomputed.
inline const std::array<std::array<ClqElem, kClDim>, kBraidCutoff + 1>& epow_cl() {
  static const auto tab = [] {
    std::array<std::array<ClqElem, kClDim>, kBraidCutoff + 1> t;
    for (int b = 0; b < kClDim; ++b) t[0][b] = ClqElem::basis(static_cast<ClBasis>(b));
    for (int m = 1; m <= kBraidCutoff; ++m)
      for (int b = 0; b < kClDim; ++b) t[m][b] = clq_detail::act_E(t[m - 1][b]);
    return t;
  }();
  return tab;
}

inline const std::array<std::array<ClqElem, kClDim>, kBraidCutoff + 1>& fpow_cl() {
  static const auto tab = [] {
    std::array<std::array<ClqElem, kClDim>, kBraidCutoff + 1> t;
    for (int b = 0; b < kClDim; ++b) t[0][b] = ClqElem::basis(static_cast<ClBasis>(b));
    for (int m = 1; m <= kBraidCutoff; ++m)
      for (int b = 0; b < kClDim; ++b) t[m][b] = clq_detail::act_F(t[m - 1][b]);
    return t;
  }();
  return tab;
}

}  // namespace braid_detail

// R applied to v (x) y in Cl_q (x) U_q, no flip: the result is again a sum
// of (Clifford, U_q-monomial) pairs, returned with the shared key order.
inline UqClTerms r_matrix_op_cl_uq(const ClqElem& v, const UqElem& y, int cutoff = kBraidCutoff) {
  UqClTerms out;
  const auto& etab = braid_detail::epow_cl();
  for (auto& [m, sy] : y.terms()) {
    int wy = m.ad_weight();
    for (int mm = 0; mm <= cutoff; ++mm) {
      Scalar cm = r_matrix_coeff(mm);
      // ad_{F^mm}(monomial), computed once per (monomial, mm)
      UqElem ady = UqElem::monomial(m);
      for (int i = 0; i < mm; ++i) ady = uq_ad_F(ady);
      if (ady.is_zero()) continue;
      int wy_out = wy - 2 * mm;
      for (int b = 0; b < kClDim; ++b) {
        if (v.coeffs()[b].is_zero()) continue;
        const ClqElem& ev = etab[mm][b];
        if (ev.is_zero()) continue;
        int wv_out = cl_weight(static_cast<ClBasis>(b)) + 2 * mm;
        // diagonal factor q^(wv_out * wy_out / 2): both weights even
        Scalar diag = Scalar::q(wv_out * wy_out / 2);
        Scalar pref = v.coeffs()[b] * sy * cm * diag;
        for (int bo = 0; bo < kClDim; ++bo) {
          if (ev.coeffs()[bo].is_zero()) continue;
          for (auto& [mo, so] : ady.terms())
            add_term(out, mo, static_cast<ClBasis>(bo), pref * ev.coeffs()[bo] * so);
        }
      }
    }
  }
  return out;
}

// sigma_R(v (x) y) = tau . R: same terms, read as sum y_i (x) v_i.
inline UqClTerms sigma_R_cl_uq(const ClqElem& v, const UqElem& y) {
  return r_matrix_op_cl_uq(v, y);
}

// R_21 applied to v (x) y (F^m on the Clifford leg, ad_{E^m} on U_q).
inline UqClTerms r21_op_cl_uq(const ClqElem& v, const UqElem& y) {
  UqClTerms out;
  const auto& ftab = braid_detail::fpow_cl();
  for (auto& [m, sy] : y.terms()) {
    int wy = m.ad_weight();
    for (int mm = 0; mm <= kBraidCutoff; ++mm) {
      Scalar cm = r_matrix_coeff(mm);
      UqElem ady = UqElem::monomial(m);
      for (int i = 0; i < mm; ++i) ady = uq_ad_E(ady);
      if (ady.is_zero()) continue;
      int wy_out = wy + 2 * mm;
      for (int b = 0; b < kClDim; ++b) {
        if (v.coeffs()[b].is_zero()) continue;
        const ClqElem& fv = ftab[mm][b];
        if (fv.is_zero()) continue;
        int wv_out = cl_weight(static_cast<ClBasis>(b)) - 2 * mm;
        Scalar diag = Scalar::q(wv_out * wy_out / 2);
        Scalar pref = v.coeffs()[b] * sy * cm * diag;
        for (int bo = 0; bo < kClDim; ++bo) {
          if (fv.coeffs()[bo].is_zero()) continue;
          for (auto& [mo, so] : ady.terms())
            add_term(out, mo, static_cast<ClBasis>(bo), pref * fv.coeffs()[bo] * so);
        }
      }
    }
  }
  return out;
}

// (R_21)^-1 applied to v (x) y.  R_21 = Q S with Q the weight pairing and
// S = 1 + N, N strictly lowering the Clifford weight, so N^3 = 0 and
// (R_21)^-1 = (1 - N + N^2) Q^-1 exactly.
inline UqClTerms r21_inv_op_cl_uq(const ClqElem& v, const UqElem& y) {
  const auto& ftab = braid_detail::fpow_cl();
  // Q^-1 on a single pair
  UqClTerms cur;
  for (int b = 0; b < kClDim; ++b) {
    if (v.coeffs()[b].is_zero()) continue;
    for (auto& [m, sy] : y.terms()) {
      Scalar diag = Scalar::q(-cl_weight(static_cast<ClBasis>(b)) * m.ad_weight() / 2);
      add_term(cur, m, static_cast<ClBasis>(b), v.coeffs()[b] * sy * diag);
    }
  }
  auto apply_N = [&](const UqClTerms& x) {
    UqClTerms out;
    for (auto& [key, s] : x) {
      const auto& [m, b] = key;
      for (int mm = 1; mm <= kBraidCutoff; ++mm) {
        const ClqElem& fv = ftab[mm][static_cast<int>(b)];
        if (fv.is_zero()) continue;
        UqElem ady = UqElem::monomial(m);
        for (int i = 0; i < mm; ++i) ady = uq_ad_E(ady);
        if (ady.is_zero()) continue;
        Scalar pref = s * r_matrix_coeff(mm);
        for (int bo = 0; bo < kClDim; ++bo) {
          if (fv.coeffs()[bo].is_zero()) continue;
          for (auto& [mo, so] : ady.terms())
            add_term(out, mo, static_cast<ClBasis>(bo), pref * fv.coeffs()[bo] * so);
        }
      }
    }
    return out;
  };
  UqClTerms n1 = apply_N(cur);
  UqClTerms n2 = apply_N(n1);
  UqClTerms out = cur;
  for (auto& [k, s] : n1) add_term(out, k.first, k.second, -s);
  for (auto& [k, s] : n2) add_term(out, k.first, k.second, s);
  return out;
}

// --- braiding of Cl_q past Verma / finite module vectors -------------------

struct ModuleContext {
  bool finite = false;
  int n = 0;  // highest weight when finite

  // F^m acting on w_{lambda - 2k}: product of [k+1]...[k+m]
  Scalar f_power_coeff(int k, int m) const {
    Scalar s = Scalar::one();
    for (int i = 1; i <= m; ++i) {
      if (finite && k + i > n) return Scalar::zero();
      Scalar qi = Scalar::qnumber(k + i);
      s *= qi;
    }
    return s;
  }

  // q^(w * m1 / 2) with w the weight of w_{lambda-2k} and m1 the (even)
  // Clifford weight
  Scalar half_pairing(int k, int m1) const {
    int half = m1 / 2;
    if (finite) return Scalar::q((n - 2 * k) * half);
    return Scalar::L(half) * Scalar::q(-2 * k * half);
  }
};

// terms of an element of Module (x) Cl: key (depth k, Clifford index)
using ModClTerms = std::map<std::pair<int, ClBasis>, Scalar>;

inline void add_term(ModClTerms& t, int k, ClBasis b, const Scalar& s) {
  if (s.is_zero()) return;
  auto [it, fresh] = t.emplace(std::pair{k, b}, s);
  if (!fresh) {
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
  }
}

// sigma_R(v (x) w_{lambda-2k}) as a sum of (w_{lambda-2k'}, Clifford) pairs.
inline ModClTerms sigma_R_cl_mod(const ClqElem& v, int k, const ModuleContext& ctx) {
  ModClTerms out;
  const auto& etab = braid_detail::epow_cl();
  for (int mm = 0; mm <= kBraidCutoff; ++mm) {
    Scalar coeff = r_matrix_coeff(mm) * ctx.f_power_coeff(k, mm);
    if (coeff.is_zero()) continue;
    int kk = k + mm;
    for (int b = 0; b < kClDim; ++b) {
      if (v.coeffs()[b].is_zero()) continue;
      const ClqElem& ev = etab[mm][b];
      if (ev.is_zero()) continue;
      int wv_out = cl_weight(static_cast<ClBasis>(b)) + 2 * mm;
      Scalar pref = v.coeffs()[b] * coeff * ctx.half_pairing(kk, wv_out);
      for (int bo = 0; bo < kClDim; ++bo)
        if (!ev.coeffs()[bo].is_zero())
          add_term(out, kk, static_cast<ClBasis>(bo), pref * ev.coeffs()[bo]);
    }
  }
  return out;
}

// --- the 3-dimensional weight module V and V (x) V -------------------------

// abstract adjoint module with ordered basis (v2, v0, vm2)
inline ScalarVec v_act_E(const ScalarVec& x) {
  // E v2 = 0, E v0 = -(q+q^-1) v2, E vm2 = v0
  return {-(Scalar::q(1) + Scalar::q(-1)) * x[1], x[2], Scalar::zero()};
}
inline ScalarVec v_act_F(const ScalarVec& x) {
  // F v2 = -v0, F v0 = (q+q^-1) vm2, F vm2 = 0
  return {Scalar::zero(), -x[0], (Scalar::q(1) + Scalar::q(-1)) * x[1]};
}
inline int v_weight(int i) { return i == 0 ? 2 : i == 1 ? 0 : -2; }

using Mat9 = std::array<std::array<Scalar, 9>, 9>;

inline ScalarVec vv_act_E(const ScalarVec& x) {
  // E (a (x) b) = (E a)(K b) + a (E b), on the 9-dim flat basis
  ScalarVec out(9, Scalar::zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Scalar& s = x[3 * i + j];
      if (s.is_zero()) continue;
      // (E v_i) (x) K v_j
      ScalarVec ei(3, Scalar::zero());
      ei[i] = Scalar::one();
      ScalarVec e_img = v_act_E(ei);
      for (int io = 0; io < 3; ++io)
        if (!e_img[io].is_zero())
          out[3 * io + j] += s * e_img[io] * Scalar::q(v_weight(j));
      // v_i (x) E v_j
      ScalarVec ej(3, Scalar::zero());
      ej[j] = Scalar::one();
      ScalarVec e_jmg = v_act_E(ej);
      for (int jo = 0; jo < 3; ++jo)
        if (!e_jmg[jo].is_zero()) out[3 * i + jo] += s * e_jmg[jo];
    }
  return out;
}

inline ScalarVec vv_act_F(const ScalarVec& x) {
  // F (a (x) b) = (F a) (x) b + (K^-1 a) (x) F b
  ScalarVec out(9, Scalar::zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Scalar& s = x[3 * i + j];
      if (s.is_zero()) continue;
      ScalarVec fi(3, Scalar::zero());
      fi[i] = Scalar::one();
      ScalarVec f_img = v_act_F(fi);
      for (int io = 0; io < 3; ++io)
        if (!f_img[io].is_zero()) out[3 * io + j] += s * f_img[io];
      ScalarVec fj(3, Scalar::zero());
      fj[j] = Scalar::one();
      ScalarVec f_jmg = v_act_F(fj);
      for (int jo = 0; jo < 3; ++jo)
        if (!f_jmg[jo].is_zero())
          out[3 * i + jo] += s * f_jmg[jo] * Scalar::q(-v_weight(i));
    }
  return out;
}

inline ScalarVec vv_act_K(const ScalarVec& x) {
  ScalarVec out(9, Scalar::zero());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!x[3 * i + j].is_zero())
        out[3 * i + j] = x[3 * i + j] * Scalar::q(v_weight(i) + v_weight(j));
  return out;
}

// sigma_R on V (x) V as a 9x9 matrix (columns = images of basis vectors).
inline Mat9 sigma_R_VV() {
  Mat9 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // braid v_i (x) v_j
      ScalarVec left(3, Scalar::zero());
      left[i] = Scalar::one();
      for (int mm = 0; mm <= kBraidCutoff; ++mm) {
        // E^mm on the left factor
        ScalarVec el = left;
        for (int s = 0; s < mm; ++s) el = v_act_E(el);
        bool zero = true;
        for (auto& c : el)
          if (!c.is_zero()) zero = false;
        if (zero) continue;
        ScalarVec right(3, Scalar::zero());
        right[j] = Scalar::one();
        for (int s = 0; s < mm; ++s) right = v_act_F(right);
        Scalar cm = r_matrix_coeff(mm);
        for (int io = 0; io < 3; ++io) {
          if (el[io].is_zero()) continue;
          for (int jo = 0; jo < 3; ++jo) {
            if (right[jo].is_zero()) continue;
            Scalar diag = Scalar::q(v_weight(io) * v_weight(jo) / 2);
            // tau flip: the image basis vector is v_jo (x) v_io
            m[3 * jo + io][3 * i + j] += cm * diag * el[io] * right[jo];
          }
        }
      }
    }
  return m;
}

inline ScalarVec mat9_apply(const Mat9& m, const ScalarVec& x) {
  ScalarVec out(9, Scalar::zero());
  for (int c = 0; c < 9; ++c) {
    if (x[c].is_zero()) continue;
    for (int r = 0; r < 9; ++r)
      if (!m[r][c].is_zero()) out[r] += m[r][c] * x[c];
  }
  return out;
}

inline Mat9 mat9_mul(const Mat9& a, const Mat9& b) {
  Mat9 out{};
  for (int r = 0; r < 9; ++r)
    for (int k = 0; k < 9; ++k) {
      if (a[r][k].is_zero()) continue;
      for (int c = 0; c < 9; ++c)
        if (!b[k][c].is_zero()) out[r][c] += a[r][k] * b[k][c];
    }
  return out;
}

inline Mat9 mat9_identity() {
  Mat9 m{};
  for (int i = 0; i < 9; ++i) m[i][i] = Scalar::one();
  return m;
}

inline Mat9 mat9_add_scaled(const Mat9& a, const Mat9& b, const Scalar& s) {
  Mat9 out = a;
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c)
      if (!b[r][c].is_zero()) out[r][c] += b[r][c] * s;
  return out;
}

struct VVDecomposition {
  ScalarVec w1, w2, w3;        // highest weight vectors of V4, V2, V0
  Mat9 p4, p2, p0;             // spectral projectors of sigma_R
};

// highest weight vectors as weight-space kernels of the E action, and the
// Lagrange projectors of sigma_R onto its three eigenvalues.
inline VVDecomposition decompose_VV() {
  VVDecomposition d;
  d.w1 = ScalarVec(9, Scalar::zero());
  d.w1[0] = Scalar::one();  // v2 (x) v2

  // weight 2 subspace: indices (0,1) and (1,0)
  {
    ScalarMat rows;
    for (int idx : {1, 3}) {
      ScalarVec x(9, Scalar::zero());
      x[idx] = Scalar::one();
      ScalarVec img = vv_act_E(x);
      rows.push_back({img[0]});  // only the weight-4 slot (0,0) can be hit
    }
    // kernel of the 2x1 map
    ScalarVec w(9, Scalar::zero());
    // a*E(v2 (x) v0) + b*E(v0 (x) v2) = 0
    const Scalar &A = rows[0][0], &B = rows[1][0];
    w[1] = B;
    w[3] = -A;
    d.w2 = w;
  }

  // weight 0 subspace: indices (0,2), (1,1), (2,0); E maps into weight 2
  {
    int idxs[3] = {2, 4, 6};
    ScalarMat rows;
    for (int idx : idxs) {
      ScalarVec x(9, Scalar::zero());
      x[idx] = Scalar::one();
      ScalarVec img = vv_act_E(x);
      rows.push_back({img[1], img[3]});
    }
    // kernel of the 3x2 matrix (rows = images of the three basis vectors)
    ScalarMat cols(2, ScalarVec(3));
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 2; ++c) cols[c][r] = rows[r][c];
    ScalarMat ker = kernel_basis(cols, 3);
    d.w3 = ScalarVec(9, Scalar::zero());
    for (int r = 0; r < 3; ++r) d.w3[idxs[r]] = ker[0][r];
  }

  Mat9 sigma = sigma_R_VV();
  Scalar l1 = Scalar::q(2), l2 = -Scalar::q(-2), l3 = Scalar::q(-4);
  Mat9 id = mat9_identity();
  auto proj = [&](const Scalar& mine, const Scalar& oa, const Scalar& ob) {
    Mat9 m1 = mat9_add_scaled(sigma, id, -oa);
    Mat9 m2 = mat9_add_scaled(sigma, id, -ob);
    Mat9 num = mat9_mul(m1, m2);
    Scalar den = (mine - oa) * (mine - ob);
    Mat9 out{};
    for (int r = 0; r < 9; ++r)
      for (int c = 0; c < 9; ++c)
        if (!num[r][c].is_zero()) out[r][c] = num[r][c] / den;
    return out;
  };
  d.p4 = proj(l1, l2, l3);
  d.p2 = proj(l2, l1, l3);
  d.p0 = proj(l3, l1, l2);
  return d;
}

// sigma-tilde = P4 - P2 + P0 (eigenvalues +1, -1, +1)
inline Mat9 sigma_tilde() {
  static const Mat9 st = [] {
    VVDecomposition d = decompose_VV();
    Mat9 out{};
    for (int r = 0; r < 9; ++r)
      for (int c = 0; c < 9; ++c)
        out[r][c] = d.p4[r][c] - d.p2[r][c] + d.p0[r][c];
    return out;
  }();
  return st;
}

// --- invariant bilinear form ----------------------------------------------

inline Scalar bilinear_form(int i, int j) {
  // <v2, vm2> = c, <v0, v0> = q^-3 (1+q^2) c, <vm2, v2> = c q^-2
  if (i == 0 && j == 2) return Scalar::c();
  if (i == 1 && j == 1) return Scalar::q(-3) * (Scalar::one() + Scalar::q(2)) * Scalar::c();
  if (i == 2 && j == 0) return Scalar::c() * Scalar::q(-2);
  return Scalar::zero();
}

inline Scalar bilinear_on_vv(const ScalarVec& x) {
  Scalar s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!x[3 * i + j].is_zero()) s += x[3 * i + j] * bilinear_form(i, j);
  return s;
}

inline bool check_ad_invariance() {
  // <X_(1) v, X_(2) w> = eps(X) <v,w> for X in {E, F, K} on all 9 pairs
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      ScalarVec vi(3, Scalar::zero()), vj(3, Scalar::zero());
      vi[i] = Scalar::one();
      vj[j] = Scalar::one();
      // E: <E v, K w> + <v, E w> = 0
      ScalarVec ei = v_act_E(vi), ej = v_act_E(vj);
      Scalar accE;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          if (!ei[a].is_zero())
            accE += ei[a] * Scalar::q(v_weight(j)) * (b == j ? bilinear_form(a, b) : Scalar::zero());
          if (!ej[b].is_zero() && a == i) accE += ej[b] * bilinear_form(a, b);
        }
      if (!accE.is_zero()) return false;
      // F: <F v, w> + <K^-1 v, F w> = 0
      ScalarVec fi = v_act_F(vi), fj = v_act_F(vj);
      Scalar accF;
      for (int a = 0; a < 3; ++a) {
        if (!fi[a].is_zero()) accF += fi[a] * bilinear_form(a, j);
        if (!fj[a].is_zero()) accF += Scalar::q(-v_weight(i)) * fj[a] * bilinear_form(i, a);
      }
      if (!accF.is_zero()) return false;
      // K: <K v, K w> = <v, w>
      Scalar lhsK = Scalar::q(v_weight(i) + v_weight(j)) * bilinear_form(i, j);
      if (!(lhsK == bilinear_form(i, j))) return false;
    }
  return true;
}

// --- quantum exterior algebra dimensions ----------------------------------

// basis of the +1 eigenspace of sigma-tilde (the symmetric square)
inline ScalarMat sigma_tilde_plus_basis() {
  Mat9 st = sigma_tilde();
  // rows of (1 + sigma-tilde) span the +1 eigenspace; extract a basis
  ScalarMat rows;
  for (int c = 0; c < 9; ++c) {
    ScalarVec col(9);
    bool nz = false;
    for (int r = 0; r < 9; ++r) {
      col[r] = st[r][c];
      if (r == c) col[r] += Scalar::one();
      if (!col[r].is_zero()) nz = true;
    }
    if (nz) rows.push_back(col);
  }
  // row-reduce and keep the nonzero rows
  ScalarMat m = rows;
  int rank = rank_destructive(m);
  ScalarMat basis;
  for (auto& r : m) {
    bool nz = false;
    for (auto& s : r)
      if (!s.is_zero()) {
        nz = true;
        break;
      }
    if (nz) basis.push_back(r);
  }
  (void)rank;
  return basis;
}

// graded dimensions of T(V)/<S^2> through degree dmax
inline std::vector<int> lambda_q_dims(int dmax) {
  std::vector<int> dims;
  dims.push_back(1);
  if (dmax >= 1) dims.push_back(3);
  ScalarMat s2 = sigma_tilde_plus_basis();
  int pow3 = 3;
  for (int d = 2; d <= dmax; ++d) {
    pow3 *= 3;
    ScalarMat rows;
    int left = 1;
    for (int i = 0; i + 2 <= d; ++i) {
      int right = 1;
      for (int j = 0; j < d - 2 - i; ++j) right *= 3;
      // rows: u (x) s (x) w for all u in 3^i, s in S2 basis, w in 3^(d-2-i)
      for (int u = 0; u < left; ++u)
        for (auto& s : s2)
          for (int w = 0; w < right; ++w) {
            ScalarVec row(pow3, Scalar::zero());
            for (int pair = 0; pair < 9; ++pair) {
              if (s[pair].is_zero()) continue;
              // flat index of u . pair . w in base 3
              long idx = (static_cast<long>(u) * 9 + pair) * right + w;
              row[idx] = s[pair];
            }
            rows.push_back(std::move(row));
          }
      left *= 3;
    }
    dims.push_back(pow3 - rank_destructive(rows));
  }
  return dims;
}

}  // namespace qweil
