#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qweil/cliffordq.hpp"

using namespace qweil;

namespace {

ClqElem clq_basis_elem(int i) { return ClqElem::basis(static_cast<ClBasis>(i)); }
ClElem clc_basis_elem(int i) { return ClElem::basis(static_cast<ClcBasis>(i)); }

Scalar ct() { return Scalar::c() * Scalar::t(); }

}  // namespace

TEST_CASE("multiplication table relations") {
  // v0 v2 = -q^-2 v2 v0
  CHECK(clq_mul(ClqElem::v0(), ClqElem::v2()) ==
        ClqElem::basis(ClBasis::V2V0, -Scalar::q(-2)));
  // v2 v2 = 0, vm2 vm2 = 0
  CHECK(clq_mul(ClqElem::v2(), ClqElem::v2()).is_zero());
  CHECK(clq_mul(ClqElem::vm2(), ClqElem::vm2()).is_zero());
  // vm2 v0 = -q^-2 v0 vm2
  CHECK(clq_mul(ClqElem::vm2(), ClqElem::v0()) ==
        ClqElem::basis(ClBasis::V0Vm2, -Scalar::q(-2)));
  // v0 v0 = (1-q^4)/q^3 v2 vm2 + (q^2+1)/q c
  CHECK(clq_mul(ClqElem::v0(), ClqElem::v0()) ==
        ClqElem::basis(ClBasis::V2Vm2,
                       (Scalar::one() - Scalar::q(4)) * Scalar::q(-3)) +
            ClqElem::one().scaled((Scalar::q(2) + Scalar::one()) * Scalar::q(-1) *
                                  Scalar::c()));
  // vm2 v2 = -v2 vm2 + (q^2+1)/q^2 c
  CHECK(clq_mul(ClqElem::vm2(), ClqElem::v2()) ==
        ClqElem::basis(ClBasis::V2Vm2, -Scalar::one()) +
            ClqElem::one().scaled((Scalar::q(2) + Scalar::one()) * Scalar::q(-2) *
                                  Scalar::c()));
}

TEST_CASE("associativity on all basis triples") {
  for (int i = 0; i < kClDim; ++i)
    for (int j = 0; j < kClDim; ++j)
      for (int k = 0; k < kClDim; ++k) {
        ClqElem a = clq_basis_elem(i), b = clq_basis_elem(j), c = clq_basis_elem(k);
        CHECK(clq_mul(clq_mul(a, b), c) == clq_mul(a, clq_mul(b, c)));
      }
}

TEST_CASE("Z2 grading") {
  for (int i = 0; i < kClDim; ++i)
    for (int j = 0; j < kClDim; ++j) {
      ClqElem p = clq_mul(clq_basis_elem(i), clq_basis_elem(j));
      int par = (cl_parity(static_cast<ClBasis>(i)) +
                 cl_parity(static_cast<ClBasis>(j))) % 2;
      for (int k = 0; k < kClDim; ++k)
        if (!p.coeffs()[k].is_zero())
          CHECK(cl_parity(static_cast<ClBasis>(k)) == par);
    }
}

TEST_CASE("gamma is central with square c^2 t^2") {
  ClqElem g = gamma();
  CHECK(cl_parity(ClBasis::V2V0Vm2) == 1);
  Scalar c2t2 = Scalar::c().pow(2) * Scalar::t().pow(2);
  CHECK(clq_mul(g, g) == ClqElem::one().scaled(c2t2));
  for (int i = 0; i < kClDim; ++i) {
    ClqElem b = clq_basis_elem(i);
    CHECK(clq_mul(g, b) == clq_mul(b, g));
  }
  // gamma_+ gamma_- = 0 and the two are orthogonal up to scale
  CHECK(clq_mul(gamma_pm(+1), gamma_pm(-1)).is_zero());
}

TEST_CASE("module-algebra action of the generators") {
  // E.vm2 = v0, F.v2 = -v0, K acts by weight
  CHECK(uq_action_clq(UqElem::E(), ClqElem::vm2()) == ClqElem::v0());
  CHECK(uq_action_clq(UqElem::F(), ClqElem::v2()) == -ClqElem::v0());
  CHECK(uq_action_clq(UqElem::K(), ClqElem::basis(ClBasis::V2V0)) ==
        ClqElem::basis(ClBasis::V2V0, Scalar::q(2)));
  // K is group-like: K.(x y) = (K.x)(K.y) and matches the weight table
  for (int i = 0; i < kClDim; ++i) {
    ClBasis b = static_cast<ClBasis>(i);
    CHECK(uq_action_clq(UqElem::K(), clq_basis_elem(i)) ==
          clq_basis_elem(i).scaled(Scalar::q(cl_weight(b))));
  }
  // unit: x.1 = eps(x) 1
  CHECK(uq_action_clq(UqElem::E(), ClqElem::one()).is_zero());
  CHECK(uq_action_clq(UqElem::K(), ClqElem::one()) == ClqElem::one());
}

TEST_CASE("action respects the Leibniz rule") {
  // E.(v w) = (E.v)(K.w) + v (E.w) on all basis pairs
  for (int i = 0; i < kClDim; ++i)
    for (int j = 0; j < kClDim; ++j) {
      ClqElem v = clq_basis_elem(i), w = clq_basis_elem(j);
      ClqElem lhs = uq_action_clq(UqElem::E(), clq_mul(v, w));
      ClqElem rhs = clq_mul(uq_action_clq(UqElem::E(), v),
                            uq_action_clq(UqElem::K(), w)) +
                    clq_mul(v, uq_action_clq(UqElem::E(), w));
      CHECK(lhs == rhs);
      ClqElem lhsF = uq_action_clq(UqElem::F(), clq_mul(v, w));
      ClqElem rhsF = clq_mul(uq_action_clq(UqElem::F(), v), w) +
                     clq_mul(uq_action_clq(UqElem::Ki(), v),
                             uq_action_clq(UqElem::F(), w));
      CHECK(lhsF == rhsF);
    }
  // the action is a module action: (xy).v = x.(y.v)
  for (const UqElem& x : {UqElem::E(), UqElem::F(), UqElem::K()})
    for (const UqElem& y : {UqElem::E(), UqElem::F(), UqElem::Ki()})
      for (int i = 0; i < kClDim; ++i)
        CHECK(uq_action_clq(uq_mul(x, y), clq_basis_elem(i)) ==
              uq_action_clq(x, uq_action_clq(y, clq_basis_elem(i))));
}

TEST_CASE("gamma is the invariant element") {
  CHECK(uq_action_clq(UqElem::E(), gamma()).is_zero());
  CHECK(uq_action_clq(UqElem::F(), gamma()).is_zero());
  CHECK(uq_action_clq(UqElem::K(), gamma()) == gamma());
}

TEST_CASE("spin representations") {
  // gamma acts by -ct on S- and +ct on S+
  SpinMatrix gm = spin_rep(SpinSign::Minus, gamma());
  CHECK(gm == SpinMatrix::identity().scaled(-ct()));
  SpinMatrix gp = spin_rep(SpinSign::Plus, gamma());
  CHECK(gp == SpinMatrix::identity().scaled(ct()));

  // representation property on all basis pairs, both signs
  for (SpinSign sign : {SpinSign::Minus, SpinSign::Plus})
    for (int i = 0; i < kClDim; ++i)
      for (int j = 0; j < kClDim; ++j) {
        ClqElem a = clq_basis_elem(i), b = clq_basis_elem(j);
        CHECK(spin_rep(sign, clq_mul(a, b)) ==
              spin_rep(sign, a) * spin_rep(sign, b));
      }

  // v0 squared via matrices matches the table value
  SpinMatrix v0m = spin_rep(SpinSign::Minus, ClqElem::v0());
  SpinMatrix sq = v0m * v0m;
  CHECK(sq == spin_rep(SpinSign::Minus, clq_mul(ClqElem::v0(), ClqElem::v0())));
  CHECK(sq.m[0] == Scalar::t().pow(2) * Scalar::q(-4));
  CHECK(sq.m[3] == Scalar::t().pow(2));
}

TEST_CASE("joint spin representation is faithful") {
  // the 8 basis images in End(S-) (+) End(S+) are linearly independent:
  // rank of the 8x8 coefficient matrix over the scalar field is 8
  std::array<std::array<Scalar, 8>, 8> mat;
  for (int i = 0; i < kClDim; ++i) {
    SpinMatrix a = spin_rep(SpinSign::Minus, clq_basis_elem(i));
    SpinMatrix b = spin_rep(SpinSign::Plus, clq_basis_elem(i));
    for (int j = 0; j < 4; ++j) {
      mat[i][j] = a.m[j];
      mat[i][4 + j] = b.m[j];
    }
  }
  // Gaussian elimination
  int rank = 0;
  for (int col = 0; col < 8 && rank < 8; ++col) {
    int pivot = -1;
    for (int r = rank; r < 8; ++r)
      if (!mat[r][col].is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(mat[rank], mat[pivot]);
    for (int r = 0; r < 8; ++r) {
      if (r == rank || mat[r][col].is_zero()) continue;
      Scalar f = mat[r][col] / mat[rank][col];
      for (int cc = 0; cc < 8; ++cc) mat[r][cc] -= f * mat[rank][cc];
    }
    ++rank;
  }
  CHECK(rank == 8);

  // each single representation hits all of End(S): rank 4 per sign
  for (SpinSign sign : {SpinSign::Minus, SpinSign::Plus}) {
    std::array<std::array<Scalar, 4>, 8> m4;
    for (int i = 0; i < kClDim; ++i) {
      SpinMatrix a = spin_rep(sign, clq_basis_elem(i));
      for (int j = 0; j < 4; ++j) m4[i][j] = a.m[j];
    }
    int rk = 0;
    for (int col = 0; col < 4 && rk < 8; ++col) {
      int pivot = -1;
      for (int r = rk; r < 8; ++r)
        if (!m4[r][col].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(m4[rk], m4[pivot]);
      for (int r = 0; r < 8; ++r) {
        if (r == rk || m4[r][col].is_zero()) continue;
        Scalar f = m4[r][col] / m4[rk][col];
        for (int cc = 0; cc < 4; ++cc) m4[r][cc] -= f * m4[rk][cc];
      }
      ++rk;
    }
    CHECK(rk == 4);
  }
}

TEST_CASE("classical Clifford relations") {
  CHECK(cl_mul(ClElem::h(), ClElem::h()) == ClElem::one().scaled(Scalar::integer(2)));
  CHECK(cl_mul(ClElem::e(), ClElem::e()).is_zero());
  CHECK(cl_mul(ClElem::f(), ClElem::f()).is_zero());
  // e f + f e = 2
  CHECK(cl_mul(ClElem::e(), ClElem::f()) + cl_mul(ClElem::f(), ClElem::e()) ==
        ClElem::one().scaled(Scalar::integer(2)));
  // eh = -he, fh = -hf
  CHECK(cl_mul(ClElem::e(), ClElem::h()) + cl_mul(ClElem::h(), ClElem::e()) ==
        ClElem::zero());
  CHECK(cl_mul(ClElem::f(), ClElem::h()) + cl_mul(ClElem::h(), ClElem::f()) ==
        ClElem::zero());
  // associativity witness (e h) f = e (h f) plus all triples
  for (int i = 0; i < kClDim; ++i)
    for (int j = 0; j < kClDim; ++j)
      for (int k = 0; k < kClDim; ++k)
        CHECK(cl_mul(cl_mul(clc_basis_elem(i), clc_basis_elem(j)), clc_basis_elem(k)) ==
              cl_mul(clc_basis_elem(i), cl_mul(clc_basis_elem(j), clc_basis_elem(k))));
}

TEST_CASE("phi and phi_inv are mutually inverse algebra maps") {
  for (int i = 0; i < kClDim; ++i) {
    CHECK(phi_inv(phi(clq_basis_elem(i))) == clq_basis_elem(i));
    CHECK(phi(phi_inv(clc_basis_elem(i))) == clc_basis_elem(i));
  }
  // homomorphism on all 64 basis products, both directions
  for (int i = 0; i < kClDim; ++i)
    for (int j = 0; j < kClDim; ++j) {
      CHECK(phi(clq_mul(clq_basis_elem(i), clq_basis_elem(j))) ==
            cl_mul(phi(clq_basis_elem(i)), phi(clq_basis_elem(j))));
      CHECK(phi_inv(cl_mul(clc_basis_elem(i), clc_basis_elem(j))) ==
            clq_mul(phi_inv(clc_basis_elem(i)), phi_inv(clc_basis_elem(j))));
    }
  // phi(v0 v2) = -q^-2 phi(v2) phi(v0)
  CHECK(phi(clq_mul(ClqElem::v0(), ClqElem::v2())) ==
        cl_mul(phi(ClqElem::v2()), phi(ClqElem::v0())).scaled(-Scalar::q(-2)));
  // phi^-1(h) = (r2/t) v0 - r2 (q^2-1)/(c t (q^2+1)) v2 v0 vm2
  Scalar r2 = Scalar::r2(), t = Scalar::t();
  ClqElem expect = ClqElem::v0().scaled(r2 / t) -
                   ClqElem::basis(ClBasis::V2V0Vm2,
                                  r2 * (Scalar::q(2) - Scalar::one()) /
                                      (Scalar::c() * t * (Scalar::q(2) + Scalar::one())));
  CHECK(phi_inv(ClElem::h()) == expect);
}

TEST_CASE("alpha is an algebra homomorphism") {
  UqElem E = UqElem::E(), F = UqElem::F(), K = UqElem::K(), Ki = UqElem::Ki();
  // images of the defining relations
  CHECK(clq_mul(alpha(K), alpha(Ki)) == ClqElem::one());
  CHECK(clq_mul(alpha(K), alpha(E)) ==
        clq_mul(alpha(E), alpha(K)).scaled(Scalar::q(2)));
  CHECK(clq_mul(alpha(K), alpha(F)) ==
        clq_mul(alpha(F), alpha(K)).scaled(Scalar::q(-2)));
  ClqElem lhs = clq_mul(alpha(E), alpha(F)) - clq_mul(alpha(F), alpha(E));
  ClqElem rhs = (alpha(K) - alpha(Ki))
                    .scaled(Scalar::one() / (Scalar::q(1) - Scalar::q(-1)));
  CHECK(lhs == rhs);
  // multiplicativity on PBW monomials
  CHECK(alpha(uq_mul(E, F)) == clq_mul(alpha(E), alpha(F)));
  CHECK(alpha(uq_mul(uq_mul(F, K), E)) ==
        clq_mul(clq_mul(alpha(F), alpha(K)), alpha(E)));
  // displayed values for Z and Y
  CHECK(alpha(uq_Z()) ==
        ClqElem::basis(ClBasis::V2Vm2, Scalar::one() / Scalar::c()) -
            ClqElem::one());
  CHECK(alpha(uq_Y()) ==
        ClqElem::basis(ClBasis::V0Vm2,
                       -Scalar::q(1) / ((Scalar::one() + Scalar::q(2)) * Scalar::c())));
}

TEST_CASE("alpha0 matches the displayed table") {
  Scalar r2 = Scalar::r2();
  // alpha0 = phi . alpha
  CHECK(alpha0(UqElem::E()) == ClElem::basis(ClcBasis::EH, -r2 / Scalar::integer(2)));
  CHECK(alpha0(UqElem::F()) ==
        ClElem::basis(ClcBasis::HF, -r2 / Scalar::integer(4)));
  CHECK(alpha0(UqElem::K()) ==
        ClElem::basis(ClcBasis::EF,
                      (Scalar::q(2) - Scalar::one()) / (Scalar::integer(2) * Scalar::q(1))) +
            ClElem::one().scaled(Scalar::q(-1)));
  CHECK(alpha0(UqElem::Ki()) ==
        ClElem::basis(ClcBasis::EF,
                      -(Scalar::q(2) - Scalar::one()) / (Scalar::integer(2) * Scalar::q(1))) +
            ClElem::one().scaled(Scalar::q(1)));
  CHECK(alpha0(uq_Z()) ==
        ClElem::basis(ClcBasis::EF,
                      (Scalar::q(2) + Scalar::one()) / (Scalar::integer(2) * Scalar::q(2))) -
            ClElem::one());
  CHECK(alpha0(uq_Y()) ==
        ClElem::basis(ClcBasis::HF,
                      -r2 / (Scalar::integer(4) * Scalar::q(1))));
}

TEST_CASE("spin module U_q action") {
  SpinVector s1{{Scalar::one(), Scalar::zero()}};
  SpinVector sm1{{Scalar::zero(), Scalar::one()}};
  // the sign pairing is fixed by compatibility with the Clifford action:
  // plain signs on S-, flipped signs on S+
  CHECK(spin_uq_action(SpinSign::Minus, UqElem::F(), s1) == sm1);
  CHECK(spin_uq_action(SpinSign::Plus, UqElem::E(), sm1) ==
        s1.scaled(-Scalar::one()));
  CHECK(spin_uq_action(SpinSign::Plus, UqElem::K(), s1) == s1.scaled(Scalar::q(1)));
  CHECK(spin_uq_action(SpinSign::Minus, UqElem::Ki(), sm1) ==
        sm1.scaled(Scalar::q(1)));

  // compatibility X.(v s) = sum (X_(1).v)(X_(2).s) for generators and basis
  for (SpinSign sign : {SpinSign::Plus, SpinSign::Minus}) {
    for (int i = 0; i < kClDim; ++i) {
      ClqElem v = clq_basis_elem(i);
      for (const SpinVector& s : {s1, sm1}) {
        // X = E: E.(vs) = (E.v)(K.s) + v(E.s)
        SpinVector lhsE =
            spin_uq_action(sign, UqElem::E(), spin_apply(spin_rep(sign, v), s));
        SpinVector rhsE =
            spin_apply(spin_rep(sign, uq_action_clq(UqElem::E(), v)),
                       spin_uq_action(sign, UqElem::K(), s)) +
            spin_apply(spin_rep(sign, v), spin_uq_action(sign, UqElem::E(), s));
        CHECK(lhsE == rhsE);
        // X = F: F.(vs) = (F.v)s + (K^-1.v)(F.s)
        SpinVector lhsF =
            spin_uq_action(sign, UqElem::F(), spin_apply(spin_rep(sign, v), s));
        SpinVector rhsF =
            spin_apply(spin_rep(sign, uq_action_clq(UqElem::F(), v)), s) +
            spin_apply(spin_rep(sign, uq_action_clq(UqElem::Ki(), v)),
                       spin_uq_action(sign, UqElem::F(), s));
        CHECK(lhsF == rhsF);
        // X = K: K.(vs) = (K.v)(K.s)
        SpinVector lhsK =
            spin_uq_action(sign, UqElem::K(), spin_apply(spin_rep(sign, v), s));
        SpinVector rhsK = spin_apply(spin_rep(sign, uq_action_clq(UqElem::K(), v)),
                                     spin_uq_action(sign, UqElem::K(), s));
        CHECK(lhsK == rhsK);
      }
    }
  }
}

TEST_CASE("nonstandard filtration is multiplicatively compatible") {
  // the filtration induced by phi:
  //   level 1 adds e, h + (q^2-1)/(2q^2) e h f, f
  //   level 2 adds ef, eh, hf; level 3 adds ehf
  Scalar k = (Scalar::q(2) - Scalar::one()) / (Scalar::integer(2) * Scalar::q(2));
  ClElem hmod = ClElem::h() + ClElem::basis(ClcBasis::EHF, k);
  std::array<std::vector<ClElem>, 4> level;
  level[0] = {ClElem::one()};
  level[1] = {ClElem::e(), hmod, ClElem::f()};
  level[2] = {ClElem::basis(ClcBasis::EF), ClElem::basis(ClcBasis::EH),
              ClElem::basis(ClcBasis::HF)};
  level[3] = {ClElem::basis(ClcBasis::EHF)};

  // cumulative spans as coefficient matrices; product of level i and level j
  // members must lie in the cumulative span of level min(i+j, 3)
  auto in_span = [&](const ClElem& x, int lvl) {
    // collect cumulative basis
    std::vector<ClElem> basis;
    for (int l = 0; l <= lvl; ++l)
      for (auto& b : level[l]) basis.push_back(b);
    // solve by Gaussian elimination on the 8-dim coefficient vectors
    std::vector<std::array<Scalar, kClDim>> rows;
    for (auto& b : basis) {
      std::array<Scalar, kClDim> r;
      for (int c = 0; c < kClDim; ++c) r[c] = b.coeffs()[c];
      rows.push_back(r);
    }
    std::array<Scalar, kClDim> target;
    for (int c = 0; c < kClDim; ++c) target[c] = x.coeffs()[c];
    // eliminate
    size_t rank = 0;
    for (int col = 0; col < kClDim && rank < rows.size(); ++col) {
      size_t pivot = SIZE_MAX;
      for (size_t r = rank; r < rows.size(); ++r)
        if (!rows[r][col].is_zero()) {
          pivot = r;
          break;
        }
      if (pivot == SIZE_MAX) continue;
      std::swap(rows[rank], rows[pivot]);
      for (size_t r = 0; r < rows.size(); ++r) {
        if (r == rank || rows[r][col].is_zero()) continue;
        Scalar f = rows[r][col] / rows[rank][col];
        for (int cc = 0; cc < kClDim; ++cc) rows[r][cc] -= f * rows[rank][cc];
      }
      if (!target[col].is_zero()) {
        Scalar f = target[col] / rows[rank][col];
        for (int cc = 0; cc < kClDim; ++cc) target[cc] -= f * rows[rank][cc];
      }
      ++rank;
    }
    for (int c = 0; c < kClDim; ++c)
      if (!target[c].is_zero()) return false;
    return true;
  };

  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j)
      for (auto& a : level[i])
        for (auto& b : level[j])
          CHECK(in_span(cl_mul(a, b), std::min(i + j, 3)));

  // the graded pieces match the filtration levels through phi: the level-1
  // members are the phi images of the q-Clifford generators up to scale
  CHECK(phi(ClqElem::v2()) == ClElem::e().scaled(Scalar::t()));
  ClElem im0 = phi(ClqElem::v0());
  CHECK(in_span(im0, 1));
}
