// Verma modules M_{lambda pi} with lambda kept symbolic through L = q^lambda,
// their finite-dimensional quotients V_{n pi}, the W_q(sl2) action on
// M (x) S_{+-}, the 2x2 Dirac blocks, spectra, the Jordan block at
// lambda = -1, and Dirac cohomology.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qweil/weil.hpp"

namespace qweil {

// [lambda + j]_q = (L q^j - L^-1 q^-j)/(q - q^-1)
inline Scalar qnumber_symbolic(int j) {
  return (Scalar::L(1) * Scalar::q(j) - Scalar::L(-1) * Scalar::q(-j)) /
         (Scalar::q(1) - Scalar::q(-1));
}

// --- plain Verma / finite-module vectors ------------------------------------

// finitely supported combination of the w_{lambda - 2k}
class VermaVector {
 public:
  using Terms = std::map<int, Scalar>;

  VermaVector() = default;
  static VermaVector basis(int k, Scalar s = Scalar::one()) {
    VermaVector v;
    v.add_term(k, s);
    return v;
  }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const VermaVector&, const VermaVector&) = default;
  void add_term(int k, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  VermaVector& operator+=(const VermaVector& o) {
    for (auto& [k, s] : o.terms_) add_term(k, s);
    return *this;
  }
  friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
  VermaVector scaled(const Scalar& s) const {
    VermaVector v;
    if (s.is_zero()) return v;
    for (auto& [k, t] : terms_) v.terms_[k] = t * s;
    return v;
  }
  int max_depth() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

 private:
  Terms terms_;
};

namespace mod_detail {

// generator actions; depth k means the vector w_{lambda - 2k}
inline VermaVector act_E(int k, const ModuleContext& ctx) {
  if (k == 0) return {};
  Scalar c = ctx.finite ? Scalar::qnumber(ctx.n - k + 1) : qnumber_symbolic(1 - k);
  return VermaVector::basis(k - 1, c);
}
inline VermaVector act_F(int k, const ModuleContext& ctx) {
  if (ctx.finite && k + 1 > ctx.n) return {};
  return VermaVector::basis(k + 1, Scalar::qnumber(k + 1));
}
inline Scalar weight_K(int k, int b, const ModuleContext& ctx) {
  // K^b acts by q^(b (lambda - 2k))
  if (ctx.finite) return Scalar::q(b * (ctx.n - 2 * k));
  return Scalar::L(b) * Scalar::q(-2 * b * k);
}

}  // namespace mod_detail

inline VermaVector module_act(const UqElem& x, const VermaVector& w,
                              const ModuleContext& ctx) {
  VermaVector out;
  for (auto& [m, s] : x.terms()) {
    for (auto& [k, sw] : w.terms()) {
      // F^f K^b E^e with E acting first
      VermaVector cur = VermaVector::basis(k, s * sw);
      for (int i = 0; i < m.e && !cur.is_zero(); ++i) {
        VermaVector next;
        for (auto& [kk, ss] : cur.terms())
          next += mod_detail::act_E(kk, ctx).scaled(ss);
        cur = std::move(next);
      }
      if (m.k != 0 && !cur.is_zero()) {
        VermaVector next;
        for (auto& [kk, ss] : cur.terms())
          next.add_term(kk, ss * mod_detail::weight_K(kk, m.k, ctx));
        cur = std::move(next);
      }
      for (int i = 0; i < m.f && !cur.is_zero(); ++i) {
        VermaVector next;
        for (auto& [kk, ss] : cur.terms())
          next += mod_detail::act_F(kk, ctx).scaled(ss);
        cur = std::move(next);
      }
      out += cur;
    }
  }
  return out;
}

inline VermaVector verma_act(const UqElem& x, const VermaVector& w) {
  return module_act(x, w, ModuleContext{});
}

inline VermaVector finite_act(int n, const UqElem& x, const VermaVector& w) {
  if (w.max_depth() > n) throw std::domain_error("not in V_n");
  return module_act(x, w, ModuleContext{true, n});
}

// --- vectors of M (x) S ------------------------------------------------------

// spin index 0 is s_1, 1 is s_-1
class ModuleVector {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Scalar>;

  ModuleVector() = default;
  static ModuleVector basis(int k, int spin, Scalar s = Scalar::one()) {
    ModuleVector v;
    v.add_term(k, spin, s);
    return v;
  }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;
  void add_term(int k, int spin, const Scalar& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = terms_.emplace(Key{k, spin}, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  ModuleVector& operator+=(const ModuleVector& o) {
    for (auto& [k, s] : o.terms_) add_term(k.first, k.second, s);
    return *this;
  }
  friend ModuleVector operator+(ModuleVector a, const ModuleVector& b) {
    return a += b;
  }
  friend ModuleVector operator-(ModuleVector a, const ModuleVector& b) {
    for (auto& [k, s] : b.terms_) a.add_term(k.first, k.second, -s);
    return a;
  }
  ModuleVector scaled(const Scalar& s) const {
    ModuleVector v;
    if (s.is_zero()) return v;
    for (auto& [k, t] : terms_) v.terms_[k] = t * s;
    return v;
  }
  int max_depth() const {
    int d = -1;
    for (auto& [k, s] : terms_) d = std::max(d, k.first);
    return d;
  }
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto& [k, s] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + s.str() + ")*w[" + std::to_string(k.first) + "] ox s" +
             (k.second == 0 ? "1" : "m1");
    }
    return out;
  }

 private:
  Terms terms_;
};

// action of W_q(sl2) on M (x) S: braid the Clifford factor past the module
// vector, act on the module factor by U_q and on the spin factor by the
// spin representation
inline ModuleVector wq_act(const WqElem& x, const ModuleVector& w, SpinSign sign,
                           const ModuleContext& ctx) {
  ModuleVector out;
  for (auto& [key, sx] : x.terms()) {
    const UqMonomial& u = key.first;
    ClqElem cl = ClqElem::basis(key.second);
    for (auto& [mk, sw] : w.terms()) {
      const auto& [k, spin] = mk;
      ModClTerms braided = sigma_R_cl_mod(cl, k, ctx);
      Scalar pref = sx * sw;
      for (auto& [bk, sb] : braided) {
        // U_q on the module factor
        VermaVector mod = module_act(UqElem::monomial(u),
                                     VermaVector::basis(bk.first), ctx);
        if (mod.is_zero()) continue;
        // Clifford on the spin factor
        SpinVector sv{};
        sv.v[spin] = Scalar::one();
        SpinVector simg = spin_apply(spin_rep(sign, ClqElem::basis(bk.second)), sv);
        if (simg.is_zero()) continue;
        Scalar p2 = pref * sb;
        for (auto& [kk, sm] : mod.terms())
          for (int sp = 0; sp < 2; ++sp)
            if (!simg.v[sp].is_zero())
              out.add_term(kk, sp, p2 * sm * simg.v[sp]);
      }
    }
  }
  return out;
}

// --- Dirac blocks -------------------------------------------------------------

struct BlockMatrix {
  // 2x2 on the ordered basis (w_{lambda-2k} (x) s_1, w_{lambda-2(k-1)} (x) s_-1)
  std::array<Scalar, 4> m;
  friend bool operator==(const BlockMatrix&, const BlockMatrix&) = default;
  Scalar det() const { return m[0] * m[3] - m[1] * m[2]; }
  Scalar trace() const { return m[0] + m[3]; }
};

// the matrix of D_q on N_k; requires k >= 1
inline BlockMatrix dirac_block(int k, SpinSign sign = SpinSign::Minus,
                               const ModuleContext& ctx = {}) {
  if (k < 1) throw std::domain_error("block index must be >= 1");
  WqElem D = dirac();
  BlockMatrix out{};
  ModuleVector b1 = ModuleVector::basis(k, 0);
  ModuleVector b2 = ModuleVector::basis(k - 1, 1);
  ModuleVector i1 = wq_act(D, b1, sign, ctx);
  ModuleVector i2 = wq_act(D, b2, sign, ctx);
  auto fill = [&](const ModuleVector& img, int col) {
    for (auto& [key, s] : img.terms()) {
      if (key == std::pair{k, 0}) out.m[0 + col] = s;
      else if (key == std::pair{k - 1, 1}) out.m[2 + col] = s;
      else throw std::logic_error("block is not invariant");
    }
  };
  fill(i1, 0);
  fill(i2, 1);
  return out;
}

// the tabulated form of the block for M (x) S-
inline BlockMatrix dirac_block_expected(int k) {
  Scalar t = Scalar::t(), c = Scalar::c();
  Scalar den = Scalar::integer(2) * c * (Scalar::q(2) - Scalar::one());
  Scalar a = Scalar::L(-1) * t *
             (Scalar::L(2) * Scalar::q(2) + Scalar::one() -
              Scalar::integer(2) * Scalar::q(2 * k)) /
             den;
  Scalar b = Scalar::q(1 - k) * (Scalar::q(2 * k) - Scalar::one()) * t /
             (c * (Scalar::q(2) - Scalar::one()));
  Scalar d = Scalar::q(k - 1) * Scalar::L(-2) *
             (Scalar::L(2) * Scalar::q(2) - Scalar::q(2 * k)) * t /
             (c * (Scalar::q(2) - Scalar::one()));
  return BlockMatrix{{a, b, d, -a}};
}

// D_q on the singleton w_lambda (x) s_1
inline Scalar dirac_singleton(SpinSign sign = SpinSign::Minus,
                              const ModuleContext& ctx = {}) {
  ModuleVector img = wq_act(dirac(), ModuleVector::basis(0, 0), sign, ctx);
  Scalar out;
  for (auto& [key, s] : img.terms()) {
    if (key != std::pair{0, 0}) throw std::logic_error("singleton not invariant");
    out = s;
  }
  return out;
}

// the scalars C and D_q^2 act by on M_{lambda pi} ( (x) S )
inline Scalar casimir_on_verma() {
  return Scalar::q(1) * (Scalar::L(1) * Scalar::q(2) + Scalar::L(-1)) /
         (Scalar::q(2) - Scalar::one()).pow(2);
}
inline Scalar dsq_on_verma() {
  return (Scalar::q(2) + Scalar::one()) *
         (Scalar::L(1) * Scalar::q(2) - Scalar::L(-1)).pow(2) /
         (Scalar::integer(4) * Scalar::q(1) * Scalar::c() *
          (Scalar::q(2) - Scalar::one()).pow(2));
}

// --- spectra -------------------------------------------------------------------

struct BlockSpectrum {
  Scalar eigenvalue_plus;   // +(t/2c) [lambda+1]_q
  Scalar eigenvalue_minus;  // the negative
  // denominator-cleared eigenvectors as (coefficient of w_{l-2k} (x) s_1,
  // coefficient of w_{l-2(k-1)} (x) s_-1)
  std::array<Scalar, 2> vec_plus;
  std::array<Scalar, 2> vec_minus;
};

inline Scalar dirac_eigenvalue_symbolic() {
  return Scalar::t() * qnumber_symbolic(1) / (Scalar::integer(2) * Scalar::c());
}

// exact eigenpairs of the block N_k; lambda symbolic unless specialized
inline BlockSpectrum spectrum(int k, SpinSign sign = SpinSign::Minus,
                              std::optional<int> lambda = std::nullopt) {
  BlockMatrix blk = dirac_block(k, sign);
  Scalar mu = dirac_eigenvalue_symbolic();
  if (lambda) {
    for (auto& s : blk.m) s = s.specialize_L(*lambda);
    mu = mu.specialize_L(*lambda);
    if (mu.is_zero()) throw std::domain_error("degenerate block; use jordan_form");
  }
  BlockSpectrum out;
  out.eigenvalue_plus = mu;
  out.eigenvalue_minus = -mu;
  // rows of (M - mu) are proportional; the kernel vector (b, mu - a) works
  // whenever b != 0, which holds for k >= 1
  out.vec_plus = {blk.m[1], mu - blk.m[0]};
  out.vec_minus = {blk.m[1], -mu - blk.m[0]};
  return out;
}

// similarity certificate at lambda = -1: returns P with P^-1 M P = (0 1; 0 0)
struct JordanCertificate {
  BlockMatrix block;     // the specialized block
  std::array<Scalar, 4> p;  // columns: (M v, v)
};

inline JordanCertificate jordan_form(int k, SpinSign sign = SpinSign::Minus) {
  BlockMatrix blk = dirac_block(k, sign);
  for (auto& s : blk.m) s = s.specialize_L(-1);
  // nilpotent of rank 1: pick v outside the kernel
  std::array<Scalar, 2> v{};
  if (!blk.m[0].is_zero() || !blk.m[2].is_zero())
    v = {Scalar::one(), Scalar::zero()};
  else
    v = {Scalar::zero(), Scalar::one()};
  std::array<Scalar, 2> mv = {blk.m[0] * v[0] + blk.m[1] * v[1],
                              blk.m[2] * v[0] + blk.m[3] * v[1]};
  JordanCertificate cert;
  cert.block = blk;
  cert.p = {mv[0], v[0], mv[1], v[1]};
  return cert;
}

// --- Dirac cohomology ------------------------------------------------------------

struct CohomologySpec {
  bool generic = true;  // symbolic L
  int lambda = 0;       // used when generic is false
  bool finite = false;  // quotient module V_{lambda pi}; requires lambda >= 0
};

struct CohomologyResult {
  int dimension = 0;
  std::vector<std::string> representatives;
  int blocks_examined = 0;
};

inline CohomologyResult dirac_cohomology(const CohomologySpec& spec, int depth,
                                         SpinSign sign = SpinSign::Minus) {
  if (depth < 1) throw std::domain_error("depth must be >= 1");
  if (spec.finite && (spec.generic || spec.lambda < 0))
    throw std::domain_error("finite module needs lambda in Z_{>=0}");
  ModuleContext ctx;
  if (spec.finite) ctx = ModuleContext{true, spec.lambda};
  auto specialize = [&](Scalar s) {
    return (spec.generic || spec.finite) ? s : s.specialize_L(spec.lambda);
  };

  CohomologyResult out;
  // singleton w_lambda (x) s_1
  Scalar single = specialize(dirac_singleton(sign, ctx));
  if (single.is_zero()) {
    out.dimension += 1;
    out.representatives.push_back("w[0] ox s1");
  }
  int kmax = spec.finite ? spec.lambda : depth;
  for (int k = 1; k <= kmax; ++k) {
    BlockMatrix blk = dirac_block(k, sign, ctx);
    for (auto& s : blk.m) s = specialize(s);
    Scalar det = blk.det();
    if (!det.is_zero()) {
      ++out.blocks_examined;
      continue;  // invertible block: no kernel
    }
    bool zero = blk.m[0].is_zero() && blk.m[1].is_zero() && blk.m[2].is_zero() &&
                blk.m[3].is_zero();
    if (zero) {
      // kernel is the whole block, image zero
      out.dimension += 2;
      out.representatives.push_back("w[" + std::to_string(k) + "] ox s1");
      out.representatives.push_back("w[" + std::to_string(k - 1) + "] ox sm1");
    } else {
      // rank 1 with zero determinant and zero trace: nilpotent, ker = im
      if (!blk.trace().is_zero()) throw std::logic_error("unexpected block trace");
    }
    ++out.blocks_examined;
  }
  // the finite module has the extra one-dimensional piece w_{-lambda} (x) s_-1
  if (spec.finite) {
    ModuleVector extra = ModuleVector::basis(spec.lambda, 1);
    ModuleVector img = wq_act(dirac(), extra, sign, ctx);
    Scalar val;
    for (auto& [key, s] : img.terms()) {
      if (key != std::pair{spec.lambda, 1})
        throw std::logic_error("extra vector not invariant");
      val = s;
    }
    if (val.is_zero()) {
      out.dimension += 1;
      out.representatives.push_back("w[" + std::to_string(spec.lambda) + "] ox sm1");
    }
    ++out.blocks_examined;
  }
  return out;
}

// block-diagonality of D_q up to the requested depth (exact support check)
inline bool dirac_block_diagonal(int depth, SpinSign sign,
                                 const ModuleContext& ctx = {}) {
  WqElem D = dirac();
  // singleton
  ModuleVector img0 = wq_act(D, ModuleVector::basis(0, 0), sign, ctx);
  for (auto& [key, s] : img0.terms())
    if (key != std::pair{0, 0}) return false;
  for (int k = 1; k <= depth; ++k) {
    if (ctx.finite && k > ctx.n + 1) break;
    for (auto& [vec, block] :
         {std::pair{ModuleVector::basis(k, 0), k},
          std::pair{ModuleVector::basis(k - 1, 1), k}}) {
      if (ctx.finite && vec.max_depth() > ctx.n) continue;
      ModuleVector img = wq_act(D, vec, sign, ctx);
      for (auto& [key, s] : img.terms())
        if (!(key == std::pair{block, 0} || key == std::pair{block - 1, 1}))
          return false;
    }
  }
  return true;
}

}  // namespace qweil
