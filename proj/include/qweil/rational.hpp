// Exact multivariate rational functions over Q in the commuting variables
// q, L, c.  Negative powers of q and L are represented by denominators, so
// RatFunc is the full field Q(q, L, c).  Canonical form: reduced fraction,
// denominator primitive over Z with positive leading coefficient under the
// graded-lex order q > L > c.  Equality of canonical forms is structural.

#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qweil {

using Rat = mpq_class;
using Int = mpz_class;

// ---------------------------------------------------------------------------
// Monomials q^a L^b c^d with nonnegative exponents.

struct Mono {
  int eq = 0;
  int eL = 0;
  int ec = 0;

  int total() const { return eq + eL + ec; }

  friend bool operator==(const Mono& a, const Mono& b) {
    return a.eq == b.eq && a.eL == b.eL && a.ec == b.ec;
  }

  // graded lex, q > L > c
  friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
    if (auto c0 = a.total() <=> b.total(); c0 != 0) return c0;
    if (auto c1 = a.eq <=> b.eq; c1 != 0) return c1;
    if (auto c2 = a.eL <=> b.eL; c2 != 0) return c2;
    return a.ec <=> b.ec;
  }

  Mono operator*(const Mono& o) const { return {eq + o.eq, eL + o.eL, ec + o.ec}; }

  bool divides(const Mono& o) const {
    return eq <= o.eq && eL <= o.eL && ec <= o.ec;
  }
  Mono operator/(const Mono& o) const { return {eq - o.eq, eL - o.eL, ec - o.ec}; }

  int exp(int var) const { return var == 0 ? eq : var == 1 ? eL : ec; }
  void set_exp(int var, int v) { (var == 0 ? eq : var == 1 ? eL : ec) = v; }
};

struct MonoGreater {
  bool operator()(const Mono& a, const Mono& b) const { return a > b; }
};

// ---------------------------------------------------------------------------
// Sparse polynomials over Q.  Terms are kept in descending monomial order,
// so begin() is the leading term.  No zero coefficients are stored.

class Poly {
 public:
  using Terms = std::map<Mono, Rat, MonoGreater>;

  Poly() = default;
  explicit Poly(const Rat& r) {
    if (r != 0) terms_[Mono{}] = r;
  }
  explicit Poly(long n) : Poly(Rat(n)) {}
  static Poly monomial(Mono m, Rat coeff = Rat(1)) {
    Poly p;
    if (coeff != 0) p.terms_[m] = std::move(coeff);
    return p;
  }
  static Poly var_q(int e = 1) { return monomial({e, 0, 0}); }
  static Poly var_L(int e = 1) { return monomial({0, e, 0}); }
  static Poly var_c(int e = 1) { return monomial({0, 0, e}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Mono{} &&
           terms_.begin()->second == 1;
  }
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  const Mono& leading_mono() const { return terms_.begin()->first; }
  const Rat& leading_coeff() const { return terms_.begin()->second; }

  int degree(int var) const {
    int d = 0;
    for (auto& [m, r] : terms_) d = std::max(d, m.exp(var));
    return d;
  }
  bool uses(int var) const {
    for (auto& [m, r] : terms_)
      if (m.exp(var) > 0) return true;
    return false;
  }

  void add_term(const Mono& m, const Rat& r) {
    if (r == 0) return;
    auto [it, fresh] = terms_.emplace(m, r);
    if (!fresh) {
      it->second += r;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (auto& [m, r] : o.terms_) add_term(m, r);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [m, r] : o.terms_) add_term(m, -r);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Rat& r) const {
    Poly p;
    if (r == 0) return p;
    for (auto& [m, co] : terms_) p.terms_[m] = co * r;
    return p;
  }
  Poly shifted(const Mono& m) const {
    Poly p;
    for (auto& [mm, co] : terms_) p.terms_[mm * m] = co;
    return p;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  // Exact division; returns false if b does not divide *this.
  bool try_div(const Poly& b, Poly* quot_out) const {
    if (b.is_zero()) return false;
    Poly rem = *this, quot;
    while (!rem.is_zero()) {
      const Mono& lm = rem.leading_mono();
      if (!b.leading_mono().divides(lm)) return false;
      Mono mq = lm / b.leading_mono();
      Rat cq = rem.leading_coeff() / b.leading_coeff();
      quot.add_term(mq, cq);
      rem -= b.shifted(mq).scaled(cq);
    }
    if (quot_out) *quot_out = std::move(quot);
    return true;
  }

  // Exact division; throws if b does not divide *this.
  Poly div_exact(const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("poly division by zero");
    Poly q;
    if (!try_div(b, &q)) throw std::logic_error("div_exact: not divisible");
    return q;
  }

  // content > 0 such that (*this)/content has coprime integer coefficients.
  Rat rational_content() const {
    if (is_zero()) return Rat(1);
    Int num_gcd = 0, den_lcm = 1;
    for (auto& [m, r] : terms_) {
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
    }
    return Rat(num_gcd, den_lcm);
  }

  // Strip the common monomial factor; returns it.
  Mono strip_monomial() {
    if (is_zero()) return {};
    Mono g = terms_.begin()->first;
    for (auto& [m, r] : terms_) {
      g.eq = std::min(g.eq, m.eq);
      g.eL = std::min(g.eL, m.eL);
      g.ec = std::min(g.ec, m.ec);
    }
    if (g == Mono{}) return g;
    Terms t;
    for (auto& [m, r] : terms_) t[m / g] = r;
    terms_ = std::move(t);
    return g;
  }

  // Substitute an integer value for one variable.
  Poly eval_at(int var, long value) const {
    Poly r;
    for (auto& [m, co] : terms_) {
      Rat v = co;
      for (int i = 0; i < m.exp(var); ++i) v *= value;
      Mono rest = m;
      rest.set_exp(var, 0);
      r.add_term(rest, v);
    }
    return r;
  }

  // Substitutions used by the scalar tower.
  Poly subst_q1() const {
    Poly r;
    for (auto& [m, co] : terms_) r.add_term({0, m.eL, m.ec}, co);
    return r;
  }
  // L -> q^n with n >= 0 (negative n handled by the caller via clearing).
  Poly subst_L_qpow(int n) const {
    Poly r;
    for (auto& [m, co] : terms_) r.add_term({m.eq + n * m.eL, 0, m.ec}, co);
    return r;
  }
  // q -> q^-1, L -> L^-1 up to the monomial factor q^dq L^dL (caller clears).
  Poly reversed(int dq, int dL) const {
    Poly r;
    for (auto& [m, co] : terms_) r.add_term({dq - m.eq, dL - m.eL, m.ec}, co);
    return r;
  }

  std::string str() const;

 private:
  Terms terms_;
};

// ---------------------------------------------------------------------------
// gcd of multivariate polynomials.  Strategy: strip monomial and rational
// content, prove coprimality cheaply through univariate evaluation images
// (the common case when reducing fractions), and fall back to a subresultant
// PRS on the main variable when a genuine common factor exists.

// Normalized so the result is primitive over Z with positive leading coeff.
inline Poly normalize_primitive(Poly p) {
  if (p.is_zero()) return p;
  Rat c = p.rational_content();
  if (p.leading_coeff() < 0) c = -c;
  return p.scaled(1 / c);
}

Poly poly_gcd(const Poly& a, const Poly& b);

namespace detail {

// View of p as a univariate polynomial in variable `var`.
inline std::vector<Poly> univariate_view(const Poly& p, int var) {
  std::vector<Poly> cs(p.is_zero() ? 0 : p.degree(var) + 1);
  for (auto& [m, r] : p.terms()) {
    Mono rest = m;
    int d = m.exp(var);
    rest.set_exp(var, 0);
    cs[d].add_term(rest, r);
  }
  return cs;
}

inline int deg_in(const std::vector<Poly>& cs) {
  for (int d = static_cast<int>(cs.size()) - 1; d >= 0; --d)
    if (!cs[d].is_zero()) return d;
  return -1;
}

inline Poly content_wrt(const Poly& p, int var) {
  Poly g;
  for (const Poly& coeff : univariate_view(p, var)) {
    if (coeff.is_zero()) continue;
    g = poly_gcd(g, coeff);
    if (g.is_one()) break;
  }
  return g;
}

// Evaluate all variables except `keep` at the integer point pt.
inline std::vector<Rat> eval_except(const Poly& p, int keep,
                                    const std::array<long, 3>& pt) {
  std::vector<Rat> cs(p.is_zero() ? 0 : p.degree(keep) + 1);
  for (auto& [m, r] : p.terms()) {
    Rat v = r;
    for (int var = 0; var < 3; ++var) {
      if (var == keep) continue;
      for (int i = 0; i < m.exp(var); ++i) v *= pt[var];
    }
    cs[m.exp(keep)] += v;
  }
  while (!cs.empty() && cs.back() == 0) cs.pop_back();
  return cs;
}

inline void make_primitive(std::vector<Rat>& p) {
  if (p.empty()) return;
  Int num_gcd = 0, den_lcm = 1;
  for (auto& r : p) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), r.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  if (p.back() < 0) c = -c;
  for (auto& r : p) r /= c;
}

// gcd of univariate rational-coefficient polynomials (dense, primitive PRS).
inline std::vector<Rat> gcd_rat_univariate(std::vector<Rat> a, std::vector<Rat> b) {
  make_primitive(a);
  make_primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    // remainder of a by b
    while (a.size() >= b.size()) {
      Rat f = a.back() / b.back();
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    make_primitive(a);
    std::swap(a, b);
  }
  make_primitive(a);
  return a;
}

// True if gcd(a, b) is provably free of `var`: some evaluation point keeping
// both leading coefficients alive yields coprime univariate images.
inline bool provably_free_of(const Poly& a, const Poly& b, int var) {
  static const std::array<std::array<long, 3>, 4> points = {
      std::array<long, 3>{2, 3, 5}, {3, 5, 2}, {5, 2, 7}, {7, 11, 3}};
  int da = a.degree(var), db = b.degree(var);
  for (auto& pt : points) {
    auto ua = eval_except(a, var, pt);
    auto ub = eval_except(b, var, pt);
    if (static_cast<int>(ua.size()) != da + 1 || static_cast<int>(ub.size()) != db + 1)
      continue;  // a leading coefficient vanished at this point
    if (gcd_rat_univariate(ua, ub).size() <= 1) return true;
    return false;  // images share a factor; inconclusive, run the full PRS
  }
  return false;
}

// Pseudo-remainder lc(b)^(da-db+1) * a mod b in variable var.
inline Poly pseudo_rem(const Poly& a, const Poly& b, int var, const Poly& lb, int db) {
  Poly rem = a;
  int e = a.degree(var) - db + 1;
  while (!rem.is_zero()) {
    auto ru = univariate_view(rem, var);
    int dr = deg_in(ru);
    if (dr < db) break;
    Mono xm;
    xm.set_exp(var, dr - db);
    rem = rem * lb - b * ru[dr].shifted(xm);
    --e;
  }
  for (int i = 0; i < e; ++i) rem *= lb;
  return rem;
}

// Leading coefficient of p viewed as univariate in var.
inline Poly lc_wrt(const Poly& p, int var) {
  int d = p.degree(var);
  Poly lc;
  for (auto& [m, r] : p.terms())
    if (m.exp(var) == d) {
      Mono rest = m;
      rest.set_exp(var, 0);
      lc.add_term(rest, r);
    }
  return lc;
}

// Subresultant PRS for primitive (wrt var) inputs with deg a >= deg b >= 1.
inline Poly subresultant_gcd(Poly a, Poly b, int var) {
  Poly g(Rat(1)), h(Rat(1));
  while (true) {
    auto au = univariate_view(a, var), bu = univariate_view(b, var);
    int da = deg_in(au), db = deg_in(bu);
    int delta = da - db;
    Poly r = pseudo_rem(a, b, var, bu[db], db);
    if (r.is_zero()) break;
    if (r.degree(var) == 0 && !r.uses(var)) return Poly(Rat(1));
    a = std::move(b);
    Poly divisor = g;
    for (int i = 0; i < delta; ++i) divisor *= h;
    b = r.div_exact(divisor);
    g = univariate_view(a, var)[deg_in(univariate_view(a, var))];
    if (delta > 0) {
      Poly hp = g;
      for (int i = 1; i < delta; ++i) hp *= g;
      for (int i = 1; i < delta; ++i) hp = hp.div_exact(h);
      h = hp;
    }
    if (b.degree(var) == 0) return Poly(Rat(1));
  }
  return b.div_exact(content_wrt(b, var));
}

namespace interp {

// Dense evaluation/interpolation gcd in the style of Brown's algorithm.
// Inputs are primitive with respect to the main variable x; y is evaluated
// at integer points and the gcd images (one variable fewer, computed by
// recursing into poly_gcd) are interpolated back.  Images are scaled so the
// leading coefficient in x equals gamma = gcd(lc_x a, lc_x b), which the
// true gcd's leading coefficient divides.  The result is only ever returned
// after trial division against both inputs, so luck affects speed, not
// correctness.
inline bool gcd_by_interpolation(const Poly& a, const Poly& b, int x, int y,
                                 Poly* out) {
  Poly gamma = poly_gcd(lc_wrt(a, x), lc_wrt(b, x));
  int bound = std::min(a.degree(y), b.degree(y)) + gamma.degree(y) + 1;

  Poly cand;          // Newton-form accumulation
  Poly nodes(Rat(1)); // prod (y - alpha_i)
  int points = 0, best_dx = 1 << 30;
  int dax = a.degree(x), dbx = b.degree(x);

  for (long alpha = 1; alpha <= bound + 8; ++alpha) {
    Poly ia = a.eval_at(y, alpha), ib = b.eval_at(y, alpha);
    if (ia.degree(x) != dax || ib.degree(x) != dbx) continue;  // lc vanished
    Poly gi = poly_gcd(ia, ib);
    int dx = gi.degree(x);
    if (dx == 0) {
      *out = Poly(Rat(1));
      return true;  // inputs primitive wrt x, so the gcd is trivial
    }
    if (dx > best_dx) continue;  // unlucky point
    if (dx < best_dx) {          // all previous points were unlucky
      best_dx = dx;
      cand = Poly();
      nodes = Poly(Rat(1));
      points = 0;
    }
    Poly gamma_img = gamma.eval_at(y, alpha);
    if (gamma_img.is_zero()) continue;
    Poly scale;
    if (!gamma_img.try_div(lc_wrt(gi, x), &scale)) continue;
    Poly value = gi * scale;

    Poly delta = value - cand.eval_at(y, alpha);
    if (delta.is_zero()) {
      if (points > 0) {
        Poly d = normalize_primitive(cand);
        if (a.try_div(d, nullptr) && b.try_div(d, nullptr)) {
          *out = std::move(d);
          return true;
        }
      }
    } else {
      Rat node_val = nodes.eval_at(y, alpha).constant_value();
      cand += nodes * delta.scaled(1 / node_val);
    }
    Mono ym;
    ym.set_exp(y, 1);
    nodes = nodes * (Poly::monomial(ym) - Poly(Rat(alpha)));
    ++points;

    if (points > bound) {
      Poly d = normalize_primitive(cand);
      if (a.try_div(d, nullptr) && b.try_div(d, nullptr)) {
        *out = std::move(d);
        return true;
      }
      return false;  // degree bound exhausted without a verified result
    }
  }
  return false;
}

}  // namespace interp

}  // namespace detail

inline Poly poly_gcd(const Poly& a_in, const Poly& b_in) {
  if (a_in.is_zero()) return normalize_primitive(b_in);
  if (b_in.is_zero()) return normalize_primitive(a_in);

  // single-term fast path: the gcd is the shared monomial part
  if (a_in.terms().size() == 1 || b_in.terms().size() == 1) {
    Mono g = a_in.leading_mono();
    for (auto& [m, r] : a_in.terms()) {
      g.eq = std::min(g.eq, m.eq);
      g.eL = std::min(g.eL, m.eL);
      g.ec = std::min(g.ec, m.ec);
    }
    Mono h = b_in.leading_mono();
    for (auto& [m, r] : b_in.terms()) {
      h.eq = std::min(h.eq, m.eq);
      h.eL = std::min(h.eL, m.eL);
      h.ec = std::min(h.ec, m.ec);
    }
    return Poly::monomial({std::min(g.eq, h.eq), std::min(g.eL, h.eL),
                           std::min(g.ec, h.ec)});
  }

  Poly a = a_in, b = b_in;
  Mono ma = a.strip_monomial(), mb = b.strip_monomial();
  Mono mg{std::min(ma.eq, mb.eq), std::min(ma.eL, mb.eL), std::min(ma.ec, mb.ec)};
  a = normalize_primitive(std::move(a));
  b = normalize_primitive(std::move(b));

  // variables used by only one side cannot enter the gcd
  for (int v = 0; v < 3; ++v) {
    if (a.uses(v) && !b.uses(v)) a = detail::content_wrt(a, v);
    else if (b.uses(v) && !a.uses(v)) b = detail::content_wrt(b, v);
  }

  std::vector<int> common;
  for (int v = 0; v < 3; ++v)
    if (a.uses(v) && b.uses(v)) common.push_back(v);
  if (common.empty()) return Poly::monomial(mg);

  bool trivial = true;
  for (int v : common)
    if (!detail::provably_free_of(a, b, v)) {
      trivial = false;
      break;
    }
  if (trivial) return Poly::monomial(mg);

  // main variable: smallest worst-case degree keeps the recursion shallow
  int var = common[0];
  int best = 1 << 30;
  for (int v : common) {
    int d = std::max(a.degree(v), b.degree(v));
    if (d < best) {
      best = d;
      var = v;
    }
  }

  Poly conta = detail::content_wrt(a, var);
  Poly contb = detail::content_wrt(b, var);
  Poly cg = poly_gcd(conta, contb);
  Poly pa = a.div_exact(conta);
  Poly pb = b.div_exact(contb);
  if (pa.degree(var) < pb.degree(var)) std::swap(pa, pb);

  Poly core(Rat(1));
  if (pb.degree(var) > 0) {
    bool done = false;
    if (common.size() > 1) {
      // evaluate the other common variable with the largest degree
      int  y = -1, ybest = -1;
      for (int v : common)
        if (v != var) {
          int d = std::max(pa.degree(v), pb.degree(v));
          if (d > ybest) {
            ybest = d;
            y = v;
          }
        }
      done = detail::interp::gcd_by_interpolation(pa, pb, var, y, &core);
    }
    if (!done) core = detail::subresultant_gcd(pa, pb, var);
    // certify maximality: grow the candidate until the cofactors are coprime
    while (!core.is_one()) {
      Poly extra = poly_gcd(pa.div_exact(core), pb.div_exact(core));
      if (extra.is_one()) break;
      core = core * extra;
    }
  }
  return normalize_primitive(cg * core).shifted(mg);
}

// ---------------------------------------------------------------------------
// RatFunc: reduced fraction num/den of Polys.

class RatFunc {
 public:
  RatFunc() : den_(Rat(1)) {}
  explicit RatFunc(const Rat& r) : num_(r), den_(Rat(1)) {}
  explicit RatFunc(long n) : num_(Rat(n)), den_(Rat(1)) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero divisor");
    reduce();
  }
  explicit RatFunc(Poly num) : num_(std::move(num)), den_(Rat(1)) {}

  static RatFunc q(int e = 1) { return pow_var(0, e); }
  static RatFunc L(int e = 1) { return pow_var(1, e); }
  static RatFunc c(int e = 1) { return pow_var(2, e); }
  static RatFunc integer(long n) { return RatFunc(n); }
  static RatFunc rational(long num, long den) { return RatFunc(Rat(num, den)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // num/den with den split into coprime-by-construction blocks, reduced
    // against each block separately to keep the gcds small.
    Poly num, dblock1, dblock2;
    if (a.den_ == b.den_) {
      num = a.num_ + b.num_;
      dblock1 = a.den_;
      dblock2 = Poly(Rat(1));
    } else if (Poly q; a.den_.try_div(b.den_, &q)) {
      num = a.num_ + b.num_ * q;
      dblock1 = a.den_;
      dblock2 = Poly(Rat(1));
    } else if (Poly p; b.den_.try_div(a.den_, &p)) {
      num = a.num_ * p + b.num_;
      dblock1 = b.den_;
      dblock2 = Poly(Rat(1));
    } else {
      Poly g = poly_gcd(a.den_, b.den_);
      Poly db = b.den_.div_exact(g);
      num = a.num_ * db + b.num_ * (a.den_.div_exact(g));
      dblock1 = a.den_;
      dblock2 = std::move(db);
    }
    if (num.is_zero()) return RatFunc();
    Poly h1 = poly_gcd(num, dblock1);
    if (!h1.is_one()) {
      num = num.div_exact(h1);
      dblock1 = dblock1.div_exact(h1);
    }
    Poly h2 = poly_gcd(num, dblock2);
    if (!h2.is_one()) {
      num = num.div_exact(h2);
      dblock2 = dblock2.div_exact(h2);
    }
    return reduced(std::move(num), dblock1 * dblock2);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.is_one() && b.den_.is_one()) {
      RatFunc r;
      r.num_ = a.num_ * b.num_;
      return r;
    }
    // cross-cancellation leaves the product already reduced
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    return reduced((a.num_.div_exact(g1)) * (b.num_.div_exact(g2)),
                   (a.den_.div_exact(g2)) * (b.den_.div_exact(g1)));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
  }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("zero divisor");
    return reduced(den_, num_);
  }

  // num/den already coprime; only normalizes the denominator scale.
  static RatFunc reduced(Poly num, Poly den) {
    RatFunc r;
    if (num.is_zero()) return r;
    Rat cd = den.rational_content();
    if (den.leading_coeff() < 0) cd = -cd;
    r.num_ = num.scaled(1 / cd);
    r.den_ = den.scaled(1 / cd);
    return r;
  }

  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(Rat(1)), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  bool uses_L() const { return num_.uses(1) || den_.uses(1); }

  // q := 1.  The fraction is reduced, so a pole shows as den(1, L, c) == 0.
  RatFunc eval_q1() const {
    if (uses_L()) throw std::domain_error("weight-symbolic value");
    Poly d1 = den_.subst_q1();
    if (d1.is_zero()) throw std::domain_error("singular at q=1");
    return RatFunc(num_.subst_q1(), d1);
  }

  // L := q^n, any integer n.
  RatFunc specialize_L(int n) const {
    if (n >= 0) return RatFunc(num_.subst_L_qpow(n), den_.subst_L_qpow(n));
    int shift = -n * std::max(num_.degree(1), den_.degree(1));
    Poly qs = Poly::var_q(shift);
    // clear the negative q powers produced by L^k -> q^{nk}
    Poly nn, dd;
    for (auto& [m, r] : num_.terms()) nn.add_term({m.eq + n * m.eL + shift, 0, m.ec}, r);
    for (auto& [m, r] : den_.terms()) dd.add_term({m.eq + n * m.eL + shift, 0, m.ec}, r);
    return RatFunc(nn, dd);
  }

  // q -> q^-1, L -> L^-1 (c and rational coefficients fixed).
  RatFunc bar_inverted() const {
    int dq = std::max(num_.degree(0), den_.degree(0));
    int dL = std::max(num_.degree(1), den_.degree(1));
    return RatFunc(num_.reversed(dq, dL), den_.reversed(dq, dL));
  }

  std::string str() const;

 private:
  static RatFunc pow_var(int var, int e) {
    Mono m;
    m.set_exp(var, std::abs(e));
    RatFunc r;
    if (e >= 0) {
      r.num_ = Poly::monomial(m);
    } else {
      r.num_ = Poly(Rat(1));
      r.den_ = Poly::monomial(m);
    }
    return r;
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = Poly(Rat(1));
      return;
    }
    if (!den_.is_one()) {
      if (Poly q; num_.try_div(den_, &q)) {
        num_ = std::move(q);
        den_ = Poly(Rat(1));
      } else {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_one()) {
          num_ = num_.div_exact(g);
          den_ = den_.div_exact(g);
        }
      }
    }
    Rat cd = den_.rational_content();
    if (den_.leading_coeff() < 0) cd = -cd;
    num_ = num_.scaled(1 / cd);
    den_ = den_.scaled(1 / cd);
  }

  Poly num_;
  Poly den_;
};

// ---------------------------------------------------------------------------
// Printing.  Output reparses in the expression grammar of the CLI.

inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  if (r.get_den() == 1)
    os << r.get_num();
  else
    os << r.get_num() << "/" << r.get_den();
  return os.str();
}

inline std::string Poly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, r] : terms_) {
    Rat a = r;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    std::vector<std::string> factors;
    if (a != 1 || m == Mono{}) factors.push_back(rat_str(a));
    auto var = [&](const char* name, int e) {
      if (e == 1)
        factors.push_back(name);
      else if (e > 1)
        factors.push_back(std::string(name) + "^" + std::to_string(e));
    };
    var("q", m.eq);
    var("L", m.eL);
    var("c", m.ec);
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

inline std::string RatFunc::str() const {
  if (is_zero()) return "0";
  if (den_.is_one()) {
    if (num_.terms().size() == 1) return num_.str();
    return "(" + num_.str() + ")";
  }
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qweil
