#include "hamop/poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "hamop/detail/modgcd.hpp"

namespace hamop {

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : f) d += e;
  return d;
}

unsigned Monomial::degree(VarId v) const {
  for (const auto& [w, e] : f)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  r.f.reserve(f.size() + o.f.size());
  std::size_t i = 0, j = 0;
  while (i < f.size() && j < o.f.size()) {
    if (f[i].first < o.f[j].first) {
      r.f.push_back(f[i++]);
    } else if (f[i].first > o.f[j].first) {
      r.f.push_back(o.f[j++]);
    } else {
      r.f.emplace_back(f[i].first, f[i].second + o.f[j].second);
      ++i, ++j;
    }
  }
  r.f.insert(r.f.end(), f.begin() + i, f.end());
  r.f.insert(r.f.end(), o.f.begin() + j, o.f.end());
  return r;
}

bool Monomial::divide(const Monomial& o, Monomial& out) const {
  out.f.clear();
  std::size_t i = 0, j = 0;
  while (j < o.f.size()) {
    if (i == f.size() || f[i].first > o.f[j].first) return false;
    if (f[i].first < o.f[j].first) {
      out.f.push_back(f[i++]);
      continue;
    }
    if (f[i].second < o.f[j].second) return false;
    if (f[i].second > o.f[j].second)
      out.f.emplace_back(f[i].first, f[i].second - o.f[j].second);
    ++i, ++j;
  }
  out.f.insert(out.f.end(), f.begin() + i, f.end());
  return true;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.f.size() && j < b.f.size()) {
    if (a.f[i].first < b.f[j].first) {
      ++i;
    } else if (a.f[i].first > b.f[j].first) {
      ++j;
    } else {
      r.f.emplace_back(a.f[i].first, std::min(a.f[i].second, b.f[j].second));
      ++i, ++j;
    }
  }
  return r;
}

Monomial Monomial::var(VarId v, unsigned e) {
  Monomial m;
  if (e > 0) m.f.emplace_back(v, e);
  return m;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  // Walk the sorted factor lists. The first position where the exponent
  // vectors differ decides; a factor on a lower variable id beats any
  // tail on higher ids.
  std::size_t i = 0, j = 0;
  while (i < a.f.size() && j < b.f.size()) {
    if (a.f[i].first < b.f[j].first) return 1;
    if (a.f[i].first > b.f[j].first) return -1;
    if (a.f[i].second != b.f[j].second)
      return a.f[i].second > b.f[j].second ? 1 : -1;
    ++i, ++j;
  }
  if (i < a.f.size()) return 1;
  if (j < b.f.size()) return -1;
  return 0;
}

Poly normalize_terms(std::vector<Poly::Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const Poly::Term& a, const Poly::Term& b) {
    return Monomial::cmp(a.first, b.first) > 0;
  });
  std::vector<Poly::Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (sgn(out.back().second) == 0) out.pop_back();
    } else if (sgn(t.second) != 0) {
      out.push_back(std::move(t));
    }
  }
  Poly p;
  // Direct member access via friendship: out is sorted and zero-free.
  p = Poly::from_sorted(std::move(out));
  return p;
}

Poly Poly::from_sorted(std::vector<Term> ts) {
  Poly p;
  p.ts_ = std::move(ts);
  return p;
}

Poly Poly::constant(const Rat& c) {
  Poly p;
  if (sgn(c) != 0) p.ts_.emplace_back(Monomial{}, c);
  return p;
}

Poly Poly::variable(VarId v, unsigned e) {
  Poly p;
  p.ts_.emplace_back(Monomial::var(v, e), Rat(1));
  return p;
}

Poly Poly::term(const Monomial& m, const Rat& c) {
  Poly p;
  if (sgn(c) != 0) p.ts_.emplace_back(m, c);
  return p;
}

bool Poly::is_constant() const {
  return ts_.empty() || (ts_.size() == 1 && ts_[0].first.is_one());
}

bool Poly::is_one() const {
  return ts_.size() == 1 && ts_[0].first.is_one() && ts_[0].second == 1;
}

Rat Poly::constant_value() const {
  if (ts_.empty()) return Rat(0);
  assert(is_constant());
  return ts_[0].second;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& t : r.ts_) t.second = -t.second;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Term> out;
  out.reserve(ts_.size() + o.ts_.size());
  std::size_t i = 0, j = 0;
  while (i < ts_.size() && j < o.ts_.size()) {
    int c = Monomial::cmp(ts_[i].first, o.ts_[j].first);
    if (c > 0) {
      out.push_back(ts_[i++]);
    } else if (c < 0) {
      out.push_back(o.ts_[j++]);
    } else {
      Rat s = ts_[i].second + o.ts_[j].second;
      if (sgn(s) != 0) out.emplace_back(ts_[i].first, std::move(s));
      ++i, ++j;
    }
  }
  out.insert(out.end(), ts_.begin() + i, ts_.end());
  out.insert(out.end(), o.ts_.begin() + j, o.ts_.end());
  return from_sorted(std::move(out));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (ts_.size() == 1) return o.mul_monomial(ts_[0].first, ts_[0].second);
  if (o.ts_.size() == 1) return mul_monomial(o.ts_[0].first, o.ts_[0].second);
  std::vector<Term> acc;
  acc.reserve(ts_.size() * o.ts_.size());
  for (const auto& a : ts_)
    for (const auto& b : o.ts_)
      acc.emplace_back(a.first.times(b.first), a.second * b.second);
  return normalize_terms(std::move(acc));
}

Poly Poly::mul_scalar(const Rat& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r(*this);
  for (auto& t : r.ts_) t.second *= c;
  return r;
}

Poly Poly::mul_monomial(const Monomial& m, const Rat& c) const {
  if (sgn(c) == 0) return Poly();
  Poly r;
  r.ts_.reserve(ts_.size());
  for (const auto& t : ts_)
    r.ts_.emplace_back(t.first.times(m), t.second * c);
  return r;  // multiplying by a fixed monomial preserves the term order
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(1);
  Poly base(*this);
  while (e > 0) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return r;
}

Poly Poly::derivative(VarId v) const {
  std::vector<Term> out;
  for (const auto& [m, c] : ts_) {
    unsigned e = m.degree(v);
    if (e == 0) continue;
    Monomial dm;
    for (const auto& [w, k] : m.f) {
      if (w == v) {
        if (k > 1) dm.f.emplace_back(w, k - 1);
      } else {
        dm.f.emplace_back(w, k);
      }
    }
    out.emplace_back(std::move(dm), c * e);
  }
  return normalize_terms(std::move(out));
}

Poly Poly::derivation(const std::function<DerivImage(VarId)>& image) const {
  std::vector<Term> out;
  for (const auto& [m, c] : ts_) {
    for (std::size_t i = 0; i < m.f.size(); ++i) {
      const auto& [v, e] = m.f[i];
      DerivImage im = image(v);
      if (im.kind == DerivImage::Zero) continue;
      Monomial dm;
      dm.f.reserve(m.f.size() + 1);
      for (std::size_t j = 0; j < m.f.size(); ++j) {
        if (j == i) {
          if (e > 1) dm.f.emplace_back(v, e - 1);
        } else {
          dm.f.push_back(m.f[j]);
        }
      }
      if (im.kind == DerivImage::Var) dm = dm.times(Monomial::var(im.v));
      out.emplace_back(std::move(dm), c * e);
    }
  }
  return normalize_terms(std::move(out));
}

unsigned Poly::degree(VarId v) const {
  unsigned d = 0;
  for (const auto& t : ts_) d = std::max(d, t.first.degree(v));
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : ts_) d = std::max(d, t.first.total_degree());
  return d;
}

bool Poly::contains(VarId v) const {
  for (const auto& t : ts_)
    if (t.first.contains(v)) return true;
  return false;
}

void Poly::collect_vars(std::set<VarId>& out) const {
  for (const auto& t : ts_)
    for (const auto& [v, e] : t.first.f) out.insert(v);
}

Monomial Poly::monomial_content() const {
  if (ts_.empty()) return Monomial{};
  Monomial g = ts_[0].first;
  for (std::size_t i = 1; i < ts_.size() && !g.is_one(); ++i)
    g = Monomial::gcd(g, ts_[i].first);
  return g;
}

std::pair<Rat, Poly> Poly::rat_content() const {
  if (ts_.empty()) return {Rat(1), Poly()};
  Int num_gcd = 0, den_lcm = 1;
  for (const auto& t : ts_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.second.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.second.get_den().get_mpz_t());
  }
  Rat c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(ts_[0].second) < 0) c = -c;
  Poly p(*this);
  for (auto& t : p.ts_) {
    t.second /= c;
    assert(t.second.get_den() == 1);
  }
  return {c, p};
}

std::vector<Poly> Poly::coeffs_in(VarId v) const {
  std::vector<Poly> cs(degree(v) + 1);
  std::vector<std::vector<Term>> buckets(cs.size());
  for (const auto& [m, c] : ts_) {
    unsigned e = m.degree(v);
    Monomial rest;
    for (const auto& [w, k] : m.f)
      if (w != v) rest.f.emplace_back(w, k);
    buckets[e].emplace_back(std::move(rest), c);
  }
  for (std::size_t e = 0; e < cs.size(); ++e)
    cs[e] = from_sorted(std::move(buckets[e]));  // order is preserved
  return cs;
}

Poly Poly::from_coeffs_in(VarId v, const std::vector<Poly>& cs) {
  std::vector<Term> acc;
  for (std::size_t e = 0; e < cs.size(); ++e) {
    Monomial xe = Monomial::var(v, static_cast<unsigned>(e));
    for (const auto& [m, c] : cs[e].ts_) acc.emplace_back(m.times(xe), c);
  }
  return normalize_terms(std::move(acc));
}

Poly Poly::content_in(VarId v) const {
  Poly g;
  for (const Poly& c : coeffs_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.rat_content().second : gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

namespace {

// Attempts the exact division a / b; returns false when b does not
// divide a. Shared by div_exact and the heuristic gcd verification.
bool try_divide(const Poly& a, const Poly& b, Poly& q) {
  if (a.is_zero()) {
    q = Poly();
    return true;
  }
  if (b.is_one()) {
    q = a;
    return true;
  }
  if (b.is_constant())
    return q = a.mul_scalar(Rat(1) / b.constant_value()), true;
  std::vector<Poly::Term> acc;
  Poly r = a;
  const auto& [mb, cb] = b.leading();
  while (!r.is_zero()) {
    const auto& [mr, cr] = r.leading();
    Monomial m;
    if (!mr.divide(mb, m)) return false;
    Rat c = cr / cb;
    acc.emplace_back(m, c);
    r -= b.mul_monomial(m, c);
  }
  q = normalize_terms(std::move(acc));
  return true;
}

// Largest absolute value of a coefficient numerator. The callers only
// use this on integer polynomials, where it is the max-norm.
Int int_norm(const Poly& p) {
  Int best = 0;
  for (const auto& [m, c] : p.terms()) {
    Int a = abs(c.get_num());
    if (a > best) best = std::move(a);
  }
  return best;
}

// Absolute integer content of an integer polynomial.
Int int_content(const Poly& p) {
  return abs(p.rat_content().first.get_num());
}

// Substitutes the integer xi for the variable v.
Poly eval_var_int(const Poly& p, VarId v, const Int& xi) {
  std::vector<Poly::Term> ts;
  ts.reserve(p.size());
  std::vector<Rat> powers{Rat(1)};
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.degree(v);
    if (e == 0) {
      ts.emplace_back(m, c);
      continue;
    }
    while (powers.size() <= e) powers.push_back(powers.back() * Rat(xi));
    Monomial rest;
    m.divide(Monomial::var(v, e), rest);
    ts.emplace_back(std::move(rest), c * powers[e]);
  }
  return normalize_terms(std::move(ts));
}

// One step of balanced xi-adic expansion: splits g into digit + xi*rest
// with the digit coefficients in [-xi/2, xi/2).
void xadic_step(const Poly& g, const Int& xi, Poly& digit, Poly& rest) {
  std::vector<Poly::Term> dts, rts;
  for (const auto& [m, c] : g.terms()) {
    const Int& n = c.get_num();
    Int r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), xi.get_mpz_t());
    if (r * 2 >= xi) r -= xi;
    if (r != 0) dts.emplace_back(m, Rat(r));
    Int q = n - r;
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), xi.get_mpz_t());
    if (q != 0) rts.emplace_back(m, Rat(q));
  }
  digit = normalize_terms(std::move(dts));
  rest = normalize_terms(std::move(rts));
}

/*
 * Heuristic gcd of integer polynomials.
 *
 * Description:
 *   Maps the problem to big-integer gcds by evaluating one variable at
 *   an integer point larger than twice the smaller max-norm, recursing
 *   on the images, and lifting the image gcd back through a balanced
 *   xi-adic expansion. A candidate is accepted only if it divides both
 *   inputs, so a false return (bad point, size guard) is merely
 *   inconclusive and the caller falls back to another method.
 *
 * Notes:
 *   Returns the full gcd including integer content. The content must
 *   survive the recursion: the image of the gcd under evaluation picks
 *   up an integer content that encodes the evaluated variable's
 *   contribution, and the lift one level up reconstructs that variable
 *   from it. The primitive part is therefore taken only of the lifted
 *   candidate at each level, never of the value passed upward.
 *
 *   The evaluation point grows by the traditional factor 73794/27011
 *   between attempts to avoid hitting related unlucky points.
 */
bool heu_gcd(const Poly& a, const Poly& b, Poly& out, int depth) {
  if (depth > 64) return false;
  if (a.is_constant() && b.is_constant()) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.constant_value().get_num().get_mpz_t(),
            b.constant_value().get_num().get_mpz_t());
    out = Poly::constant(Rat(g));
    return true;
  }
  if (a.is_constant() || b.is_constant()) {
    const Poly& cst = a.is_constant() ? a : b;
    const Poly& oth = a.is_constant() ? b : a;
    Int c = int_content(oth), g;
    mpz_gcd(g.get_mpz_t(), c.get_mpz_t(),
            cst.constant_value().get_num().get_mpz_t());
    out = Poly::constant(Rat(g));
    return true;
  }
  Int cg;
  mpz_gcd(cg.get_mpz_t(), int_content(a).get_mpz_t(),
          int_content(b).get_mpz_t());
  Poly pa = a.rat_content().second;
  Poly pb = b.rat_content().second;
  std::set<VarId> va, vb;
  pa.collect_vars(va);
  pb.collect_vars(vb);
  std::vector<VarId> common;
  for (VarId v : va)
    if (vb.count(v)) common.push_back(v);
  if (common.empty()) {
    out = Poly::constant(Rat(cg));
    return true;
  }
  VarId x = common[0];
  unsigned best = pa.degree(x) + pb.degree(x);
  for (VarId v : common) {
    unsigned d = pa.degree(v) + pb.degree(v);
    if (d < best) best = d, x = v;
  }
  unsigned degx = std::max(pa.degree(x), pb.degree(x));

  Int xi = 2 * std::min(int_norm(pa), int_norm(pb)) + 2;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (degx + 1) > (1u << 20))
      return false;
    Poly ia = eval_var_int(pa, x, xi);
    Poly ib = eval_var_int(pb, x, xi);
    Poly gamma;
    if (!ia.is_zero() && !ib.is_zero() && heu_gcd(ia, ib, gamma, depth + 1)) {
      std::vector<Poly> digits;
      Poly cur = std::move(gamma);
      while (!cur.is_zero() && digits.size() <= 2 * degx + 2) {
        Poly digit, rest;
        xadic_step(cur, xi, digit, rest);
        digits.push_back(std::move(digit));
        cur = std::move(rest);
      }
      if (cur.is_zero()) {
        Poly cand = Poly::from_coeffs_in(x, digits);
        if (!cand.is_zero()) {
          cand = cand.rat_content().second;
          Poly qa, qb;
          if (try_divide(pa, cand, qa) && try_divide(pb, cand, qb)) {
            out = cand.mul_scalar(Rat(cg));
            return true;
          }
        }
      }
    }
    xi *= 73794;
    xi /= 27011;
  }
  return false;
}

// Pseudo-remainder of a by b with respect to v, working on coefficient
// lists indexed by the power of v. Returns the coefficient list of a
// polynomial proportional to the true remainder; for gcd use only the
// primitive part matters, so proportionality factors are irrelevant.
std::vector<Poly> prem_univar(std::vector<Poly> a, const std::vector<Poly>& b) {
  auto trim = [](std::vector<Poly>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  trim(a);
  const Poly& lcb = b.back();
  while (a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Poly lca = a.back();
    std::vector<Poly> next(a.size() - 1);
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      next[i] = a[i] * lcb;
      if (i >= shift) next[i] -= lca * b[i - shift];
    }
    a = std::move(next);
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

/*
 * Primitive gcd of multivariate polynomials.
 *
 * Description:
 *   Rational and monomial contents are stripped first. The remaining
 *   parts go through the evaluation-based heuristic, which resolves
 *   most small calls; inputs with large coefficients or many variables
 *   go to the sparse modular gcd. Only when both are inconclusive do we
 *   fall back to the classical primitive Euclidean algorithm: the
 *   inputs are made primitive with respect to a chosen main variable
 *   and reduced by a pseudo-remainder sequence, taking the primitive
 *   part after every step, with contents combined by recursion in fewer
 *   variables.
 *
 * Notes:
 *   Keeping remainders primitive bounds coefficient growth well enough
 *   for the sizes this library meets; the denominators produced by the
 *   geometric examples are close to monomials, so the monomial content
 *   fast path carries most calls.
 */
Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.rat_content().second;
  if (b.is_zero()) return a.rat_content().second;
  Poly pa = a.rat_content().second;
  Poly pb = b.rat_content().second;
  if (pa == pb) return pa;

  Monomial ma = pa.monomial_content();
  Monomial mb = pb.monomial_content();
  Monomial mg = Monomial::gcd(ma, mb);
  if (!ma.is_one()) {
    Poly q;
    std::vector<Term> ts;
    for (const auto& [m, c] : pa.ts_) {
      Monomial d;
      m.divide(ma, d);
      ts.emplace_back(std::move(d), c);
    }
    pa = from_sorted(std::move(ts));
  }
  if (!mb.is_one()) {
    std::vector<Term> ts;
    for (const auto& [m, c] : pb.ts_) {
      Monomial d;
      m.divide(mb, d);
      ts.emplace_back(std::move(d), c);
    }
    pb = from_sorted(std::move(ts));
  }
  Poly shared = Poly::term(mg, Rat(1));
  if (pa.is_constant() || pb.is_constant()) return shared;

  std::set<VarId> va, vb;
  pa.collect_vars(va);
  pb.collect_vars(vb);
  std::vector<VarId> common;
  for (VarId v : va)
    if (vb.count(v)) common.push_back(v);
  if (common.empty()) return shared;

  {
    Poly g;
    if (heu_gcd(pa, pb, g, 0)) {
      if (g.is_constant()) return shared;
      return shared * g;
    }
    if (detail::modular_gcd(pa, pb, g)) {
      if (g.is_constant()) return shared;
      return shared * g;
    }
  }

  VarId x = common[0];
  unsigned best = pa.degree(x) + pb.degree(x);
  for (VarId v : common) {
    unsigned d = pa.degree(v) + pb.degree(v);
    if (d < best) best = d, x = v;
  }

  Poly ca = pa.content_in(x);
  Poly cb = pb.content_in(x);
  Poly cg = gcd(ca, cb);
  Poly u = div_exact(pa, ca);
  Poly v = div_exact(pb, cb);

  std::vector<Poly> cu = u.coeffs_in(x);
  std::vector<Poly> cv = v.coeffs_in(x);
  if (cu.size() < cv.size()) cu.swap(cv);
  Poly g;
  while (true) {
    std::vector<Poly> r = prem_univar(cu, cv);
    if (r.empty()) {
      g = from_coeffs_in(x, cv);
      break;
    }
    if (r.size() == 1) {
      g = Poly::constant(1);
      break;
    }
    Poly rp = from_coeffs_in(x, r);
    rp = div_exact(rp, rp.content_in(x)).rat_content().second;
    cu = std::move(cv);
    cv = rp.coeffs_in(x);
  }
  Poly result = (shared * cg * g).rat_content().second;
  return result;
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::logic_error("div_exact by zero polynomial");
  Poly q;
  if (!try_divide(a, b, q))
    throw std::logic_error("div_exact: division is not exact");
  return q;
}

namespace detail {

bool try_divide_exact(const Poly& a, const Poly& b, Poly& q) {
  return try_divide(a, b, q);
}

}  // namespace detail

}  // namespace hamop
