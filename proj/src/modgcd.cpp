/*
 * Sparse modular gcd.
 *
 * Description:
 *   Computes multivariate integer polynomial gcds by evaluation over a
 *   word-sized prime field and sparse interpolation. Per-variable
 *   degrees of the gcd are estimated from univariate images; variables
 *   are then introduced one at a time, reusing the monomial support
 *   discovered so far so that each new slice only needs as many
 *   evaluation points as the support has terms (transposed Vandermonde
 *   systems on geometric point sequences). The leading-coefficient
 *   ambiguity is fixed by scaling every image with the gcd of the
 *   inputs' leading coefficients in the main variable, so the value
 *   being interpolated is a true polynomial. Integer coefficients are
 *   recovered by balanced lifting, extended with further primes by
 *   Chinese remaindering until the candidate stabilizes, and finally
 *   verified by exact trial division of both inputs.
 *
 * Notes:
 *   Every random choice comes from a generator seeded by the input
 *   sizes and degrees, so results are reproducible. All failures
 *   (unlucky evaluation points, degree disagreements, support changes,
 *   prime budget exhausted) are reported as inconclusive and the caller
 *   falls back to a slower method; a wrong gcd is never returned
 *   because candidates must divide both inputs exactly.
 */

#include "hamop/detail/modgcd.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace hamop::detail {
namespace {

// Arithmetic mod a prime below 2^31 (products fit in 64 bits).
struct Fp {
  std::uint64_t q;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= q ? s - q : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + q - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % q; }
  std::uint64_t pow(std::uint64_t b, std::uint64_t e) const {
    std::uint64_t r = 1;
    for (b %= q; e; e >>= 1, b = mul(b, b))
      if (e & 1) r = mul(r, b);
    return r;
  }
  std::uint64_t inv(std::uint64_t a) const { return pow(a, q - 2); }
};

const std::vector<std::uint64_t>& prime_table() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> ps;
    mpz_class p = (mpz_class(1) << 31) - 100003;
    while (ps.size() < 16) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      ps.push_back(p.get_ui());
    }
    return ps;
  }();
  return primes;
}

// Deterministic xorshift generator; seeds depend only on the inputs.
struct Rng {
  std::uint64_t s;
  explicit Rng(std::uint64_t seed) : s(seed ^ 0x9e3779b97f4a7c15ull) {
    if (s == 0) s = 1;
    next();
    next();
  }
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + next() % (hi - lo + 1);
  }
};

// Polynomial image mod q. Variables are dense slot indices into a
// shared table; maxdeg records the largest exponent per slot so that
// evaluations can use power tables.
struct MTerm {
  std::uint64_t c;
  std::vector<std::pair<int, unsigned>> f;
};
struct MPoly {
  std::vector<MTerm> ts;
  std::vector<unsigned> maxdeg;
};

MPoly to_mpoly(const Poly& p, const std::map<VarId, int>& slot, const Fp& F,
               std::size_t nslots) {
  MPoly out;
  out.maxdeg.assign(nslots, 0);
  out.ts.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t cm = mpz_fdiv_ui(c.get_num().get_mpz_t(), F.q);
    if (cm == 0) continue;
    MTerm t;
    t.c = cm;
    t.f.reserve(m.f.size());
    for (const auto& [v, e] : m.f) {
      int s = slot.at(v);
      t.f.emplace_back(s, e);
      out.maxdeg[s] = std::max(out.maxdeg[s], e);
    }
    out.ts.push_back(std::move(t));
  }
  return out;
}

using Uni = std::vector<std::uint64_t>;  // univariate, index = degree

void uni_trim(Uni& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

// Monic gcd of univariate polynomials mod q.
Uni uni_gcd(const Fp& F, Uni a, Uni b) {
  uni_trim(a);
  uni_trim(b);
  while (!b.empty()) {
    std::uint64_t lb = F.inv(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t qc = F.mul(a.back(), lb);
      std::size_t off = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[off + i] = F.sub(a[off + i], F.mul(qc, b[i]));
      uni_trim(a);
    }
    a.swap(b);
  }
  if (!a.empty()) {
    std::uint64_t la = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, la);
  }
  return a;
}

std::vector<std::vector<std::uint64_t>> pow_tables(
    const Fp& F, const std::vector<std::uint64_t>& vals,
    const std::vector<unsigned>& maxdeg) {
  std::vector<std::vector<std::uint64_t>> t(vals.size());
  for (std::size_t s = 0; s < vals.size(); ++s) {
    t[s].resize(maxdeg[s] + 1);
    t[s][0] = 1;
    for (unsigned e = 1; e <= maxdeg[s]; ++e) t[s][e] = F.mul(t[s][e - 1], vals[s]);
  }
  return t;
}

// Evaluates every variable except the one in xslot; returns the
// coefficients of the powers of that variable. xslot -1 evaluates all.
Uni eval_except(const Fp& F, const MPoly& p, int xslot,
                const std::vector<std::uint64_t>& vals) {
  auto pw = pow_tables(F, vals, p.maxdeg);
  Uni out;
  for (const auto& t : p.ts) {
    std::uint64_t v = t.c;
    unsigned dx = 0;
    for (const auto& [s, e] : t.f) {
      if (s == xslot) {
        dx = e;
        continue;
      }
      v = F.mul(v, pw[s][e]);
    }
    if (out.size() <= dx) out.resize(dx + 1, 0);
    out[dx] = F.add(out[dx], v);
  }
  uni_trim(out);
  return out;
}

std::uint64_t eval_point(const Fp& F, const MPoly& p,
                         const std::vector<std::uint64_t>& vals) {
  Uni u = eval_except(F, p, -1, vals);
  return u.empty() ? 0 : u[0];
}

// Evaluates a polynomial along a geometric point sequence: term i
// contributes val[i] * ratio[i]^(s-1) at step s, bucketed by the power
// of the symbolic variable. This makes a long run of univariate images
// cost one multiplication per term per step.
struct GeomEval {
  std::vector<std::uint64_t> val, ratio;
  std::vector<unsigned> xdeg;
  std::size_t nx = 0;
  const Fp* F = nullptr;

  void init(const Fp& f, const MPoly& p, int xslot,
            const std::vector<std::uint64_t>& stat,
            const std::vector<std::uint64_t>& dyn) {
    F = &f;
    val.clear();
    ratio.clear();
    xdeg.clear();
    nx = 1;
    auto ps = pow_tables(f, stat, p.maxdeg);
    auto pd = pow_tables(f, dyn, p.maxdeg);
    val.reserve(p.ts.size());
    for (const auto& t : p.ts) {
      std::uint64_t v = t.c, r = 1;
      unsigned dx = 0;
      for (const auto& [s, e] : t.f) {
        if (s == xslot) {
          dx = e;
          continue;
        }
        v = f.mul(v, ps[s][e]);
        r = f.mul(r, pd[s][e]);
      }
      if (v == 0) continue;
      val.push_back(f.mul(v, r));
      ratio.push_back(r);
      xdeg.push_back(dx);
      nx = std::max<std::size_t>(nx, dx + 1);
    }
  }

  Uni next() {
    Uni out(nx, 0);
    for (std::size_t i = 0; i < val.size(); ++i) {
      out[xdeg[i]] = F->add(out[xdeg[i]], val[i]);
      val[i] = F->mul(val[i], ratio[i]);
    }
    uni_trim(out);
    return out;
  }
};

// Solves sum_i c_i * m_i^s = w_{s-1} for s = 1..T, with the m_i nonzero
// and pairwise distinct, via the master polynomial in O(T^2).
bool solve_vander(const Fp& F, const std::vector<std::uint64_t>& m,
                  const std::vector<std::uint64_t>& w,
                  std::vector<std::uint64_t>& out) {
  const std::size_t T = m.size();
  std::vector<std::uint64_t> M(T + 1, 0);
  M[0] = 1;
  for (std::size_t i = 0; i < T; ++i) {
    for (std::size_t j = i + 1; j > 0; --j)
      M[j] = F.sub(M[j - 1], F.mul(m[i], M[j]));
    M[0] = F.mul(F.q - m[i], M[0]);
  }
  out.assign(T, 0);
  std::vector<std::uint64_t> qd(T);
  for (std::size_t i = 0; i < T; ++i) {
    // synthetic division by (z - m_i) and evaluation of the quotient
    qd[T - 1] = M[T];
    for (std::size_t j = T - 1; j > 0; --j)
      qd[j - 1] = F.add(M[j], F.mul(m[i], qd[j]));
    std::uint64_t den = 0, num = 0, mp = 1;
    for (std::size_t t = 0; t < T; ++t) {
      den = F.add(den, F.mul(qd[t], mp));
      mp = F.mul(mp, m[i]);
      num = F.add(num, F.mul(qd[t], w[t]));
    }
    if (den == 0) return false;
    out[i] = F.mul(F.mul(num, F.inv(den)), F.inv(m[i]));
  }
  return true;
}

// Newton interpolation through (xs[t], ys[t]); returns coefficients.
std::vector<std::uint64_t> newton_interp(const Fp& F,
                                         const std::vector<std::uint64_t>& xs,
                                         const std::vector<std::uint64_t>& ys) {
  const std::size_t n = xs.size();
  std::vector<std::uint64_t> dd(ys);
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = F.mul(F.sub(dd[i], dd[i - 1]), F.inv(F.sub(xs[i], xs[i - k])));
      if (i == k) break;
    }
  std::vector<std::uint64_t> p{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<std::uint64_t> np(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      np[j + 1] = F.add(np[j + 1], p[j]);
      np[j] = F.sub(np[j], F.mul(xs[i], p[j]));
    }
    np[0] = F.add(np[0], dd[i]);
    p = std::move(np);
  }
  return p;
}

// Sparse polynomial in slot space with mod-q coefficients; doubles as
// the monomial support carrier between primes.
struct STerm {
  std::vector<std::pair<int, unsigned>> f;  // sorted by slot
  std::uint64_t c;
};
using SPoly = std::vector<STerm>;

// Interpolates the coefficients of the scaled gcd image on a known
// monomial support. Slots in dyn run along a geometric sequence; the
// rest stay at base, with stat_extra overriding selected slots. The
// result is aligned with supp.
bool interp_support(const Fp& F, const MPoly& ma, const MPoly& mb,
                    const MPoly& mg, const SPoly& supp, int xs, int dx,
                    const std::vector<int>& dyn_slots,
                    const std::vector<std::uint64_t>& base,
                    const std::vector<std::pair<int, std::uint64_t>>& stat_extra,
                    Rng& rng, std::vector<std::uint64_t>& coef) {
  const std::size_t ns = base.size();
  std::vector<std::vector<std::size_t>> bucket(dx + 1);
  for (std::size_t i = 0; i < supp.size(); ++i) {
    unsigned d = 0;
    for (const auto& [s, e] : supp[i].f)
      if (s == xs) d = e;
    if (d > unsigned(dx)) return false;
    bucket[d].push_back(i);
  }
  std::vector<std::uint64_t> stat(base);
  for (auto [s, v] : stat_extra) stat[s] = v;

  for (int tries = 0; tries < 4; ++tries) {
    std::vector<std::uint64_t> dynv(ns, 1);
    for (int s : dyn_slots) dynv[s] = rng.uniform(2, F.q - 2);
    std::vector<std::uint64_t> node(supp.size());
    for (std::size_t i = 0; i < supp.size(); ++i) {
      std::uint64_t m = 1;
      for (const auto& [s, e] : supp[i].f)
        if (s != xs) m = F.mul(m, F.pow(dynv[s], e));
      node[i] = m;
    }
    bool distinct = true;
    std::size_t steps = 0;
    for (const auto& bk : bucket) {
      steps = std::max(steps, bk.size());
      std::vector<std::uint64_t> ms;
      ms.reserve(bk.size());
      for (auto i : bk) ms.push_back(node[i]);
      std::sort(ms.begin(), ms.end());
      if (std::adjacent_find(ms.begin(), ms.end()) != ms.end()) {
        distinct = false;
        break;
      }
    }
    if (!distinct) continue;

    std::vector<std::uint64_t> st(stat);
    for (std::size_t s = 0; s < ns; ++s)
      if (dynv[s] != 1) st[s] = 1;
    GeomEval ga, gb, gg;
    ga.init(F, ma, xs, st, dynv);
    gb.init(F, mb, xs, st, dynv);
    gg.init(F, mg, -1, st, dynv);

    std::vector<std::vector<std::uint64_t>> rhs(dx + 1);
    for (int d = 0; d <= dx; ++d) rhs[d].reserve(bucket[d].size());
    bool ok = true;
    for (std::size_t step = 1; step <= steps && ok; ++step) {
      Uni ua = ga.next(), ub = gb.next(), ug = gg.next();
      std::uint64_t gs = ug.empty() ? 0 : ug[0];
      if (gs == 0) {
        ok = false;
        break;
      }
      Uni u = uni_gcd(F, std::move(ua), std::move(ub));
      if (int(u.size()) - 1 != dx) {
        ok = false;
        break;
      }
      std::uint64_t scale = F.mul(gs, F.inv(u.back()));
      for (int d = 0; d <= dx && ok; ++d) {
        std::uint64_t v = d < int(u.size()) ? F.mul(u[d], scale) : 0;
        if (bucket[d].empty()) {
          if (v != 0) ok = false;
        } else if (rhs[d].size() < bucket[d].size()) {
          rhs[d].push_back(v);
        }
      }
    }
    if (!ok) continue;

    coef.assign(supp.size(), 0);
    bool solved = true;
    for (int d = 0; d <= dx && solved; ++d) {
      if (bucket[d].empty()) continue;
      std::vector<std::uint64_t> ms;
      ms.reserve(bucket[d].size());
      for (auto i : bucket[d]) ms.push_back(node[i]);
      std::vector<std::uint64_t> cs;
      if (!solve_vander(F, ms, rhs[d], cs)) {
        solved = false;
        break;
      }
      for (std::size_t k = 0; k < bucket[d].size(); ++k)
        coef[bucket[d][k]] = cs[k];
    }
    if (solved) return true;
  }
  return false;
}

// Probabilistic degree, in the variable at vslot, of the content of p
// with respect to the variable at xslot (gcd of the coefficient
// polynomials of the powers of x).
int content_deg_probe(const Fp& F, const MPoly& p, int xs, int vs,
                      std::size_t ns, Rng& rng) {
  std::vector<std::uint64_t> vals(ns);
  for (auto& v : vals) v = rng.uniform(1, F.q - 1);
  auto pw = pow_tables(F, vals, p.maxdeg);
  std::map<unsigned, Uni> slices;
  for (const auto& t : p.ts) {
    std::uint64_t v = t.c;
    unsigned dx = 0, dv = 0;
    for (const auto& [s, e] : t.f) {
      if (s == xs) {
        dx = e;
        continue;
      }
      if (s == vs) {
        dv = e;
        continue;
      }
      v = F.mul(v, pw[s][e]);
    }
    Uni& u = slices[dx];
    if (u.size() <= dv) u.resize(dv + 1, 0);
    u[dv] = F.add(u[dv], v);
  }
  Uni g;
  bool first = true;
  for (auto& [d, u] : slices) {
    uni_trim(u);
    if (u.empty()) continue;
    g = first ? std::move(u) : uni_gcd(F, std::move(g), std::move(u));
    first = false;
    if (g.size() <= 1) return 0;
  }
  return first ? 0 : int(g.size()) - 1;
}

Poly lift_balanced(const SPoly& supp, const std::vector<mpz_class>& val,
                   const mpz_class& mod, const std::vector<VarId>& vars) {
  std::vector<Poly::Term> ts;
  mpz_class half = mod / 2;
  for (std::size_t i = 0; i < supp.size(); ++i) {
    mpz_class c = val[i];
    if (c > half) c -= mod;
    if (c == 0) continue;
    Monomial m;
    m.f.reserve(supp[i].f.size());
    for (auto [s, e] : supp[i].f) m.f.emplace_back(vars[s], e);
    std::sort(m.f.begin(), m.f.end());
    ts.emplace_back(std::move(m), Rat(c));
  }
  return normalize_terms(std::move(ts));
}

Int int_content_of(const Poly& p) {
  return abs(p.rat_content().first.get_num());
}

bool attempt_gcd(const Poly& A, const Poly& B, const std::vector<VarId>& vars,
                 const std::map<VarId, int>& slot,
                 const std::vector<VarId>& common, int attempt,
                 std::uint64_t seed, Poly& out) {
  const auto& primes = prime_table();
  const std::size_t ns = vars.size();
  const Fp F{primes[attempt % primes.size()]};
  Rng rng(seed);

  MPoly ma = to_mpoly(A, slot, F, ns);
  MPoly mb = to_mpoly(B, slot, F, ns);
  if (ma.ts.empty() || mb.ts.empty()) return false;

  // Estimated degree of the gcd in each common variable (min of two
  // univariate probes; overestimates are harmless, underestimates are
  // caught by the final division check).
  std::map<VarId, int> dv;
  for (VarId v : common) {
    int vs = slot.at(v);
    int best = -1, got = 0;
    for (int it = 0; it < 5 && got < 2; ++it) {
      std::vector<std::uint64_t> vals(ns);
      for (auto& x : vals) x = rng.uniform(1, F.q - 1);
      Uni ua = eval_except(F, ma, vs, vals);
      Uni ub = eval_except(F, mb, vs, vals);
      if (ua.empty() || ub.empty()) continue;
      Uni u = uni_gcd(F, std::move(ua), std::move(ub));
      int d = int(u.size()) - 1;
      best = best < 0 ? d : std::min(best, d);
      ++got;
    }
    if (got < 2) return false;
    dv[v] = best;
  }

  std::vector<VarId> sv;
  for (VarId v : common)
    if (dv[v] > 0) sv.push_back(v);
  if (sv.empty()) {
    out = Poly::constant(1);
    return true;
  }
  VarId x = sv[0];
  for (VarId v : sv)
    if (dv[v] > dv[x]) x = v;
  const int xs = slot.at(x);
  const int dx = dv[x];
  std::vector<VarId> stage;
  for (VarId v : sv)
    if (v != x) stage.push_back(v);

  // Leading-coefficient scale: an integer-content-times-primitive gcd
  // of the leading coefficients in x, a polynomial multiple of the
  // gcd's own leading coefficient.
  Poly gammaz;
  {
    Poly lca = A.coeffs_in(x).back();
    Poly lcb = B.coeffs_in(x).back();
    Int ic;
    mpz_gcd(ic.get_mpz_t(), int_content_of(lca).get_mpz_t(),
            int_content_of(lcb).get_mpz_t());
    gammaz = Poly::gcd(lca, lcb).mul_scalar(Rat(ic));
  }
  MPoly mg = to_mpoly(gammaz, slot, F, ns);
  if (mg.ts.empty()) return false;

  std::vector<std::uint64_t> base(ns);
  for (auto& b : base) b = rng.uniform(1, F.q - 1);

  // Univariate seed of the support at the base point.
  SPoly g;
  {
    Uni ua = eval_except(F, ma, xs, base);
    Uni ub = eval_except(F, mb, xs, base);
    Uni gu = uni_gcd(F, std::move(ua), std::move(ub));
    if (int(gu.size()) - 1 != dx) return false;
    std::uint64_t g0 = eval_point(F, mg, base);
    if (g0 == 0) return false;
    for (unsigned d = 0; d < gu.size(); ++d) {
      if (gu[d] == 0) continue;
      STerm t;
      if (d > 0) t.f.emplace_back(xs, d);
      t.c = F.mul(g0, gu[d]);
      g.push_back(std::move(t));
    }
  }

  // Introduce the remaining variables one at a time. The interpolation
  // target is gamma * g / lc(g), so each stage degree needs the gcd's
  // estimated degree plus gamma's own; too many slices are harmless.
  std::vector<int> dyn;
  for (VarId y : stage) {
    const int ys = slot.at(y);
    const int dy = dv[y] + int(gammaz.degree(y));
    std::vector<std::uint64_t> beta(dy + 1);
    std::set<std::uint64_t> used;
    for (auto& b : beta)
      do b = rng.uniform(1, F.q - 1);
      while (!used.insert(b).second);
    std::vector<std::vector<std::uint64_t>> sc(dy + 1);
    for (int t = 0; t <= dy; ++t)
      if (!interp_support(F, ma, mb, mg, g, xs, dx, dyn, base,
                          {{ys, beta[t]}}, rng, sc[t]))
        return false;
    SPoly gn;
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::vector<std::uint64_t> ysv(dy + 1);
      for (int t = 0; t <= dy; ++t) ysv[t] = sc[t][i];
      std::vector<std::uint64_t> cf = newton_interp(F, beta, ysv);
      for (int k = 0; k < int(cf.size()); ++k) {
        if (cf[k] == 0) continue;
        STerm t2;
        t2.f = g[i].f;
        if (k > 0) {
          auto it = std::lower_bound(
              t2.f.begin(), t2.f.end(), ys,
              [](const std::pair<int, unsigned>& p, int s) { return p.first < s; });
          t2.f.insert(it, {ys, unsigned(k)});
        }
        t2.c = cf[k];
        gn.push_back(std::move(t2));
      }
    }
    if (gn.empty() || gn.size() > 60000) return false;
    g = std::move(gn);
    dyn.push_back(ys);
  }

  // Content of the gcd with respect to x: almost always trivial, so
  // probe cheaply first and compute exactly only when both inputs show
  // a nonconstant content in some shared variable.
  Poly contg = Poly::constant(1);
  {
    bool maybe = false;
    for (VarId v : common) {
      if (v == x) continue;
      int vs = slot.at(v);
      if (content_deg_probe(F, ma, xs, vs, ns, rng) <= 0) continue;
      if (content_deg_probe(F, mb, xs, vs, ns, rng) > 0) {
        maybe = true;
        break;
      }
    }
    if (maybe) contg = Poly::gcd(A.content_in(x), B.content_in(x));
  }

  // Balanced lift, extended by Chinese remaindering until the candidate
  // divides both inputs. Trial division runs on the first prime and
  // afterwards only when the lift has stabilized.
  std::vector<mpz_class> val(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) val[i] = g[i].c;
  mpz_class mod = F.q;
  Poly prev;
  bool first = true;
  for (std::size_t used_primes = 1; used_primes <= 12; ++used_primes) {
    Poly h = lift_balanced(g, val, mod, vars);
    bool stable = !first && h == prev;
    if ((first || stable) && !h.is_zero()) {
      Poly cx = h.content_in(x);
      Poly cand = cx.is_one() ? h : Poly::div_exact(h, cx);
      cand = cand.rat_content().second;
      if (!contg.is_one()) cand = cand * contg;
      Poly qa, qb;
      if (try_divide_exact(A, cand, qa) && try_divide_exact(B, cand, qb)) {
        out = std::move(cand);
        return true;
      }
      if (stable) return false;  // stable but wrong: bad support
    }
    prev = std::move(h);
    first = false;

    std::size_t pi = used_primes;
    if (pi >= primes.size()) return false;
    std::size_t struct_pi = attempt % primes.size();
    if (pi == struct_pi) {
      ++pi;
      if (pi >= primes.size()) return false;
    }
    const Fp F2{primes[pi]};
    MPoly ma2 = to_mpoly(A, slot, F2, ns);
    MPoly mb2 = to_mpoly(B, slot, F2, ns);
    MPoly mg2 = to_mpoly(gammaz, slot, F2, ns);
    if (ma2.ts.empty() || mb2.ts.empty() || mg2.ts.empty()) return false;
    std::vector<std::uint64_t> base2(ns);
    for (auto& b : base2) b = rng.uniform(1, F2.q - 1);
    std::vector<std::uint64_t> c2;
    if (!interp_support(F2, ma2, mb2, mg2, g, xs, dx, dyn, base2, {}, rng, c2))
      return false;
    std::uint64_t mq = mpz_fdiv_ui(mod.get_mpz_t(), F2.q);
    std::uint64_t minv = F2.inv(mq);
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t vm = mpz_fdiv_ui(val[i].get_mpz_t(), F2.q);
      std::uint64_t t = F2.mul(F2.sub(c2[i], vm), minv);
      val[i] += mod * mpz_class(t);
    }
    mod *= F2.q;
  }
  return false;
}

}  // namespace

bool modular_gcd(const Poly& A, const Poly& B, Poly& out) {
  std::set<VarId> sa, sb;
  A.collect_vars(sa);
  B.collect_vars(sb);
  std::vector<VarId> vars;
  for (VarId v : sa) vars.push_back(v);
  for (VarId v : sb)
    if (!sa.count(v)) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  std::map<VarId, int> slot;
  for (std::size_t i = 0; i < vars.size(); ++i) slot[vars[i]] = int(i);
  std::vector<VarId> common;
  for (VarId v : sa)
    if (sb.count(v)) common.push_back(v);
  if (common.empty()) return false;

  std::uint64_t seed = 0x51ab5edull;
  seed = seed * 1000003 + A.size();
  seed = seed * 1000003 + B.size();
  for (VarId v : common)
    seed = seed * 1000003 + (A.degree(v) * 131 + B.degree(v));

  for (int attempt = 0; attempt < 4; ++attempt)
    if (attempt_gcd(A, B, vars, slot, common, attempt, seed + attempt * 7919,
                    out))
      return true;
  return false;
}

}  // namespace hamop::detail
