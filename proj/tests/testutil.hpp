// Shared helpers for the unit tests: a small deterministic RNG and
// random generators for expressions over a fixed-seed stream, so every
// property suite replays identically.
#ifndef HAMOP_TESTUTIL_HPP
#define HAMOP_TESTUTIL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hamop/expr.hpp"
#include "hamop/space.hpp"

namespace testutil {

// xorshift64*: tiny, seedable, identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : s_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    s_ ^= s_ >> 12;
    s_ ^= s_ << 25;
    s_ ^= s_ >> 27;
    return s_ * 0x2545f4914f6cdd1dull;
  }

  // Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + (int)below((std::uint64_t)(hi - lo + 1));
  }

  bool chance(int pct) { return (int)below(100) < pct; }

 private:
  std::uint64_t s_;
};

// A random even jet atom of order at most max_ord.
inline hamop::Atom random_even(Rng& rng, const hamop::Space& sp,
                               unsigned max_ord) {
  hamop::MultiIndex mi(sp.n_indep(), 0);
  unsigned ord = (unsigned)rng.below(max_ord + 1);
  for (unsigned k = 0; k < ord; ++k) mi[rng.below(sp.n_indep())]++;
  return hamop::Atom::even_jet((hamop::VarId)rng.below(sp.n_dep()), mi);
}

inline hamop::Atom random_odd(Rng& rng, const hamop::Space& sp,
                              unsigned max_ord) {
  hamop::MultiIndex mi(sp.n_indep(), 0);
  unsigned ord = (unsigned)rng.below(max_ord + 1);
  for (unsigned k = 0; k < ord; ++k) mi[rng.below(sp.n_indep())]++;
  return hamop::Atom::odd_jet((hamop::VarId)rng.below(sp.n_odd()), mi);
}

// A random polynomial-with-odd-factors expression: a sum of up to
// `terms` products of small integer coefficients, even jets, independent
// variables, parameters, and (when with_odd) odd jets.
inline hamop::Expr random_expr(Rng& rng, const hamop::SpaceP& sp,
                               int terms, unsigned max_ord, bool with_odd) {
  using hamop::Atom;
  using hamop::Expr;
  Expr out = Expr::zero(sp);
  int nt = rng.range(1, terms);
  for (int t = 0; t < nt; ++t) {
    Expr term = Expr::constant(sp, hamop::Rat(rng.range(-5, 5)));
    int nf = rng.range(0, 3);
    for (int f = 0; f < nf; ++f) {
      switch (rng.below(4)) {
        case 0:
          term = term * Expr::atom(sp, random_even(rng, *sp, max_ord));
          break;
        case 1:
          term = term * Expr::atom(
                            sp, Atom::indep((hamop::VarId)rng.below(
                                    sp->n_indep())));
          break;
        case 2:
          if (sp->n_param() > 0) {
            term = term * Expr::atom(
                              sp, Atom::param((hamop::VarId)rng.below(
                                      sp->n_param())));
            break;
          }
          [[fallthrough]];
        default:
          term = term * Expr::atom(sp, random_even(rng, *sp, max_ord));
          break;
      }
    }
    if (with_odd && rng.chance(70)) {
      int no = rng.range(1, 2);
      for (int f = 0; f < no; ++f)
        term = term * Expr::atom(sp, random_odd(rng, *sp, max_ord));
    }
    out = out + term;
  }
  return out;
}

// Random expression of homogeneous odd degree d (possibly zero if the
// random coefficients cancel).
inline hamop::Expr random_homogeneous(Rng& rng, const hamop::SpaceP& sp,
                                      int terms, unsigned max_ord,
                                      unsigned degree) {
  using hamop::Expr;
  Expr out = Expr::zero(sp);
  int nt = rng.range(1, terms);
  for (int t = 0; t < nt; ++t) {
    Expr term = random_expr(rng, sp, 1, max_ord, false);
    for (unsigned d = 0; d < degree; ++d)
      term = term * Expr::atom(sp, random_odd(rng, *sp, max_ord));
    out = out + term;
  }
  return out;
}

// The standard scalar test space: one independent variable, one pair
// (u, p), no parameters.
inline hamop::SpaceP scalar_space(unsigned order = 8) {
  return hamop::Space::make({{"x"}, {"u"}, {"p"}, {}, order});
}

// Two components, two independent variables, one parameter.
inline hamop::SpaceP wide_space(unsigned order = 6) {
  return hamop::Space::make({{"x", "t"}, {"u", "v"}, {"p", "q"}, {"c"},
                             order});
}

}  // namespace testutil

#endif  // HAMOP_TESTUTIL_HPP
