// Benchmark: times the threaded Schouten bracket and Euler operator
// against their serial reference implementations on representative
// inputs, and checks that both produce identical results.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "hamop/dn.hpp"
#include "hamop/parallel.hpp"
#include "hamop/schouten.hpp"
#include "hamop/varcalc.hpp"

using namespace hamop;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
double time_call(F&& f, int reps) {
  auto t0 = Clock::now();
  for (int i = 0; i < reps; ++i) f();
  return seconds_since(t0) / reps;
}

void report(const std::string& name, double serial, double parallel,
            bool equal) {
  std::printf("%-34s serial %8.4fs   threaded %8.4fs   speedup %5.2fx   %s\n",
              name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0,
              equal ? "results equal" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  int jobs = 0;
  int reps = 3;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--jobs" && i + 1 < argc)
      jobs = std::atoi(argv[++i]);
    else if (a == "--reps" && i + 1 < argc)
      reps = std::atoi(argv[++i]);
    else {
      std::printf("usage: hamop-bench [--jobs N] [--reps N]\n");
      return 2;
    }
  }
  if (reps < 1) reps = 1;

  std::printf("threads for the parallel runs: %s\n",
              jobs > 0 ? std::to_string(jobs).c_str() : "hardware default");

  bool all_equal = true;

  {
    // Third-order WDVV-type operators in three components: the largest
    // bracket the example suite computes symbolically.
    SpaceP sp = Space::make(
        {{"x"}, {"a", "b", "c"}, {"p", "q", "r"}, {}, 13});
    MultiIndex z(1, 0);
    Expr a = Expr::atom(sp, Atom::even_jet(0, z));
    Expr b = Expr::atom(sp, Atom::even_jet(1, z));
    ExprMatrix g(sp, {{b.mul_scalar(-2), a, Expr::constant(sp, 1)},
                      {a, Expr::constant(sp, 1), Expr::constant(sp, 0)},
                      {Expr::constant(sp, 1), Expr::constant(sp, 0),
                       Expr::constant(sp, 0)}});
    MetricField mf = MetricField::hydrodynamic(g);
    CDiffOp a2 = dn3_operator(mf, DnCoords::Hydrodynamic);
    Expr biv = operator_bivector(a2);

    Expr want = Expr::zero(sp);
    double ts = time_call(
        [&] { want = schouten_bracket_serial(biv, biv); }, reps);
    Expr got = Expr::zero(sp);
    double tp = time_call([&] {
      set_jobs(jobs);
      got = schouten_bracket(biv, biv);
      set_jobs(1);
    }, reps);
    bool eq = (want - got).is_zero();
    all_equal = all_equal && eq;
    report("schouten_bracket [A2,A2] wdvv3", ts, tp, eq);

    EulerResult ew, eg;
    double es = time_call([&] { ew = euler_df_serial(want); }, reps);
    double ep = time_call([&] {
      set_jobs(jobs);
      eg = euler_df(want);
      set_jobs(1);
    }, reps);
    bool eeq = true;
    for (std::size_t i = 0; i < ew.even.size(); ++i)
      eeq = eeq && (ew.even[i] - eg.even[i]).is_zero();
    for (std::size_t i = 0; i < ew.odd.size(); ++i)
      eeq = eeq && (ew.odd[i] - eg.odd[i]).is_zero();
    all_equal = all_equal && eeq;
    report("euler_df of that bracket", es, ep, eeq);
  }

  {
    // KdV second structure bracketed with itself.
    SpaceP sp = Space::make({{"x"}, {"u"}, {"p"}, {}, 13});
    Expr u = Expr::atom(sp, Atom::even_jet(0, MultiIndex{0}));
    Expr ux = Expr::atom(sp, Atom::even_jet(0, MultiIndex{1}));
    CDiffOp a2(sp, 1, 1);
    a2.add(0, 0, MultiIndex{3}, Expr::constant(sp, 1));
    a2.add(0, 0, MultiIndex{1}, u + u);
    a2.add(0, 0, MultiIndex{0}, ux);
    Expr biv = operator_bivector(a2);

    Expr want = Expr::zero(sp);
    double ts = time_call(
        [&] { want = schouten_bracket_serial(biv, biv); }, reps);
    Expr got = Expr::zero(sp);
    double tp = time_call([&] {
      set_jobs(jobs);
      got = schouten_bracket(biv, biv);
      set_jobs(1);
    }, reps);
    bool eq = (want - got).is_zero();
    all_equal = all_equal && eq;
    report("schouten_bracket [A2,A2] kdv", ts, tp, eq);
  }

  if (!all_equal) {
    std::printf("FAILURE: threaded and serial implementations disagree\n");
    return 1;
  }
  std::printf("all threaded results match the serial reference\n");
  return 0;
}
