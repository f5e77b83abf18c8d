// Serial reference kernels against the OpenMP kernels on the same inputs.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <utility>

#include "normsearch/kernels.hpp"
#include "normsearch/recurrence.hpp"
#include "normsearch/sunits.hpp"

using namespace normsearch;

namespace {

template <typename F>
double time_best(F&& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int shards = argc > 1 ? std::atoi(argv[1]) : default_shards();
  const int reps = argc > 2 ? std::atoi(argv[2]) : 3;
  const NormFormProblem p(13, 4);

  const auto terms = LinearRecurrence::parse("2,2;0,1").terms_up_to(400);
  const CoordinateIndex pair_index(p, Integer(2) * terms.back(), TrivialSolutions::exclude);
  std::size_t a = 0, b = 0;
  const double ps = time_best([&] { a = kernels::pair_sums_serial(terms, pair_index).size(); }, reps);
  const double pp = time_best([&] { b = kernels::pair_sums_parallel(terms, pair_index, shards).size(); }, reps);
  std::printf("pair_sums     N=400        serial %8.4fs  parallel(%d) %8.4fs  hits %zu/%zu%s\n", ps, shards, pp, a,
              b, a == b ? "" : "  MISMATCH");

  const CoordinateIndex unit_index(p, Integer(100000), TrivialSolutions::exclude);
  for (auto [t, e] : {std::pair{2, 4L}, std::pair{3, 2L}}) {
    const auto range = enumerate_sunits(SPrimeSet({2, 3, 5}), e);
    const std::vector<SUnit> units(range.begin(), range.end());
    std::size_t c = 0, d = 0;
    const double ss = time_best([&] { c = kernels::sunit_sums_serial(units, t, unit_index).hits.size(); }, reps);
    const double sp =
        time_best([&] { d = kernels::sunit_sums_parallel(units, t, unit_index, shards).hits.size(); }, reps);
    std::printf("sunit_sums    t=%d |U|=%zu  serial %8.4fs  parallel(%d) %8.4fs  hits %zu/%zu%s\n", t, units.size(),
                ss, shards, sp, c, d, c == d ? "" : "  MISMATCH");
  }
  return 0;
}
