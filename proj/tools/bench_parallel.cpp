// Times the OpenMP sweep kernels against their serial reference
// implementations and checks that both return identical results.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#include "rootbounds/bounds.hpp"
#include "rootbounds/companion.hpp"
#include "rootbounds/theorems.hpp"

namespace {

using namespace rootbounds;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::vector<Polynomial> make_corpus(int degree, int count, std::uint64_t seed) {
  std::vector<Polynomial> out;
  SplitMix64 rng(seed);
  for (int i = 0; i < count; ++i) {
    out.push_back(theorems::sample_polynomial(degree, theorems::Distribution::Uniform, 5.0,
                                              i % 3, rng));
  }
  return out;
}

void report(const char* name, double serial_ms, double parallel_ms, bool equal) {
  std::printf("%-28s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   results %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms,
              equal ? "identical" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;
  }
  const int degree = quick ? 7 : 10;
  const int corpus_size = quick ? 8 : 64;
  bool all_equal = true;

  {
    const auto shapes = enumerate_shapes(degree);
    const auto corpus = make_corpus(degree, corpus_size, 7);
    std::printf("shape sweep: degree %d, %zu shapes, %d polynomials\n", degree,
                shapes.size(), corpus_size);

    auto t0 = Clock::now();
    std::vector<SweepResult> serial;
    for (const auto& p : corpus) serial.push_back(min_n_over_shapes_serial(p, shapes));
    const double serial_ms = ms_since(t0);

    t0 = Clock::now();
    std::vector<SweepResult> parallel;
    for (const auto& p : corpus) parallel.push_back(min_n_over_shapes_parallel(p, shapes));
    const double parallel_ms = ms_since(t0);

    bool equal = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      equal = equal && serial[i].value == parallel[i].value &&
              serial[i].index == parallel[i].index;
    }
    all_equal = all_equal && equal;
    report("min N over shapes", serial_ms, parallel_ms, equal);

    t0 = Clock::now();
    std::vector<SweepResult> inv_serial;
    for (const auto& p : corpus) inv_serial.push_back(min_inverse_n_over_shapes_serial(p, shapes));
    const double inv_serial_ms = ms_since(t0);

    t0 = Clock::now();
    std::vector<SweepResult> inv_parallel;
    for (const auto& p : corpus) {
      inv_parallel.push_back(min_inverse_n_over_shapes_parallel(p, shapes));
    }
    const double inv_parallel_ms = ms_since(t0);

    equal = true;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      equal = equal && inv_serial[i].value == inv_parallel[i].value &&
              inv_serial[i].index == inv_parallel[i].index;
    }
    all_equal = all_equal && equal;
    report("min N over inverses", inv_serial_ms, inv_parallel_ms, equal);
  }

  {
    theorems::CorpusConfig config;
    config.samples_per_degree = quick ? 40 : 200;
    std::printf("property suite: degrees 3..7, %d samples per degree\n",
                config.samples_per_degree);

    config.exec = ExecPolicy::Serial;
    auto t0 = Clock::now();
    const auto serial = theorems::run_all(config);
    const double serial_ms = ms_since(t0);

    config.exec = ExecPolicy::Parallel;
    t0 = Clock::now();
    const auto parallel = theorems::run_all(config);
    const double parallel_ms = ms_since(t0);

    bool equal = serial.size() == parallel.size();
    for (std::size_t i = 0; equal && i < serial.size(); ++i) {
      equal = serial[i].trials == parallel[i].trials &&
              serial[i].violations.size() == parallel[i].violations.size() &&
              serial[i].near_boundary == parallel[i].near_boundary;
    }
    all_equal = all_equal && equal;
    report("run_all", serial_ms, parallel_ms, equal);
  }

  return all_equal ? 0 : 1;
}
