// Benchmark of the OpenMP kernels against their serial reference
// implementations.  Each pair must agree exactly; the run aborts if not.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "coo/eval.hpp"
#include "coo/marginals.hpp"
#include "coo/reachability.hpp"

using namespace coo;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point start) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-24s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   identical %s\n",
              name, serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "yes" : "NO");
  if (!identical) {
    std::fprintf(stderr, "%s: parallel kernel diverged from the serial reference\n", name);
    std::exit(1);
  }
}

}  // namespace

int main(int argc, char** argv) {
  int n = 10;
  std::uint64_t samples = 2000000;
  std::uint64_t seed = 1;
  int threads = 0;
  for (int a = 1; a < argc; ++a) {
    const std::string arg = argv[a];
    auto next = [&]() -> std::string {
      if (a + 1 >= argc) {
        std::fprintf(stderr, "missing value for %s\n", arg.c_str());
        std::exit(2);
      }
      return argv[++a];
    };
    if (arg == "--n") n = std::stoi(next());
    else if (arg == "--samples") samples = std::stoull(next());
    else if (arg == "--seed") seed = std::stoull(next());
    else if (arg == "--threads") threads = std::stoi(next());
    else {
      std::fprintf(stderr, "usage: %s [--n N] [--samples S] [--seed K] [--threads T]\n", argv[0]);
      return 2;
    }
  }
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
  std::printf("OpenMP: max %d threads\n", omp_get_max_threads());
#else
  (void)threads;
  std::printf("OpenMP: not enabled; both columns run serially\n");
#endif
  std::printf("n=%d samples=%llu seed=%llu\n\n", n, (unsigned long long)samples,
              (unsigned long long)seed);

  {
    auto t0 = clock_type::now();
    const MarginalTable serial = coo_marginals_mc_serial(n, Variant::R, samples, seed);
    const double serial_ms = ms_since(t0);
    t0 = clock_type::now();
    const MarginalTable parallel = coo_marginals_mc(n, Variant::R, samples, seed);
    const double parallel_ms = ms_since(t0);
    bool identical = true;
    for (int i = 1; i <= n && identical; ++i) {
      for (int j = i; j <= n; ++j) {
        if (serial.at(i, j) != parallel.at(i, j)) {
          identical = false;
          break;
        }
      }
    }
    report("marginals-mc", serial_ms, parallel_ms, identical);
  }

  {
    // Right-comb gold corpus of mixed lengths.
    std::vector<GoldTree> gold;
    for (int len = 3, s = 0; s < 64; ++s, len = 3 + (len - 2) % 10) {
      BinaryTree comb = BinaryTree::leaf();
      for (int i = 1; i < len; ++i) comb = BinaryTree::branch(BinaryTree::leaf(), comb);
      gold.push_back(gold_from_binary(comb));
    }
    const EvalConfig cfg;
    const std::uint64_t per_sentence = std::max<std::uint64_t>(1, samples / 2000);
    auto t0 = clock_type::now();
    const McF1Result serial =
        expected_f1_mc_serial(gold, TreeDistribution::right_skew, per_sentence, 4, seed, cfg);
    const double serial_ms = ms_since(t0);
    t0 = clock_type::now();
    const McF1Result parallel =
        expected_f1_mc(gold, TreeDistribution::right_skew, per_sentence, 4, seed, cfg);
    const double parallel_ms = ms_since(t0);
    report("expected-f1-mc", serial_ms, parallel_ms,
           serial.replicate_scores == parallel.replicate_scores);
  }

  {
    const int image_n = std::min(n, 10);
    auto t0 = clock_type::now();
    const auto serial = enumerate_reachable_bruteforce(image_n, Variant::R, false);
    const double serial_ms = ms_since(t0);
    t0 = clock_type::now();
    const auto parallel = enumerate_reachable_bruteforce(image_n, Variant::R, true);
    const double parallel_ms = ms_since(t0);
    bool identical = serial.size() == parallel.size();
    for (std::size_t i = 0; identical && i < serial.size(); ++i) {
      identical = serial[i] == parallel[i];
    }
    report("reachable-image", serial_ms, parallel_ms, identical);
  }

  return 0;
}
