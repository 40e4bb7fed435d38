// Runs every acceptance criterion at its default bounds and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "ordalg/suites.hpp"

using namespace ordalg;

namespace {

  struct Criterion {
    int                   number;
    std::string           title;
    std::vector<char const*> suites;
    std::optional<double> time_limit_s;
  };

  std::vector<Criterion> const kCriteria = {
      {1, "posetal reflection", {"posetal-reflection"}, 60.0},
      {2, "coinserter universality", {"coinserter-universal"}, 300.0},
      {3, "subkernel pairs are subcongruences", {"subkernel-subcongruence"}, std::nullopt},
      {4, "effectivity roundtrip", {"effectivity"}, std::nullopt},
      {5, "subregular epimorphisms are surjections", {"subregular-surjective"}, std::nullopt},
      {6, "factorization system", {"factorization"}, std::nullopt},
      {7, "pullback stability", {"pullback-stability"}, std::nullopt},
      {8, "tensor adjunction", {"tensor-adjunction"}, 120.0},
      {9, "support bound", {"support-bound"}, std::nullopt},
      {10, "hom-algebra", {"hom-algebra"}, std::nullopt},
      {11, "classical mirror", {"classical"}, std::nullopt},
      {12, "Birkhoff closure", {"birkhoff"}, std::nullopt},
  };

}  // namespace

int main() {
  int failures = 0;
  for (auto const& c : kCriteria) {
    bool        ok      = true;
    std::size_t checked = 0;
    std::string detail;
    auto const  start   = std::chrono::steady_clock::now();
    for (auto const* name : c.suites) {
      SuiteReport r;
      try {
        r = run_suite(name);
      } catch (std::exception const& e) {
        ok = false;
        detail += std::string(name) + ": exception " + e.what() + "; ";
        continue;
      }
      checked += r.checked;
      if (!r.passed()) {
        ok = false;
        detail += std::string(name) + ": " + std::to_string(r.failed) + " failed, first: " + r.first_failure + "; ";
      }
      detail += r.scope + "; ";
    }
    double const elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s && elapsed > *c.time_limit_s) {
      ok = false;
      detail += "exceeded " + std::to_string(static_cast<int>(*c.time_limit_s)) + " s; ";
    }
    failures += ok ? 0 : 1;
    std::printf("%s criterion %2d (%s): %zu checks, %.1f s -- %s\n", ok ? "PASS" : "FAIL", c.number,
                c.title.c_str(), checked, elapsed, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(kCriteria.size()) - failures, kCriteria.size());
  return failures == 0 ? 0 : 1;
}
