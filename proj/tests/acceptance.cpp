// Runs every exactness check at full scale and prints one PASS/FAIL line
// each; exits nonzero if any fail.
#include <chrono>
#include <cstdio>

#include "crossnest/checks.hpp"

int main() {
  bool ok = true;
  int idx = 0;
  for (const auto& c : crossnest::checks::all_checks()) {
    auto t0 = std::chrono::steady_clock::now();
    crossnest::checks::CheckResult res = c.run();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    ok = ok && res.pass;
    std::printf("%2d %-18s %s  [%lld ms]  %s\n", ++idx, c.name.c_str(),
                res.pass ? "PASS" : "FAIL", static_cast<long long>(ms), res.detail.c_str());
    std::fflush(stdout);
  }
  return ok ? 0 : 1;
}
