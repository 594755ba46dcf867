// Acceptance suite: runs the full verification matrix and prints one
// pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <cstdio>

#include "cartk/verify.hpp"

int main() {
  bool all = true;
  for (const auto& r : cartk::run_verification()) {
    all = all && r.pass;
    std::printf("%s  %2s  %s  [%s]\n", r.pass ? "PASS" : "FAIL", r.id.c_str(),
                r.label.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
