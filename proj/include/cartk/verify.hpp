#ifndef CARTK_VERIFY_HPP
#define CARTK_VERIFY_HPP

#include <string>
#include <vector>

#include "cartk/vfilt.hpp"

namespace cartk {

struct CheckResult {
  std::string id;
  std::string label;
  bool pass;
  std::string detail;
};

/// Runs the full verification matrix (closed forms, identities and the
/// negative controls), one result per criterion. `characteristics` filters
/// the exercised primes; empty means all.
std::vector<CheckResult> run_verification(
    const std::vector<unsigned>& characteristics = {});

}  // namespace cartk

#endif
