#pragma once

#include "hypcomp/report.hpp"

#include <cstdint>
#include <iosfwd>

namespace hypcomp {

struct PaperOptions {
  unsigned max_m = 3;
  unsigned max_k = 3;
  std::size_t points = 20;  // numeric oracle points per (m, alpha, k)
  std::uint64_t seed = 1;
  bool corrupt_phi = false;
};

// One report per claim, sorted by claim id; "verdict" is "pass" iff every
// claim passes.
Json verify_paper(const PaperOptions& options);

// Entry point behind the hypcomp executable. Exit status: 0 when every
// certificate verifies, 1 when a check fails, 2 on usage or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypcomp
