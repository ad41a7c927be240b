#ifndef CONDALG_VERIFY_HPP
#define CONDALG_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace condalg {

// Knobs for the acceptance battery.  The defaults meet every sample-count
// floor; the floors themselves are enforced inside the criteria, so a
// weakened config fails honestly instead of passing vacuously.
struct VerifyConfig {
  std::uint64_t seed = 20260814;
  int n2_samples = 550;        // structured corpus algebras at two atoms
  int n3_samples = 550;        // and at three (floor: 1000 together)
  int es_co_frames = 520;      // random frames for the frame-side roundtrip
  int per_cond_frames = 210;   // random frames per canonicity condition
  bool inject_mutant = false;  // corrupt the proj2 corpus entry; the suite
                               // must then flag the broken law
  std::string cli_path;        // external binary for the dual-output check;
                               // empty falls back to in-process output
};

struct CriterionResult {
  int index = 0;
  std::string title;
  bool passed = false;
  std::string detail;  // sample counts and the first failure, if any
  std::int64_t elapsed_ms = 0;
  std::int64_t budget_ms = 0;  // wall-time bound, part of the criterion
};

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;
  bool all_passed() const;
};

// Runs the eleven acceptance criteria.  Failures (including exceptions
// escaping a criterion) are report content, never exceptions.
VerifyReport run_verify_suite(const VerifyConfig& cfg);

// One line per criterion plus a final verdict line.
std::string format_verify_report(const VerifyReport& rep);

}  // namespace condalg

#endif
