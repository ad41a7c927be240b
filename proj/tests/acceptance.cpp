// Acceptance gate: runs the full verification suite and prints one line per
// criterion.  An optional argument names the CLI binary to exercise.
#include <cstdio>

#include "condalg/verify.hpp"

int main(int argc, char** argv) {
  condalg::VerifyConfig cfg;
  if (argc > 1) cfg.cli_path = argv[1];
  const condalg::VerifyReport report = condalg::run_verify_suite(cfg);
  std::fputs(condalg::format_verify_report(report).c_str(), stdout);
  return report.all_passed() ? 0 : 1;
}
