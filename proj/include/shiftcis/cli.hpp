#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftcis {

inline constexpr const char* kVersion = "0.1.0";

struct JobSpec {
  std::string command;  // transversal-analyze | winding | spline-cis | gm | zeros | lerch-scan | toeplitz-sweep | reconstruct
  std::string input_path;
  std::string output_path;
  std::string csv_path;
  std::string alpha;    // "p/q" or decimal; empty when not given
  std::string beta;
  std::string family = "gm";
  int m = 2;
  std::vector<int> sections{16, 32, 64};
  int grid = 1024;
  unsigned long long seed = 42;
  int jobs = 1;
  int samples = 256;
};

// Exit status: 0 ok, 2 validation / parse / I/O error, 3 numerical diagnostic.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

// Parses argv into a JobSpec and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shiftcis
