#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace repstab::cli {

enum ExitCode { kOk = 0, kUsage = 1, kMismatch = 2, kResourceLimit = 3 };

enum class Format { Text, Csv, Json };

struct RunConfig {
  std::string command;
  int d = 2;
  std::optional<int> k;
  std::optional<std::string> lambda;
  int i_lo = 0;
  int i_hi = -1;  ///< -1 when no --i was given
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<int> horizon;
  std::optional<int> max_degree;
  int oracle_limit = 6;
  Format format = Format::Text;
  int jobs = 1;
  bool quiet = false;
  std::string output;
};

/// "7" or "3..6" into an inclusive range. Throws std::invalid_argument.
std::pair<int, int> parse_range(const std::string& text);

/// Runs the command line. Results go to `out` (or the --output file),
/// diagnostics and progress to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Splits one CSV record, honouring double quotes.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace repstab::cli
