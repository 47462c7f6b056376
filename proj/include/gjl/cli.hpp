#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gjl {

/// Process exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs one CLI invocation; args excludes the program name. Reports go to
/// out unless --out names a file; diagnostics go to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 17 significant digits, "nan"/"inf" for non-finite values.
std::string format_double(double x);

/// Numeric CSV as emitted by the CLI: one header row, numeric rows, and any
/// trailing "# ..." summary lines kept verbatim.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> comments;
};

CsvTable parse_csv(std::string_view text);
std::string emit_csv(const CsvTable& table);

}  // namespace gjl
