#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace normsearch::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInternal = 2 };

/// Everything a run depends on, as given on the command line. Only the
/// fields a subcommand uses are set; the set ones are echoed into the report.
struct RunConfig {
  std::string subcommand;
  std::optional<long> d;
  std::optional<std::string> m;
  std::optional<std::string> recurrence;
  std::optional<std::string> primes;
  std::optional<int> t;
  std::optional<long> e;
  std::optional<long> n;
  std::optional<std::string> bound;
  std::optional<int> coord;
  std::optional<unsigned> s;
  std::optional<std::string> degrees;
  std::optional<unsigned> field_degree;
  std::optional<std::string> bases;
  std::optional<std::string> remark_id;
  bool include_trivial = false;
  bool serial = false;
  int shards = 0;
  std::string format = "text";
  std::string out_path;
  std::string fixture_dir;
};

// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace normsearch::cli
