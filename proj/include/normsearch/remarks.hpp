#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "normsearch/arith.hpp"

namespace normsearch {

struct RemarkCheck {
  std::string name;
  bool agrees = false;
  std::string detail;
};

struct SumMembership {
  long n = 0;
  Integer sum;
  bool in_x1 = false;
  bool in_x2 = false;
};

/// Result of replaying one worked-example fixture (ids "2.3", "2.4", "2.5").
/// A check that disagrees with its fixture is a finding, not a failure.
struct RemarkReport {
  std::string id;
  long bound = 0;
  std::vector<RemarkCheck> checks;
  std::vector<SumMembership> sums;
  std::vector<std::string> notes;

  bool all_agree() const;
  std::vector<std::string> discrepancies() const;
  const RemarkCheck& check(std::string_view name) const;
};

std::filesystem::path default_fixture_dir();

RemarkReport verify_remark(std::string_view id, long bound,
                           const std::filesystem::path& fixture_dir = default_fixture_dir());

}  // namespace normsearch
