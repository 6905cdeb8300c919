#pragma once

#include "lefscalc/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace lefscalc {

struct VerifyOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  int cases = 100;  // random cases per randomized property
  /// Directory of problem files to validate in addition to the built-ins.
  std::optional<std::string> fixtures_dir;
};

struct PropertyResult {
  std::string name;
  int checked = 0;
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
  friend bool operator==(const PropertyResult&, const PropertyResult&) = default;
};

/// Independent of the thread count.
struct VerifyReport {
  std::uint64_t seed = 0;
  int cases = 0;
  std::vector<PropertyResult> properties;
  bool all_pass() const;
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

VerifyReport run_verify(const VerifyOptions& options);
/// One "PASS"/"FAIL" line per property, failures indented below.
std::string format_verify(const VerifyReport& report);
Json to_json(const VerifyReport& report);
VerifyReport verify_report_from_json(const Json& j);

}  // namespace lefscalc
