#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ltpair::verify {

enum class Status { Pass, Fail, Skip };

std::string status_name(Status s);

struct Check {
  std::string id;
  Status status;
  std::string lhs;
  std::string rhs;
  std::string tolerance;
  double elapsed;  // seconds
  /// "proven", "conjectural", "statistical", "heuristic" or "reported".
  std::string kind;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  std::map<std::string, std::string> environment;

  bool passed() const;
};

struct VerifyOptions {
  bool full = false;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  unsigned digits = 30;
};

const std::vector<std::string>& suite_names();

/// Runs one suite.  A failing or throwing check is recorded and the run continues.
/// Throws std::invalid_argument for an unknown suite name.
VerifyReport run_suite(const std::string& name, const VerifyOptions& opts = {});

/// Collects checks with timing; used by the suites.
class Recorder {
 public:
  explicit Recorder(VerifyReport& r) : report_(r) {}

  void add(std::string id, bool pass, std::string lhs, std::string rhs, std::string tolerance = "exact",
           std::string kind = "proven", double elapsed = 0);

  /// Times fn and records a Fail with the exception text if it throws.
  void timed(const std::string& id, const std::string& kind,
             const std::function<void(Check&)>& fn);

 private:
  VerifyReport& report_;
};

}  // namespace ltpair::verify
