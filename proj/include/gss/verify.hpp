#ifndef GSS_VERIFY_HPP
#define GSS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gss {

inline constexpr const char* kVersion = "0.4.0";

struct VerifyOptions {
  std::string cache_dir;
  int threads = 1;
  std::uint64_t seed = 20240611;
  std::int64_t samples = 1000000;  // wheel pairing draws
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Exact parts are deterministic, so equal options give equal reports.
struct SuiteReport {
  std::string suite;
  std::string target;      // the statement the suite checks
  std::string truncation;  // window the statement is checked in
  std::vector<Check> checks;
  // Computed values reported alongside the checks, in insertion order.
  std::vector<std::pair<std::string, std::string>> values;
  // Set when the window needed for the statement could not be reached; the
  // checks then record what was computed instead.
  bool infeasible = false;

  bool passed() const;
  void check(std::string name, bool pass, std::string detail = "");
  void value(std::string key, std::string v);
};

// Names in the order they run under "all".
const std::vector<std::string>& suite_names();
// Throws std::invalid_argument on an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});

}  // namespace gss

#endif
