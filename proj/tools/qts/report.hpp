#pragma once

#include <string>

#include <json.hpp>

namespace qts::cli {

using ordered_json = nlohmann::ordered_json;

// Exit codes: 0 all checks passed, 1 some check failed, 2 bad configuration,
// 3 an enumeration/dimension budget was exceeded, 4 ran but had nothing to
// check.
enum ExitCode {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kBudgetExceeded = 3,
  kNothingToCheck = 4,
};

struct CommonOpts {
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::uint64_t budget = 5'000'000;
  double tolerance = 1e-9;
  std::string out;             // empty: stdout
  std::string format = "json"; // json | csv
  bool timing = false;         // wall time makes reports non-reproducible, so opt-in
};

// Accumulates per-check rows plus free-form info; serialization is
// deterministic for a fixed configuration (keys ordered, no timestamps
// unless --timing is given).
class Report {
 public:
  explicit Report(std::string command);

  ordered_json& config() { return config_; }
  void add_check(const std::string& name, const std::string& param, double value, bool pass,
                 ordered_json witness = nullptr);
  void add_info(const std::string& key, ordered_json value);

  std::size_t checks() const { return checks_.size(); }
  std::size_t failed() const { return failed_; }
  int exit_code() const;

  std::string render_json(bool timing, double wall_ms) const;
  std::string render_csv() const;  // header "check,param,value,pass"

  // Renders per `opts.format`, writes to opts.out or stdout, returns exit_code().
  int deliver(const CommonOpts& opts) const;

 private:
  std::string command_;
  ordered_json config_;
  ordered_json checks_ = ordered_json::array();
  std::size_t failed_ = 0;
};

void write_text_file(const std::string& path, const std::string& text);

}  // namespace qts::cli
