#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "fuglede/rational.hpp"

namespace fuglede {

enum class Status { pass, fail, inconclusive };
const char* to_string(Status s);

/// 0 pass, 1 fail, 2 inconclusive.
int exit_code(Status s);
inline constexpr int kUsageExit = 64;

/// Worst of two statuses: fail > inconclusive > pass.
Status worst(Status a, Status b);

/// Structured-text run report: one "key = value" line per entry, in
/// insertion order, framed by a version header and a final status line.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const noexcept { return command_; }

  void input(const std::string& key, const std::string& value);
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, const char* value) {
    set(key, std::string(value));
  }
  void set(const std::string& key, const Rational& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, long long value);
  void set(const std::string& key, int value) {
    set(key, static_cast<long long>(value));
  }
  void set(const std::string& key, std::size_t value) {
    set(key, static_cast<long long>(value));
  }
  void set(const std::string& key, bool value);

  /// Records a verdict; the report status is the worst of all checks.
  void check(const std::string& name, Status status,
             const std::string& detail = {});
  /// Folds another report in under `prefix.`.
  void merge(const std::string& prefix, const Report& other);

  Status status() const noexcept { return status_; }
  std::size_t check_count() const noexcept { return checks_; }
  void set_elapsed(double seconds) { elapsed_ = seconds; }

  /// Value of the first entry with this key, or "" when absent.
  std::string get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  /// Without timing, entries whose key ends in "elapsed_s" are skipped so
  /// the output is reproducible byte for byte.
  void write(std::ostream& out, bool with_timing = true) const;

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> entries_;
  Status status_ = Status::pass;
  std::size_t checks_ = 0;
  double elapsed_ = -1.0;
};

/// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace fuglede
