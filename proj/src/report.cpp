#include "fuglede/report.hpp"

#include <charconv>
#include <cmath>

namespace fuglede {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

int exit_code(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::inconclusive: return 2;
  }
  return 1;
}

Status worst(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::inconclusive || b == Status::inconclusive) {
    return Status::inconclusive;
  }
  return Status::pass;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

void Report::input(const std::string& key, const std::string& value) {
  entries_.emplace_back("input." + key, value);
}

void Report::set(const std::string& key, const std::string& value) {
  entries_.emplace_back(key, value);
}

void Report::set(const std::string& key, const Rational& value) {
  entries_.emplace_back(key, to_string(value));
}

void Report::set(const std::string& key, double value) {
  entries_.emplace_back(key, format_double(value));
}

void Report::set(const std::string& key, long long value) {
  entries_.emplace_back(key, std::to_string(value));
}

void Report::set(const std::string& key, bool value) {
  entries_.emplace_back(key, value ? "true" : "false");
}

void Report::check(const std::string& name, Status status,
                   const std::string& detail) {
  entries_.emplace_back("check." + name, to_string(status));
  if (!detail.empty()) entries_.emplace_back("check." + name + ".detail", detail);
  status_ = worst(status_, status);
  ++checks_;
}

void Report::merge(const std::string& prefix, const Report& other) {
  for (const auto& [k, v] : other.entries_) {
    entries_.emplace_back(prefix + "." + k, v);
  }
  entries_.emplace_back(prefix + ".status", to_string(other.status_));
  status_ = worst(status_, other.status_);
  checks_ += other.checks_;
}

std::string Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return {};
}

void Report::write(std::ostream& out, bool with_timing) const {
  out << "# fuglede report v1\n";
  out << "command = " << command_ << '\n';
  for (const auto& [k, v] : entries_) {
    if (!with_timing && k.ends_with("elapsed_s")) continue;
    out << k << " = " << v << '\n';
  }
  out << "checks = " << checks_ << '\n';
  out << "status = " << to_string(status_) << '\n';
  if (with_timing && elapsed_ >= 0) {
    out << "elapsed_s = " << format_double(elapsed_) << '\n';
  }
}

}  // namespace fuglede
