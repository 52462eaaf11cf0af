#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "hkv/rational.hpp"

namespace hkv {

enum class Status { Pass, Fail, Skipped };

std::string_view to_string(Status s) noexcept;

struct Check {
  std::string id;
  std::string anchor;  // the identity being checked, in words or symbols
  Status status = Status::Skipped;
  std::string computed;
  std::string expected;
  double elapsed_ms = 0;
};

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  // Milliseconds since construction or the previous lap.
  double lap();

private:
  std::chrono::steady_clock::time_point start_;
};

// Checks take the running stopwatch and record its lap once the computed
// value exists, so argument evaluation order cannot skew timings.
class Report {
public:
  Check& add(Check c);
  // Pass iff the canonical renderings agree.
  Check& expect(std::string id, std::string anchor, const Rational& computed, const Rational& expected, Stopwatch& sw);
  Check& expect(std::string id, std::string anchor, std::string computed, std::string expected, Stopwatch& sw);
  // Residual check: computed is the number of nonzero residual entries.
  Check& expect_zero(std::string id, std::string anchor, std::size_t residual_nonzeros, Stopwatch& sw);
  Check& skip(std::string id, std::string anchor, std::string why);

  void append(const Report& other);

  const std::vector<Check>& checks() const noexcept { return checks_; }
  const Check* find(std::string_view id) const;
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool ok() const { return failed() == 0; }

private:
  std::vector<Check> checks_;
};

}  // namespace hkv
