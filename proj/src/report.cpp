#include "hkv/report.hpp"

#include <algorithm>

#include "hkv/error.hpp"

namespace hkv {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "skipped";
}

double Stopwatch::lap() {
  const auto now = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
  start_ = now;
  return ms;
}

Check& Report::add(Check c) {
  if (find(c.id)) throw Error(ErrorKind::BadShape, "duplicate check id " + c.id);
  checks_.push_back(std::move(c));
  return checks_.back();
}

Check& Report::expect(std::string id, std::string anchor, const Rational& computed, const Rational& expected,
                      Stopwatch& sw) {
  return expect(std::move(id), std::move(anchor), to_string(computed), to_string(expected), sw);
}

Check& Report::expect(std::string id, std::string anchor, std::string computed, std::string expected, Stopwatch& sw) {
  const auto status = computed == expected ? Status::Pass : Status::Fail;
  return add({std::move(id), std::move(anchor), status, std::move(computed), std::move(expected), sw.lap()});
}

Check& Report::expect_zero(std::string id, std::string anchor, std::size_t residual_nonzeros, Stopwatch& sw) {
  return expect(std::move(id), std::move(anchor), std::to_string(residual_nonzeros), "0", sw);
}

Check& Report::skip(std::string id, std::string anchor, std::string why) {
  return add({std::move(id), std::move(anchor), Status::Skipped, std::move(why), "", 0});
}

void Report::append(const Report& other) {
  for (const auto& c : other.checks_) add(c);
}

const Check* Report::find(std::string_view id) const {
  const auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Pass; }));
}

std::size_t Report::failed() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Fail; }));
}

std::size_t Report::skipped() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Skipped; }));
}

}  // namespace hkv
