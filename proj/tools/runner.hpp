#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hkv/report.hpp"

namespace hkv::cli {

enum class Format { Text, Json };

struct SuiteConfig {
  std::string suite = "all";
  std::optional<std::size_t> rank;
  std::optional<Rational> fujiki_scale;
  std::optional<std::string> gram_path;
  std::optional<std::string> b0_path;
  std::optional<std::size_t> h2_index;
  int abelian_dim = 2;
  int max_m = 12;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  bool enable_d3 = false;
  bool timings = true;
  Format format = Format::Text;
};

// Throws hkv::Error on invalid configuration or input files.
void validate(const SuiteConfig& config);
Report run(const SuiteConfig& config);

std::string render(const SuiteConfig& config, const Report& report);
std::string render_error(const SuiteConfig& config, const std::string& kind, const std::string& message);

}  // namespace hkv::cli
