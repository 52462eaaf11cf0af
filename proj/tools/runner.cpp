#include "runner.hpp"

#include <json.hpp>
#include <sstream>

#include "hkv/abvar.hpp"
#include "hkv/error.hpp"
#include "hkv/fourier.hpp"
#include "hkv/models.hpp"
#include "hkv/qform.hpp"

namespace hkv::cli {

namespace {

constexpr const char* suites[] = {"fourier", "k3", "k3hilb", "fano", "abelian", "mck", "all"};

bool wants(const SuiteConfig& c, std::string_view name) { return c.suite == "all" || c.suite == name; }

Report prefixed(const Report& rep, const std::string& prefix) {
  Report out;
  for (auto c : rep.checks()) {
    c.id = prefix + c.id;
    out.add(std::move(c));
  }
  return out;
}

struct Lattice {
  QuadraticSpace space;
  Rational fujiki;
};

Lattice hk_lattice(const SuiteConfig& c) {
  std::optional<Rational> file_scale;
  QuadraticSpace space = identity_space(1);
  if (c.gram_path) {
    auto file = read_gram_file(*c.gram_path);
    if (c.rank && *c.rank != file.space.rank()) {
      throw Error(ErrorKind::DimensionMismatch, "--rank " + std::to_string(*c.rank) + " but the Gram file has rank " +
                                                    std::to_string(file.space.rank()));
    }
    space = std::move(file.space);
    file_scale = file.fujiki_scale;
  } else {
    const std::size_t r = c.rank.value_or(23);
    space = r == 23 ? k3hilb_lattice(k3_lattice()) : identity_space(r);
  }
  return {std::move(space), c.fujiki_scale.value_or(file_scale.value_or(Rational(1)))};
}

QuadraticSpace k3_space(const SuiteConfig& c) {
  return c.gram_path ? read_gram_file(*c.gram_path).space : k3_lattice();
}

std::pair<QuadraticSpace, std::size_t> fano_input(const SuiteConfig& c) {
  if (!c.b0_path) return {default_fano_b0(), c.h2_index.value_or(0)};
  auto file = read_gram_file(*c.b0_path);
  const auto h = c.h2_index ? *c.h2_index : file.h2_index.value_or(0);
  return {std::move(file.space), h};
}

void strip_timings(Report& rep) {
  Report out;
  for (auto c : rep.checks()) {
    c.elapsed_ms = 0;
    out.add(std::move(c));
  }
  rep = std::move(out);
}

}  // namespace

void validate(const SuiteConfig& c) {
  if (std::find(std::begin(suites), std::end(suites), c.suite) == std::end(suites)) {
    throw Error(ErrorKind::BadShape, "unknown suite '" + c.suite + "'");
  }
  if (c.rank && *c.rank == 0) throw Error(ErrorKind::BadShape, "--rank must be positive");
  if (c.fujiki_scale && sgn(*c.fujiki_scale) <= 0) throw Error(ErrorKind::BadShape, "--fujiki must be positive");
  if (c.abelian_dim < 1 || c.abelian_dim > 3) throw Error(ErrorKind::BadShape, "--dim must be 1, 2 or 3");
  if (c.abelian_dim == 3 && !c.enable_d3) throw Error(ErrorKind::BadShape, "--dim 3 requires --enable-d3");
  if (c.max_m < 2) throw Error(ErrorKind::BadShape, "--max-m must be at least 2");
  if (c.samples == 0) throw Error(ErrorKind::BadShape, "--samples must be at least 1");
}

Report run(const SuiteConfig& c) {
  validate(c);
  Report rep;
  if (wants(c, "fourier") || wants(c, "mck")) {
    auto lattice = hk_lattice(c);
    const auto kit = make_fourier_kit(HKRing::make(std::move(lattice.space), lattice.fujiki));
    if (wants(c, "fourier")) {
      rep.append(verify_bb_square(kit));
      rep.append(verify_bb_powers(kit));
      rep.append(kunneth_projectors(kit).report);
      rep.append(fourier_square_spectrum(kit));
      rep.append(verify_uniqueness(kit, c.samples, c.seed));
    }
    if (wants(c, "mck")) rep.append(mck_vanishing(kit));
  }
  if (wants(c, "k3")) rep.append(k3_intro_check(make_k3_model(k3_space(c))));
  if (wants(c, "k3hilb")) {
    rep.append(verify_k3hilb(build_k3hilb_model(make_k3_model(k3_space(c)))));
    Matrix hyperbolic(2, 2);
    hyperbolic(0, 1) = 1;
    hyperbolic(1, 0) = 1;
    const auto toy = build_k3hilb_model(make_k3_model(make_quadratic_space(2, hyperbolic)));
    rep.append(prefixed(verify_k3hilb(toy, false), "toy."));
  }
  if (wants(c, "fano")) {
    const auto [b0, h] = fano_input(c);
    const auto model = build_fano_model(b0, h);
    rep.append(verify_fano_incidence(model));
    rep.append(verify_phi(model));
  }
  if (wants(c, "abelian")) {
    for (int d = 1; d <= c.abelian_dim; ++d) {
      rep.append(verify_poincare_projectors(d));
      if (d <= 2) {
        rep.append(verify_ab_mck(d));
        rep.append(verify_moddiag(d));
      }
    }
    rep.append(binomial_vanishing(c.max_m));
  }
  if (!c.timings) strip_timings(rep);
  return rep;
}

namespace {

nlohmann::ordered_json config_json(const SuiteConfig& c) {
  nlohmann::ordered_json j;
  j["suite"] = c.suite;
  j["rank"] = c.rank ? nlohmann::ordered_json(*c.rank) : nlohmann::ordered_json();
  j["fujiki"] = c.fujiki_scale ? nlohmann::ordered_json(to_string(*c.fujiki_scale)) : nlohmann::ordered_json();
  j["gram"] = c.gram_path ? nlohmann::ordered_json(*c.gram_path) : nlohmann::ordered_json();
  j["b0"] = c.b0_path ? nlohmann::ordered_json(*c.b0_path) : nlohmann::ordered_json();
  j["h2_index"] = c.h2_index ? nlohmann::ordered_json(*c.h2_index) : nlohmann::ordered_json();
  j["dim"] = c.abelian_dim;
  j["max_m"] = c.max_m;
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["enable_d3"] = c.enable_d3;
  return j;
}

}  // namespace

std::string render(const SuiteConfig& c, const Report& rep) {
  if (c.format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["suite"] = c.suite;
    doc["config"] = config_json(c);
    auto checks = nlohmann::ordered_json::array();
    for (const auto& ch : rep.checks()) {
      nlohmann::ordered_json j;
      j["id"] = ch.id;
      j["anchor"] = ch.anchor;
      j["status"] = std::string(to_string(ch.status));
      j["computed"] = ch.computed;
      j["expected"] = ch.expected;
      if (c.timings) j["elapsed_ms"] = ch.elapsed_ms;
      checks.push_back(std::move(j));
    }
    doc["checks"] = std::move(checks);
    doc["summary"] = {{"pass", rep.passed()}, {"fail", rep.failed()}, {"skipped", rep.skipped()}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& ch : rep.checks()) {
    out << (ch.status == Status::Pass ? "PASS " : ch.status == Status::Fail ? "FAIL " : "SKIP ") << ch.id << "  "
        << ch.anchor;
    if (ch.status == Status::Skipped) {
      out << "  (" << ch.computed << ")";
    } else {
      out << "  computed=" << ch.computed << " expected=" << ch.expected;
    }
    if (c.timings) out << "  [" << ch.elapsed_ms << " ms]";
    out << '\n';
  }
  out << rep.passed() << " passed, " << rep.failed() << " failed, " << rep.skipped() << " skipped\n";
  return out.str();
}

std::string render_error(const SuiteConfig& c, const std::string& kind, const std::string& message) {
  if (c.format == Format::Json) {
    nlohmann::ordered_json doc;
    doc["suite"] = c.suite;
    doc["error"] = {{"kind", kind}, {"message", message}};
    return doc.dump(2) + "\n";
  }
  return "error (" + kind + "): " + message + "\n";
}

}  // namespace hkv::cli
