#include <CLI11.hpp>
#include <iostream>

#include "hkv/error.hpp"
#include "runner.hpp"

int main(int argc, char** argv) {
  using namespace hkv;
  cli::SuiteConfig config;
  std::string fujiki, format = "text";
  std::size_t rank = 0, h2 = 0;

  CLI::App app{"Exact verification suites for hyperkähler fourfold cohomology"};
  app.add_option("--suite", config.suite, "fourier, k3, k3hilb, fano, abelian, mck or all")
      ->check(CLI::IsMember({"fourier", "k3", "k3hilb", "fano", "abelian", "mck", "all"}));
  auto* rank_opt = app.add_option("--rank", rank, "rank of H^2 when no Gram file is given");
  auto* fujiki_opt = app.add_option("--fujiki", fujiki, "Fujiki scale c_F as p or p/q");
  auto* gram_opt = app.add_option("--gram", "Gram matrix file (H^2 form, or the K3 form for k3 suites)");
  auto* b0_opt = app.add_option("--b0", "primitive-cohomology form of the cubic fourfold");
  auto* h2_opt = app.add_option("--h2-index", h2, "index of h^2 in the --b0 basis");
  app.add_option("--dim", config.abelian_dim, "largest abelian dimension")->check(CLI::Range(1, 3));
  app.add_option("--max-m", config.max_m, "range of the binomial identity")->check(CLI::Range(2, 1000));
  app.add_option("--seed", config.seed, "seed for sampled checks");
  app.add_option("--samples", config.samples, "number of sampled perturbations")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--enable-d3", config.enable_d3, "allow abelian dimension 3");
  bool no_timings = false;
  app.add_flag("--no-timings", no_timings, "omit elapsed times (byte-stable output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  config.timings = !no_timings;
  config.format = format == "json" ? cli::Format::Json : cli::Format::Text;

  try {
    if (*rank_opt) config.rank = rank;
    if (*fujiki_opt) config.fujiki_scale = parse_rational(fujiki);
    if (*gram_opt) config.gram_path = gram_opt->as<std::string>();
    if (*b0_opt) config.b0_path = b0_opt->as<std::string>();
    if (*h2_opt) config.h2_index = h2;
    const auto report = cli::run(config);
    std::cout << cli::render(config, report);
    return report.ok() ? 0 : 1;
  } catch (const Error& e) {
    std::cout << cli::render_error(config, std::string(to_string(e.kind())), e.what());
    return 2;
  }
}
