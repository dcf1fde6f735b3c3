#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "coxforge/cli.hpp"

int main(int argc, char** argv) {
  using coxforge::cli::RunConfig;
  RunConfig cfg;
  std::string eps_text, out_path, poly;

  CLI::App app{"coxforge: exact constructions of cubic-fixing quadratic maps and their Picard actions"};
  app.add_option("command", cfg.command, "construct | orbit | action | charpoly | salem | group | theoremc | errata | sweep")
      ->required()
      ->check(CLI::IsMember(coxforge::cli::commands()));
  app.add_option("--n", cfg.n, "orbit length n (default 5)");
  app.add_option("--tau", cfg.tau, "line permutation in cycle notation: id, (12), (123), ...");
  app.add_option("--eps", eps_text, "enclosure width, e.g. 1e-12 or 1/1000 (env COXFORGE_EPS)");
  app.add_option("--max-len", cfg.max_len, "word length bound for group enumeration (default 6)");
  app.add_option("--max-iter", cfg.max_iter, "orbit tracking bound (default 100)");
  app.add_option("--seed", cfg.seed, "seed for sampled points (default 2022)");
  app.add_option("--output", cfg.output, "json or text (default text)")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report to this file instead of stdout");
  app.add_option("--n-min", cfg.n_min, "sweep lower bound (default 4)");
  app.add_option("--n-max", cfg.n_max, "sweep upper bound (default 7)");
  app.add_option("--poly", poly, "salem: ascending integer coefficients, e.g. 1,-2,1,-2,1");
  app.add_flag("--certify", cfg.certify, "group: exit 1 unless every relation and the enumeration certify");

  try {
    app.parse(argc, argv);
    if (eps_text.empty())
      if (const char* env = std::getenv("COXFORGE_EPS")) eps_text = env;
    if (!eps_text.empty()) cfg.eps = coxforge::parse_rational(eps_text);
    if (cfg.eps <= 0) throw CLI::ValidationError("--eps", "must be positive");
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  } catch (const coxforge::Error& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }
  if (!poly.empty()) cfg.poly = poly;
  if (!out_path.empty()) cfg.out_path = out_path;

  auto report = coxforge::cli::run(cfg);
  if (report.exit_code == 2) std::cerr << app.help();
  const std::string body = report.render(cfg);
  if (cfg.out_path) {
    std::ofstream f(*cfg.out_path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << *cfg.out_path << "\n";
      return 2;
    }
    f << body;
  } else {
    std::cout << body;
  }
  return report.exit_code;
}
