#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cusp/cli.hpp"

namespace {

constexpr const char* kScalarHelp =
    "cyclotomic scalar: a product of factors 'zeta(N)', 'zeta(N)^k' or 'a/b' joined by '*', "
    "with an optional leading '-', e.g. \"zeta(4)^3 * -2/5\"";

struct Flags {
  cusp::RunConfig c;
  std::string config_path;
  bool emit_config = false;
};

void add_common(CLI::App* sub, Flags& f, std::vector<CLI::Option*>& opts) {
  auto& c = f.c;
  opts.push_back(sub->add_option("--family", c.family, "depth-zero or ramified"));
  opts.push_back(sub->add_option("--q,--p", c.q, "residue field size (a prime)"));
  opts.push_back(sub->add_option("--n", c.n, "rank"));
  opts.push_back(sub->add_option("--theta", c.theta, "index k of Theta(x) = zeta^k (depth zero)"));
  opts.push_back(sub->add_option("--sigma", c.sigma, "exponent of the tame character (ramified)"));
  opts.push_back(sub->add_option("--theta2", c.theta2, "Theta index of the second type (default: dual)"));
  opts.push_back(sub->add_option("--sigma2", c.sigma2, "sigma of the second type (default: dual)"));
  opts.push_back(sub->add_option("--A", c.A, std::string("Lambda(varpi_E) of the first type; ") + kScalarHelp));
  opts.push_back(sub->add_option("--twist", c.twist, std::string("value c of the twist at varpi_F; ") + kScalarHelp));
  opts.push_back(sub->add_option("--ell", c.ell, "prime ell for reduction"));
  opts.push_back(sub->add_option("--ideal", c.ideal, "index of the prime above ell (factor of Phi_N mod ell)"));
  opts.push_back(sub->add_option("--window", c.window, "torus window"));
  opts.push_back(sub->add_option("--jobs", c.jobs, "worker threads"));
  opts.push_back(sub->add_option("--oracle-kmax", c.oracle_kmax, "highest coefficient compared with the oracle (-1 skips)"));
  opts.push_back(sub->add_option("--out", c.out, "output file (default stdout)"));
  opts.push_back(sub->add_option("--format", c.format, "json or csv"));
  sub->add_option("--config", f.config_path, "JSON run configuration; flags given explicitly override it");
  sub->add_flag("--emit-config", f.emit_config, "print the resolved configuration and exit");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rankin-Selberg integrals of explicit Whittaker functions for cuspidal GL_2 types"};
  app.require_subcommand(1);
  Flags f;
  std::vector<CLI::Option*> opts;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"bessel-table", "table of the Bessel function on the finite quotient of J"},
      {"verify", "verify the L-factor identity for a pair of types"},
      {"reduce", "verify the mod-ell corollary"},
      {"oracle-check", "compare coefficients with the brute-force oracle"}};
  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    std::vector<CLI::Option*> local;
    add_common(sub, f, local);
    opts.insert(opts.end(), local.begin(), local.end());
    subs.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cusp::ExitConfig;
  }
  for (CLI::App* s : subs)
    if (s->parsed()) f.c.command = s->get_name();

  cusp::RunConfig c = f.c;
  if (!f.config_path.empty()) {
    try {
      std::ifstream in(f.config_path);
      if (!in) throw cusp::Error(cusp::ErrorCode::ConfigError, "cannot read " + f.config_path);
      cusp::Json j;
      try {
        j = cusp::Json::parse(in);
      } catch (const cusp::Json::exception& e) {
        throw cusp::Error(cusp::ErrorCode::ConfigError, e.what());
      }
      cusp::RunConfig base = cusp::parse_run_config(j);
      base.command = f.c.command;
      const cusp::Json given = cusp::emit(f.c);
      cusp::Json merged = cusp::emit(base);
      for (CLI::Option* o : opts) {
        if (o->count() == 0) continue;
        std::string key = o->get_lnames().front();
        if (key == "oracle-kmax") key = "oracle_kmax";
        if (given.contains(key)) merged[key] = given[key];
      }
      c = cusp::parse_run_config(merged);
    } catch (const cusp::Error& e) {
      std::cerr << e.what() << "\n";
      return cusp::ExitConfig;
    }
  }
  if (f.emit_config) {
    std::cout << cusp::emit(c).dump(2) << "\n";
    return cusp::ExitPass;
  }
  return cusp::run_command(c, std::cout, std::cerr);
}
