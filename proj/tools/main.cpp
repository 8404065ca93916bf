// Command-line front end: `wrd analyze` runs one analysis and prints
// the invariants at each labeled point; `wrd selftest` replays a
// reduced version of the oracle property suite.

#include <wrd/wrd.hpp>
#include <wrd/testing/selftest.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int run_analyze(const std::string& path, const std::string& domain,
                const std::string& scalar, const std::string& point,
                int widen_delay, bool dump_cfg) {
  wrd::run_config conf;
  auto dom = wrd::parse_domain_name(domain);
  if (!dom) {
    std::cerr << "error: unknown domain '" << domain << "'\n";
    return 2;
  }
  conf.domain = *dom;
  if (scalar == "int") {
    conf.mode = wrd::scalar_mode::integers;
  } else if (scalar == "rat") {
    conf.mode = wrd::scalar_mode::rationals;
  } else {
    std::cerr << "error: unknown scalar mode '" << scalar << "'\n";
    return 2;
  }
  conf.widen_delay = widen_delay;
  conf.dump_cfg = dump_cfg;
  if (!point.empty()) conf.point = point;

  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return 2;
  }
  std::ostringstream buf;
  buf << in.rdbuf();

  try {
    wrd::run_result res = wrd::run_analysis(buf.str(), conf);
    std::cout << res.output;
    return res.exit_code;
  } catch (const wrd::parse_error& e) {
    std::cerr << "error: " << path << ": " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weakly relational numerical analyzer"};
  app.require_subcommand(1);

  std::string path, domain = "interval", scalar = "int", point;
  int widen_delay = 0;
  bool dump_cfg = false;

  auto* analyze = app.add_subcommand("analyze", "analyze a program");
  analyze->add_option("file", path, "program file")->required();
  analyze->add_option("--domain", domain,
                      "const|interval|congruence|zone|zone-congruence|"
                      "zone-product|translated-eq");
  analyze->add_option("--scalar", scalar, "int|rat");
  analyze->add_option("--point", point, "print only this labeled point");
  analyze->add_option("--widen-delay", widen_delay,
                      "joins before widening at each loop head");
  analyze->add_flag("--dump-cfg", dump_cfg, "print the control flow graph");

  auto* selftest = app.add_subcommand("selftest", "run the reduced property suite");
  int iterations = 60;
  selftest->add_option("--iterations", iterations, "cases per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (analyze->parsed())
    return run_analyze(path, domain, scalar, point, widen_delay, dump_cfg);
  return wrd::testing::selftest(std::cout, iterations) ? 0 : 1;
}
