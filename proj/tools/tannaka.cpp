#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "tannaka/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact Tannakian reconstruction over commutative rings"};
  std::string command, model;
  std::optional<std::string> export_path, report_path;
  std::size_t bound = tannaka::default_search_bound;
  std::optional<unsigned long> p;
  std::optional<unsigned> n;
  app.add_option("command", command, "check | reconstruct | counit | recognize | fl | basechange")
      ->required()
      ->check(CLI::IsMember({"check", "reconstruct", "counit", "recognize", "fl", "basechange"}));
  app.add_option("model", model, "model file (JSON)")->required();
  app.add_option("--export", export_path, "write the resulting model here");
  app.add_option("--bound", bound, "enumeration bound for finite searches");
  app.add_option("--report", report_path, "write the machine-readable report here");
  app.add_option("--p", p, "residue characteristic for fl and basechange");
  app.add_option("--n", n, "exponent n of W_n = Z/p^n");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : tannaka::exit_parse;
  }

  tannaka::RunResult r;
  try {
    r = tannaka::run_file(command, model, {export_path, bound, p, n});
  } catch (const std::exception& e) {
    std::cerr << "tannaka: " << e.what() << "\n";
    return tannaka::exit_failure;
  }
  const std::string machine = r.report.dump(2) + "\n";
  if (report_path) {
    std::ofstream out(*report_path);
    if (!out) {
      std::cerr << "tannaka: cannot write " << *report_path << "\n";
      return tannaka::exit_failure;
    }
    out << machine;
    std::cout << tannaka::render_report(r.report);
  } else {
    std::cout << machine;
    std::cerr << tannaka::render_report(r.report);
  }
  return r.exit_code;
}
