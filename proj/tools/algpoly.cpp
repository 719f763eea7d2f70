#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "algpoly/algpoly.hpp"

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace algpoly;
  CLI::App app{"Exact polyhedral computations over real embedded number fields"};
  app.require_subcommand(0, 1);

  std::string input;
  std::string goals_text;
  unsigned workers = default_workers();
  std::string order = "input";
  unsigned euclid_digits = 12;
  std::string lift_text;
  std::string bench_family;
  std::string bench_class = "all";
  bool bench_fvector = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--workers", workers, "worker threads for dualization")->check(CLI::PositiveNumber);
    cmd->add_option("--order", order, "generator insertion order")->check(CLI::IsMember({"input", "sorted"}));
  };

  auto* run = app.add_subcommand("run", "compute the goals of an input file");
  run->add_option("file", input, "input file <name>.in")->required();
  run->add_option("--goals", goals_text, "comma separated goals replacing those of the file");
  run->add_option("--euclid-digits", euclid_digits, "significant digits of the Euclidean volume")->check(CLI::Range(1, 1000));
  run->add_option("--lift-order", lift_text, "comma separated 1-based coordinate order for lattice points");
  add_common(run);

  auto* bench = app.add_subcommand("bench", "time dualization across arithmetic classes");
  bench->add_option("family", bench_family, "cyclic:D:N, cube:D or order:K")->required();
  bench->add_option("--class", bench_class, "int, mpz, rat, sc2, sc8, p12 or all");
  bench->add_flag("--fvector", bench_fvector, "also compute the f-vector");
  add_common(bench);

  // the flat form `algpoly --bench FAMILY --class CLASS`
  app.add_option("--bench", bench_family, "benchmark family (same as the bench subcommand)");
  app.add_option("--class", bench_class, "arithmetic class for --bench");
  app.add_flag("--fvector", bench_fvector, "with --bench, also compute the f-vector");
  add_common(&app);

  CLI11_PARSE(app, argc, argv);
  const InsertionOrder insertion = order == "sorted" ? InsertionOrder::Sorted : InsertionOrder::Input;

  if (run->parsed()) {
    RunConfig config;
    config.workers = workers;
    config.order = insertion;
    config.euclid_digits = euclid_digits;
    if (!goals_text.empty()) {
      std::set<Goal> goals;
      for (const auto& g : split(goals_text, ',')) {
        auto goal = goal_from_string(g);
        if (!goal) {
          std::cerr << "error (UnknownGoal): unknown computation goal '" << g << "'\n";
          return 1;
        }
        goals.insert(*goal);
      }
      config.goals = goals;
    }
    for (const auto& c : split(lift_text, ',')) {
      try {
        const long k = std::stol(c);
        if (k < 1) throw std::invalid_argument(c);
        config.lift_order.push_back(static_cast<std::size_t>(k - 1));
      } catch (const std::exception&) {
        std::cerr << "error: bad --lift-order entry '" << c << "'\n";
        return 1;
      }
    }
    return run_file(input, config, std::cerr);
  }

  if (bench_family.empty()) {
    std::cout << app.help();
    return 1;
  }
  try {
    const auto rows = bench::family(bench_family);
    std::vector<std::string> classes = bench_class == "all" ? bench::class_names() : split(bench_class, ',');
    std::vector<bench::Row> results;
    for (const auto& cls : classes) {
      bench::class_field(cls);  // validates the name
      results.push_back(bench::run_class(rows, cls, {workers, insertion}, bench_fvector));
    }
    std::cout << bench::report(bench_family, rows, results);
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? 1 : 2;
  }
  return 0;
}
