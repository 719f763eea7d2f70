#pragma once

// The run command: input text in, output file contents out.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "algpoly/combinat.hpp"
#include "algpoly/discrete.hpp"
#include "algpoly/io.hpp"
#include "algpoly/polyhedron.hpp"

namespace algpoly {

inline unsigned default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw == 0 ? 1u : hw, 1u, 8u);
}

struct RunConfig {
  std::optional<std::set<Goal>> goals;  // replaces the goals of the input file
  unsigned workers = default_workers();
  InsertionOrder order = InsertionOrder::Input;
  unsigned euclid_digits = 12;
  std::vector<std::size_t> lift_order;  // 0-based; empty for the default
};

struct OutputFiles {
  std::string out;
  std::optional<std::string> aut;
  std::optional<std::string> tri;
  std::optional<std::string> fac;
};

struct RunOutcome {
  RunResults results;
  OutputFiles files;
};

inline RunOutcome run_spec(const InputSpec& spec, const RunConfig& config) {
  const std::set<Goal> goals = config.goals ? *config.goals : spec.goals;
  auto wants = [&](Goal g) { return goals.count(g) > 0; };
  const AnalyzeOptions options{config.workers, config.order};

  RunOutcome outcome;
  RunResults& res = outcome.results;
  res.euclid_digits = config.euclid_digits;
  res.show_field = spec.has_number_field;
  res.poly = analyze(spec.poly, options);
  const Polyhedron& p = res.poly;

  if (wants(Goal::FVector) || wants(Goal::FaceLattice)) res.faces = face_lattice(p);
  if (!p.empty && (wants(Goal::Volume) || wants(Goal::Triangulation))) {
    require_polytope(p);
    res.triangulation = triangulate(p, config.order);
    if (wants(Goal::Volume)) res.volume = volume(*res.triangulation, p.dim);
  }
  if (wants(Goal::LatticePoints) || wants(Goal::IntegerHull)) res.lattice_points = lattice_points(p, config.lift_order);
  if (wants(Goal::IntegerHull)) res.integer_hull = integer_hull(p, *res.lattice_points, options);
  const std::pair<Goal, AutomorphismKind> kinds[] = {
      {Goal::CombinatorialAutomorphisms, AutomorphismKind::Combinatorial},
      {Goal::AlgebraicAutomorphisms, AutomorphismKind::Algebraic},
      {Goal::EuclideanAutomorphisms, AutomorphismKind::Euclidean},
  };
  if (!p.empty)
    for (const auto& [goal, kind] : kinds)
      if (wants(goal)) res.automorphisms.push_back(automorphisms(p, kind));

  outcome.files.out = write_results(res);
  if (!res.automorphisms.empty()) {
    std::string aut;
    for (const auto& g : res.automorphisms) aut += write_automorphisms(g);
    outcome.files.aut = aut;
  }
  if (wants(Goal::Triangulation) && res.triangulation) outcome.files.tri = write_triangulation(*res.triangulation);
  if (wants(Goal::FaceLattice) && res.faces) outcome.files.fac = write_face_lattice(*res.faces, p.vertices.size() + p.rays.size());
  return outcome;
}

inline RunOutcome run_text(std::string_view text, const RunConfig& config) { return run_spec(parse_input(text), config); }

/// Reads `<name>.in`, writes `<name>.out` and the optional companion files
/// next to it. Returns the process exit code: 0 success, 1 input error,
/// 2 computation error.
inline int run_file(const std::filesystem::path& input, const RunConfig& config, std::ostream& err = std::cerr) {
  std::ifstream in(input);
  if (!in) {
    err << "error: cannot read " << input.string() << '\n';
    return 1;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  RunOutcome outcome;
  try {
    outcome = run_text(buf.str(), config);
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return e.is_input_error() ? 1 : 2;
  }
  auto write = [&](const std::string& ext, const std::string& content) {
    auto path = input;
    path.replace_extension(ext);
    std::ofstream os(path, std::ios::binary);
    os << content;
    return static_cast<bool>(os);
  };
  bool ok = write(".out", outcome.files.out);
  if (outcome.files.aut) ok = write(".aut", *outcome.files.aut) && ok;
  if (outcome.files.tri) ok = write(".tri", *outcome.files.tri) && ok;
  if (outcome.files.fac) ok = write(".fac", *outcome.files.fac) && ok;
  if (!ok) {
    err << "error: cannot write output files next to " << input.string() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace algpoly
