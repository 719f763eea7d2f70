#pragma once

// Input files and the .out / .aut / .tri / .fac writers.

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "algpoly/combinat.hpp"
#include "algpoly/discrete.hpp"
#include "algpoly/element_io.hpp"
#include "algpoly/polyhedron.hpp"

namespace algpoly {

enum class Goal {
  Volume,
  LatticePoints,
  FVector,
  FaceLattice,
  IntegerHull,
  EuclideanAutomorphisms,
  AlgebraicAutomorphisms,
  CombinatorialAutomorphisms,
  SupportHyperplanes,
  ExtremeRays,
  Triangulation,
};

inline const std::vector<std::pair<Goal, std::string>>& goal_names() {
  static const std::vector<std::pair<Goal, std::string>> names{
      {Goal::Volume, "Volume"},
      {Goal::LatticePoints, "LatticePoints"},
      {Goal::FVector, "FVector"},
      {Goal::FaceLattice, "FaceLattice"},
      {Goal::IntegerHull, "IntegerHull"},
      {Goal::EuclideanAutomorphisms, "EuclideanAutomorphisms"},
      {Goal::AlgebraicAutomorphisms, "AlgebraicAutomorphisms"},
      {Goal::CombinatorialAutomorphisms, "CombinatorialAutomorphisms"},
      {Goal::SupportHyperplanes, "SupportHyperplanes"},
      {Goal::ExtremeRays, "ExtremeRays"},
      {Goal::Triangulation, "Triangulation"},
  };
  return names;
}

inline std::optional<Goal> goal_from_string(const std::string& s) {
  for (const auto& [g, name] : goal_names())
    if (name == s) return g;
  return std::nullopt;
}

inline std::string to_string(Goal g) {
  for (const auto& [goal, name] : goal_names())
    if (goal == g) return name;
  return "";
}

struct InputSpec {
  PolyhedronSpec poly;
  bool has_number_field = false;
  std::set<Goal> goals;
};

namespace detail {

struct Token {
  std::string text;
  std::size_t line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokens() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      if (pos_ >= text_.size()) return out;
      Token t{"", line_, col_};
      const char c = text_[pos_];
      if (c == '(' || c == '[') {
        const char close = c == '(' ? ')' : ']';
        while (pos_ < text_.size() && text_[pos_] != close) {
          if (text_[pos_] == '\n') error(t, "unterminated bracket");
          t.text += advance();
        }
        if (pos_ >= text_.size()) error(t, "unterminated bracket");
        t.text += advance();
      } else {
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
               text_[pos_] != '[' && !starts_comment())
          t.text += advance();
      }
      out.push_back(std::move(t));
    }
  }

  [[noreturn]] static void error(const Token& t, const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) {
    fail(kind, "line " + std::to_string(t.line) + ", column " + std::to_string(t.col) + ": " + msg);
  }

 private:
  bool starts_comment() const { return pos_ + 1 < text_.size() && text_[pos_] == '/' && text_[pos_ + 1] == '*'; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else if (starts_comment()) {
        Token start{"", line_, col_};
        advance();
        advance();
        while (pos_ + 1 < text_.size() && !(text_[pos_] == '*' && text_[pos_ + 1] == '/')) advance();
        if (pos_ + 1 >= text_.size()) error(start, "unterminated comment");
        advance();
        advance();
      } else {
        return;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

inline bool is_integer_token(const std::string& s) {
  std::size_t i = s.size() > 1 && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

class InputParser {
 public:
  explicit InputParser(std::string_view text) : tokens_(Lexer(text).tokens()) {}

  InputSpec parse() {
    InputSpec spec;
    bool have_dim = false;
    while (!done()) {
      const Token& t = next();
      if (t.text == "amb_space") {
        const long d = integer(next(), "ambient dimension");
        if (d < 0) Lexer::error(t, "negative ambient dimension");
        spec.poly.dim = static_cast<std::size_t>(d);
        have_dim = true;
      } else if (t.text == "number_field") {
        if (spec.has_number_field) Lexer::error(t, "number_field given twice");
        spec.poly.field = number_field(t);
        spec.has_number_field = true;
      } else if (is_block(t.text)) {
        if (!have_dim) Lexer::error(t, "amb_space must precede the data blocks");
        block(t, spec);
      } else if (is_unsupported(t.text)) {
        Lexer::error(t, "input type '" + t.text + "' is not supported", ErrorKind::UnsupportedBlock);
      } else if (auto g = goal_from_string(t.text)) {
        spec.goals.insert(*g);
      } else if (!t.text.empty() && std::isupper(static_cast<unsigned char>(t.text[0]))) {
        Lexer::error(t, "unknown computation goal '" + t.text + "'", ErrorKind::UnknownGoal);
      } else {
        Lexer::error(t, "unexpected '" + t.text + "'");
      }
    }
    if (!have_dim) fail(ErrorKind::SyntaxError, "missing amb_space");
    return spec;
  }

 private:
  static bool is_block(const std::string& s) {
    static const std::set<std::string> blocks{"vertices", "polytope", "cone", "extreme_rays", "inequalities",
                                              "inhom_inequalities", "equations", "inhom_equations"};
    return blocks.count(s) > 0;
  }

  static bool is_unsupported(const std::string& s) {
    static const std::set<std::string> unsupported{
        "grading", "lattice", "congruences", "inhom_congruences", "saturation", "cone_and_lattice",
        "strict_inequalities", "strict_signs", "signs", "excluded_faces", "dehomogenization", "offset",
        "open_facets", "hilbert_basis_rec_cone", "support_hyperplanes", "lattice_ideal", "toric_ideal",
        "normal_toric_ideal", "rees_algebra", "subspace", "projection_coordinates", "generated_lattice",
        "maximal_subspace", "monoid", "inhom_excluded_faces", "polyhedron"};
    return unsupported.count(s) > 0;
  }

  bool done() const { return pos_ >= tokens_.size(); }

  const Token& next() {
    if (done()) Lexer::error(tokens_.empty() ? Token{} : tokens_.back(), "unexpected end of input");
    return tokens_[pos_++];
  }

  static long integer(const Token& t, const std::string& what) {
    if (!is_integer_token(t.text)) Lexer::error(t, "expected " + what + ", found '" + t.text + "'");
    try {
      return std::stol(t.text);
    } catch (const std::exception&) {
      Lexer::error(t, what + " out of range");
    }
  }

  static RatPoly bracket_poly(const Token& t) {
    if (t.text.size() < 2 || t.text.front() != '(') Lexer::error(t, "expected a bracketed polynomial");
    try {
      return parse_poly(std::string_view(t.text).substr(1, t.text.size() - 2));
    } catch (const Error& e) {
      Lexer::error(t, e.what(), e.kind());
    }
  }

  FieldPtr number_field(const Token& start) {
    const Token& kw = next();
    if (kw.text != "min_poly") Lexer::error(kw, "expected 'min_poly'");
    const Token& poly_tok = next();
    RatPoly mu = bracket_poly(poly_tok);
    const Token& emb = next();
    if (emb.text != "embedding") Lexer::error(emb, "expected 'embedding'");
    const Token& iv = next();
    if (iv.text.size() < 2 || iv.text.front() != '[') Lexer::error(iv, "expected an interval '[c +/- r]' or '[lo, hi]'");
    const std::string inner = iv.text.substr(1, iv.text.size() - 2);
    Rational lo, hi;
    try {
      if (auto pm = inner.find("+/-"); pm != std::string::npos) {
        const std::string cs = inner.substr(0, pm), rs = inner.substr(pm + 3);
        detail::PolyParser c(cs), r(rs);
        const Rational center = c.parse_number(), radius = r.parse_number();
        c.skip_ws();
        r.skip_ws();
        if (!c.at_end() || !r.at_end()) Lexer::error(iv, "malformed interval");
        lo = center - radius;
        hi = center + radius;
      } else if (auto comma = inner.find(','); comma != std::string::npos) {
        const std::string as = inner.substr(0, comma), bs = inner.substr(comma + 1);
        detail::PolyParser a(as), b(bs);
        lo = a.parse_number();
        hi = b.parse_number();
        a.skip_ws();
        b.skip_ws();
        if (!a.at_end() || !b.at_end()) Lexer::error(iv, "malformed interval");
      } else {
        Lexer::error(iv, "expected an interval '[c +/- r]' or '[lo, hi]'");
      }
      return NumberField::create(mu, lo, hi);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SyntaxError && std::string(e.what()).rfind("line ", 0) == 0) throw;
      Lexer::error(start, e.what(), e.kind());
    }
  }

  NFElem element(const Token& t, const FieldPtr& field) {
    try {
      return parse_elem(t.text, field);
    } catch (const Error& e) {
      Lexer::error(t, e.what(), e.kind());
    }
  }

  void block(const Token& t, InputSpec& spec) {
    const std::size_t d = spec.poly.dim;
    const FieldPtr& field = spec.poly.field;
    const long rows = integer(next(), "row count");
    if (rows < 0) Lexer::error(t, "negative row count");
    const std::string& kind = t.text;
    const bool inhom = kind == "vertices" || kind.rfind("inhom_", 0) == 0;
    const std::size_t width = inhom ? d + 1 : d;
    for (long i = 0; i < rows; ++i) {
      Vec row;
      std::vector<const Token*> toks;
      for (std::size_t j = 0; j < width; ++j) {
        const Token& e = next();
        toks.push_back(&e);
        row.push_back(element(e, field));
      }
      if (kind == "vertices") {
        const auto den = row.back().as_rational();
        if (!den || sgn(*den) <= 0)
          Lexer::error(*toks.back(), "vertex denominator must be a positive rational number", ErrorKind::BadDenominator);
        const NFElem inv = row.back().inverse();
        row.pop_back();
        for (auto& x : row) x *= inv;
        spec.poly.vertices.push_back(std::move(row));
      } else if (kind == "polytope") {
        spec.poly.vertices.push_back(std::move(row));
      } else if (kind == "cone" || kind == "extreme_rays") {
        spec.poly.rays.push_back(std::move(row));
      } else {
        if (!inhom) row.push_back(NFElem(field));
        (kind.find("equations") != std::string::npos ? spec.poly.equations : spec.poly.inequalities).push_back(std::move(row));
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline InputSpec parse_input(std::string_view text) { return detail::InputParser(text).parse(); }

// --- writers -----------------------------------------------------------------

struct RunResults {
  Polyhedron poly;
  bool show_field = false;
  std::optional<std::vector<LatticePoint>> lattice_points;
  std::optional<FaceLattice> faces;
  std::optional<Triangulation> triangulation;
  std::optional<VolumeResult> volume;
  std::optional<Polyhedron> integer_hull;
  std::vector<AutomorphismGroup> automorphisms;
  unsigned euclid_digits = 12;
};

namespace detail {

inline const std::string out_stars(71, '*');
inline const std::string aut_stars(72, '*');

/// Right-aligned columns separated by one blank.
inline void write_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
  }
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) os << ' ';
      os << std::string(width[j] - r[j].size(), ' ') << r[j];
    }
    os << '\n';
  }
}

inline std::vector<std::vector<std::string>> render_rows(const std::vector<Vec>& rows, std::optional<long> append = {}) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rows) {
    std::vector<std::string> line;
    for (const auto& x : r) line.push_back(render_elem(x));
    if (append) line.push_back(std::to_string(*append));
    out.push_back(std::move(line));
  }
  return out;
}

/// "[mid +/- rad]" for the current enclosure of the generator, the midpoint
/// abbreviated in the middle when it is long.
inline std::string embedding_text(const NumberField& f) {
  auto g = f.generator();
  const Rational mid = (g->lo + g->hi) / 2, rad = (g->hi - g->lo) / 2;
  if (sgn(rad) == 0) return "[" + mid.get_str() + " +/- 0]";
  const long digits = std::max<long>(1, -floor_log10(rad).get_si());
  std::string m = detail::fixed_digits(round_half_away(mid * Rational(pow10(static_cast<unsigned long>(digits)))),
                                       static_cast<unsigned>(digits), sgn(mid) < 0);
  if (digits > 24) {
    const auto point = m.find('.');
    m = m.substr(0, point + 9) + "..." + m.substr(m.size() - 12);
  }
  auto [mant, e] = round_significant(rad, 3);
  // round the radius up so the printed interval still encloses the generator
  Rational shown(mant, 1);
  const Rational scale = e - 2 >= 0 ? Rational(pow10(static_cast<unsigned long>(e - 2)))
                                    : Rational(Integer(1), pow10(static_cast<unsigned long>(2 - e)));
  if (shown * scale < rad) ++mant;
  if (mant == 1000) {
    mant = 100;
    ++e;
  }
  std::string r = mant.get_str();
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", e < 0 ? '-' : '+', e < 0 ? -e : e);
  return "[" + m + " +/- " + r.substr(0, 1) + "." + r.substr(1) + buf + "]";
}

inline std::string point_row(const LatticePoint& x) {
  std::string s;
  for (const auto& c : x) s += c.get_str() + " ";
  return s + "1";
}

}  // namespace detail

inline std::string write_results(const RunResults& res) {
  std::ostringstream os;
  const Polyhedron& p = res.poly;
  if (res.show_field) {
    os << "Real embedded number field:\n";
    os << "min_poly (" << render_poly(p.field->min_poly()) << ") embedding " << detail::embedding_text(*p.field) << "\n\n";
  }
  if (p.empty) os << "polyhedron is empty\n";
  if (res.lattice_points) os << res.lattice_points->size() << " lattice points in polytope\n";
  os << p.vertices.size() << " vertices of polyhedron\n";
  os << p.rays.size() << " extreme rays of recession cone\n";
  os << p.hyperplanes.size() << " support hyperplanes of polyhedron (homogenized)\n";
  if (!p.equations.empty()) os << p.equations.size() << " equations\n";
  if (res.faces) {
    os << "f-vector:\n";
    for (std::size_t i = 0; i < res.faces->f_vector.size(); ++i) os << (i ? " " : "") << res.faces->f_vector[i].get_str();
    os << '\n';
  }
  os << "embedding dimension = " << p.embedding_dim() << '\n';
  os << "affine dimension of the polyhedron = " << p.affine_dim() << (p.full_dimensional() ? " (maximal)" : "") << '\n';
  os << "rank of recession cone = " << p.recession_rank << (p.is_polytope() && !p.empty ? " (polyhedron is polytope)" : "")
     << '\n';
  if (res.triangulation) os << "size of triangulation = " << res.triangulation->simplices.size() << '\n';
  if (res.volume) {
    os << "volume (lattice normalized) = " << render_elem(res.volume->normalized) << '\n';
    os << "volume (Euclidean) = " << to_significant(res.volume->euclidean, res.euclid_digits) << '\n';
  }
  if (res.integer_hull) os << "integer hull has " << res.integer_hull->vertices.size() << " vertices\n";
  for (const auto& g : res.automorphisms)
    os << to_string(g.kind) << " automorphism group has order " << g.order.get_str() << '\n';

  os << detail::out_stars << '\n';
  if (res.lattice_points) {
    os << res.lattice_points->size() << " lattice points in polytope:\n";
    for (const auto& x : *res.lattice_points) os << detail::point_row(x) << '\n';
  }
  os << p.vertices.size() << " vertices of polyhedron:\n";
  detail::write_table(os, detail::render_rows(p.vertices, 1));
  os << p.rays.size() << " extreme rays of recession cone:\n";
  detail::write_table(os, detail::render_rows(p.rays, 0));
  os << p.hyperplanes.size() << " support hyperplanes of polyhedron (homogenized):\n";
  detail::write_table(os, detail::render_rows(p.hyperplanes));
  if (!p.equations.empty()) {
    os << p.equations.size() << " equations:\n";
    detail::write_table(os, detail::render_rows(p.equations));
  }
  if (res.integer_hull) {
    const Polyhedron& h = *res.integer_hull;
    os << detail::out_stars << '\n';
    os << "integer hull:\n";
    os << h.vertices.size() << " vertices of integer hull:\n";
    detail::write_table(os, detail::render_rows(h.vertices, 1));
    os << h.hyperplanes.size() << " support hyperplanes of integer hull (homogenized):\n";
    detail::write_table(os, detail::render_rows(h.hyperplanes));
    if (!h.equations.empty()) {
      os << h.equations.size() << " equations of integer hull:\n";
      detail::write_table(os, detail::render_rows(h.equations));
    }
  }
  return os.str();
}

namespace detail {

inline std::string cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      out += (j == i ? "" : " ") + std::to_string(j + 1);
    }
    out += ") ";
  }
  return out + "--";
}

inline void write_perm_section(std::ostream& os, const std::vector<Permutation>& perms, std::size_t begin, std::size_t n,
                               const std::string& what) {
  std::vector<Permutation> local;
  for (const auto& p : perms) {
    Permutation q;
    for (std::size_t i = 0; i < n; ++i) q.push_back(p[begin + i] - begin);
    local.push_back(std::move(q));
  }
  os << local.size() << " permutations of " << n << ' ' << what << '\n';
  for (std::size_t k = 0; k < local.size(); ++k) {
    os << "Perm " << k + 1 << ":";
    for (auto x : local[k]) os << ' ' << x + 1;
    os << '\n';
  }
  os << "Cycle decompositions \n";
  for (std::size_t k = 0; k < local.size(); ++k) os << "Perm " << k + 1 << ": " << cycles(local[k]) << '\n';
  const auto orb = orbits(local, n);
  os << orb.size() << " orbits of " << what << '\n';
  for (std::size_t k = 0; k < orb.size(); ++k) {
    os << "Orbit " << k + 1 << " , length " << orb[k].size() << ": ";
    for (auto x : orb[k]) os << ' ' << x + 1;
    os << '\n';
  }
}

}  // namespace detail

inline std::string write_automorphisms(const AutomorphismGroup& g) {
  std::ostringstream os;
  os << to_string(g.kind) << " automorphism group of order " << g.order.get_str() << '\n';
  os << detail::aut_stars << '\n';
  detail::write_perm_section(os, g.generator_perms, 0, g.num_vertices, "vertices of polyhedron");
  if (g.num_rays > 0) {
    os << detail::aut_stars << '\n';
    detail::write_perm_section(os, g.generator_perms, g.num_vertices, g.num_rays, "extreme rays of recession cone");
  }
  os << detail::aut_stars << '\n';
  const std::size_t nf = g.facet_perms.empty() ? 0 : g.facet_perms[0].size();
  detail::write_perm_section(os, g.facet_perms, 0, nf, "support hyperplanes");
  return os.str();
}

/// Simplices as 1-based vertex indices followed by the determinant.
inline std::string write_triangulation(const Triangulation& t) {
  std::ostringstream os;
  os << t.simplices.size() << '\n' << (t.generators.empty() ? 0 : t.generators[0].size()) << '\n';
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : t.simplices) {
    std::vector<std::string> r;
    for (auto i : s.generators) r.push_back(std::to_string(i + 1));
    r.push_back(render_elem(s.det.abs()));
    rows.push_back(std::move(r));
  }
  detail::write_table(os, rows);
  return os.str();
}

/// Faces as generator incidence strings with their dimension.
inline std::string write_face_lattice(const FaceLattice& fl, std::size_t num_generators) {
  std::ostringstream os;
  os << fl.faces.size() + 1 << '\n' << num_generators << '\n';
  os << std::string(num_generators, '0') << " -1\n";
  std::vector<std::size_t> order(fl.faces.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (fl.dims[a] != fl.dims[b]) return fl.dims[a] < fl.dims[b];
    return fl.faces[a] < fl.faces[b];
  });
  for (auto k : order) {
    std::string bits;
    for (std::size_t i = 0; i < num_generators; ++i) bits += fl.faces[k].test(i) ? '1' : '0';
    os << bits << ' ' << fl.dims[k] << '\n';
  }
  return os.str();
}

}  // namespace algpoly
