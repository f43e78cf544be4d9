// Command-line front end: realize fixed-angle polygon spaces as hyperbolic
// orthoschemes, classify the glued cone-manifolds, reproduce the
// Deligne--Mostow structure table, and inspect the Hermitian form on doubled
// polygons.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyscheme/census.hpp"
#include "polyscheme/cone_manifold.hpp"
#include "polyscheme/errors.hpp"
#include "polyscheme/hermitian.hpp"
#include "polyscheme/json_io.hpp"
#include "polyscheme/orthoscheme.hpp"

namespace {

using namespace polyscheme;

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Angle grammar: "p/q" means p*pi/q, a decimal literal means radians.
Angle parse_angle(const std::string& tok) {
  try {
    const auto slash = tok.find('/');
    if (slash != std::string::npos) {
      const long long p = std::stoll(tok.substr(0, slash));
      const long long q = std::stoll(tok.substr(slash + 1));
      return Angle::rational(p, q);
    }
    return Angle::radians(std::stod(tok));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error("bad angle token: '" + tok + "'");
  }
}

AngleList parse_angles(const std::string& csv) {
  std::vector<Angle> a;
  for (const std::string& tok : split_list(csv)) a.push_back(parse_angle(tok));
  return validate(a);
}

Slope parse_slope(const std::string& tok) {
  std::string t = tok;
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    if (t.substr(1) == "inf") return Slope::infinite();
  }
  if (t == "inf") return Slope::infinite();
  try {
    return Slope::finite(std::stod(t));
  } catch (const std::exception&) {
    throw Error("bad slope token: '" + tok + "'");
  }
}

SlopeList parse_slopes(const std::string& csv) {
  SlopeList s;
  for (const std::string& tok : split_list(csv)) s.push_back(parse_slope(tok));
  return s;
}

SlopeList tumarkin_slopes() {
  const double root5 = std::sqrt(5.0);
  return {Slope::finite(root5),  Slope::finite(-2.0), Slope::finite(-1.0),
          Slope::finite(0.0),    Slope::finite(1.0),  Slope::infinite(),
          Slope::finite(-3.0),   Slope::finite((root5 - 3.0) / 2.0)};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

const char* character_name(VertexCharacter c) {
  switch (c) {
    case VertexCharacter::spacelike: return "spacelike";
    case VertexCharacter::lightlike: return "lightlike";
    case VertexCharacter::timelike: return "timelike";
  }
  return "?";
}

void print_orthoscheme_report(const OrthoschemeReport& r) {
  std::printf("angles: %s  (n = %d)\n", r.angles.str().c_str(), r.angles.dimension());
  std::printf("type: %d  dimension: %d\n", r.type.type, r.type.dimension);
  std::printf("characters:");
  for (int i = 0; i < r.angles.size(); ++i)
    std::printf(" %d:%s", i + 1, character_name(r.type.characters[i]));
  std::printf("\n");
  const int f = r.relations.size();
  int orthogonal_pairs = 0;
  for (int i = 0; i < f; ++i) {
    for (int j = i + 1; j < f; ++j) {
      const FacetRelation& rel = r.relations.at(i, j);
      if (rel.kind == FacetRelation::Kind::orthogonal) {
        ++orthogonal_pairs;
        continue;
      }
      std::printf("F%d-F%d: ", r.relations.facets[i] + 1, r.relations.facets[j] + 1);
      switch (rel.kind) {
        case FacetRelation::Kind::angle:
          std::printf("angle %.12g (pi/theta = %.12g)\n", rel.theta, M_PI / rel.theta);
          break;
        case FacetRelation::Kind::parallel:
          std::printf("parallel\n");
          break;
        case FacetRelation::Kind::ultraparallel:
          std::printf("ultraparallel, distance %.12g (cosh d = %.12g)\n", rel.distance,
                      std::cosh(rel.distance));
          break;
        default:
          break;
      }
    }
  }
  if (orthogonal_pairs > 0)
    std::printf("orthogonal: %d remaining facet pair(s)\n", orthogonal_pairs);
  if (r.diagram) {
    std::printf("coxeter: yes  (%s with %zu nodes)\n",
                r.diagram->shape == CoxeterDiagram::Shape::cycle ? "cycle" : "chain",
                r.diagram->nodes.size());
  } else {
    std::printf("coxeter: no\n");
  }
  std::printf("compact: %s", r.compactness.compact ? "yes" : "no");
  if (r.compactness.witness)
    std::printf("  (contiguous run %d..%d sums to pi)", r.compactness.witness->first + 1,
                r.compactness.witness->second + 1);
  std::printf("\nfinite volume: yes\n");
}

void print_classification(const Classification& c) {
  std::printf("angles: %s  (n = %d)\n", c.angles.str().c_str(), c.angles.dimension());
  std::printf("orderings glued: %lld\n", element_count(c.angles.dimension()));
  std::printf("verdict: %s\n", to_string(c.verdict).c_str());
  std::printf("compact: %s\n", c.compact ? "yes" : "no");
  std::printf("double cover components: %d\n", c.connectivity.components);
  // Group the labeled strata by their angle values for the human view.
  std::vector<std::string> lines;
  for (const StratumReport& s : c.strata.singular) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "stratum (%.6g, %.6g, %.6g): theta = %.12g%s", s.values[0],
                  s.values[1], s.values[2], s.theta, s.matched_k ? "" : "  [not 2*pi/k]");
    std::string line = buf;
    if (s.matched_k) line += "  = 2*pi/" + std::to_string(*s.matched_k);
    lines.push_back(line);
  }
  std::sort(lines.begin(), lines.end());
  std::string last;
  int repeat = 0;
  auto flush = [&] {
    if (last.empty()) return;
    if (repeat > 1)
      std::printf("%s  (x%d labeled triples)\n", last.c_str(), repeat);
    else
      std::printf("%s\n", last.c_str());
  };
  for (const std::string& line : lines) {
    if (line == last) {
      ++repeat;
      continue;
    }
    flush();
    last = line;
    repeat = 1;
  }
  flush();
  if (c.strata.singular.empty()) std::printf("no singular strata\n");
  if (!c.strata.ideal.empty())
    std::printf("ideal (sum pi) triples: %zu\n", c.strata.ideal.size());
}

int run(int argc, char** argv) {
  CLI::App app{"Polygon angle spaces as hyperbolic orthoschemes and cone-manifolds"};
  app.require_subcommand(1);

  std::string angles_csv, slopes_csv, preset, dot_path, svg_path, heights_csv;
  bool as_json = false;
  int max_den = 12, kmax_search = 100, kmax_coxeter = 10000;
  double search_tol = 1e-9;

  CLI::App* ortho = app.add_subcommand("orthoscheme", "Facet relations and Coxeter data");
  ortho->add_option("--angles", angles_csv, "comma-separated angles (p/q = p*pi/q, decimals = radians)")
      ->required();
  ortho->add_option("--dot", dot_path, "write the Coxeter diagram as Graphviz DOT");
  ortho->add_flag("--json", as_json, "machine-readable output");
  ortho->add_option("--kmax", kmax_coxeter, "largest pi/k label tested");

  CLI::App* cone = app.add_subcommand("cone-manifold", "Classify the glued angle space");
  cone->add_option("--angles", angles_csv)->required();
  cone->add_flag("--json", as_json);

  CLI::App* table = app.add_subcommand("table", "Reproduce the Deligne-Mostow structure column");
  table->add_flag("--json", as_json);

  CLI::App* search = app.add_subcommand("search", "Scan rational triples for orbifold cone angles");
  search->add_option("--max-den", max_den, "largest denominator")->required();
  search->add_option("--kmax", kmax_search, "largest k in 2*pi/k");
  search->add_option("--tol", search_tol, "matching tolerance");
  search->add_flag("--json", as_json);

  CLI::App* slopes = app.add_subcommand("from-slopes", "Recover angles from normal-line slopes");
  slopes->add_option("--slopes", slopes_csv, "comma-separated slopes, 'inf' for vertical");
  slopes->add_option("--preset", preset, "named slope list (tumarkin)");
  slopes->add_option("--dot", dot_path);
  slopes->add_flag("--json", as_json);

  CLI::App* herm = app.add_subcommand("hermitian", "Complex mixed-area form on doubled polygons");
  herm->add_option("--angles", angles_csv)->required();
  herm->add_option("--heights", heights_csv, "support numbers (default: all 1)");
  herm->add_option("--svg", svg_path, "write the unfolding as SVG");
  herm->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  auto emit_orthoscheme = [&](const AngleList& a) {
    const OrthoschemeReport report = orthoscheme_report(a, tol::kCoxeter, kmax_coxeter);
    if (as_json)
      std::printf("%s\n", to_json(report).c_str());
    else
      print_orthoscheme_report(report);
    if (!dot_path.empty()) {
      if (report.diagram)
        write_file(dot_path, to_dot(*report.diagram));
      else
        std::printf("not Coxeter; no diagram written to %s\n", dot_path.c_str());
    }
  };

  if (ortho->parsed()) {
    emit_orthoscheme(parse_angles(angles_csv));
  } else if (cone->parsed()) {
    const Classification c = classify(parse_angles(angles_csv));
    if (as_json)
      std::printf("%s\n", to_json(c).c_str());
    else
      print_classification(c);
  } else if (table->parsed()) {
    const TableReport report = reproduce_table();
    std::string text;
    if (as_json) {
      text = to_json(report) + "\n";
    } else {
      text = "  T  angles                          computed      expected\n";
      const auto& rows = dm_table();
      char buf[160];
      for (size_t i = 0; i < report.rows.size(); ++i) {
        const RowResult& r = report.rows[i];
        std::snprintf(buf, sizeof buf, "%3d  %-30s  %-12s  %-12s  %s\n", r.thurston_id,
                      rows[i].angles.str().c_str(), to_string(r.computed).c_str(),
                      to_string(r.expected).c_str(), r.match ? "ok" : "MISMATCH");
        text += buf;
      }
      text += report.all_match ? "36/36 match\n" : "MISMATCHES PRESENT\n";
    }
    // A mismatch exits nonzero, so the report goes to the error stream then.
    std::fputs(text.c_str(), report.all_match ? stdout : stderr);
    return report.all_match ? 0 : 1;
  } else if (search->parsed()) {
    const auto hits = rational_search(max_den, kmax_search, search_tol);
    if (as_json) {
      std::printf("%s\n", to_json(hits).c_str());
    } else {
      for (const SearchHit& h : hits)
        std::printf("(%s, %s, %s) -> k = %d  cos(theta/2) = %.12g\n", h.triple[0].str().c_str(),
                    h.triple[1].str().c_str(), h.triple[2].str().c_str(), h.k, h.cos_half_theta);
      std::printf("%zu hit(s), max_den = %d\n", hits.size(), max_den);
    }
  } else if (slopes->parsed()) {
    SlopeList list;
    if (!preset.empty()) {
      if (preset != "tumarkin") throw Error("unknown preset: " + preset);
      list = tumarkin_slopes();
    } else if (!slopes_csv.empty()) {
      list = parse_slopes(slopes_csv);
    } else {
      throw Error("from-slopes needs --slopes or --preset");
    }
    const AngleList a = angles_from_slopes(list);
    if (!as_json) std::printf("recovered angles (radians): %s\n", a.str().c_str());
    emit_orthoscheme(a);
  } else if (herm->parsed()) {
    const AngleList a = parse_angles(angles_csv);
    SupportVector h(a.size(), 1.0);
    if (!heights_csv.empty()) {
      h.clear();
      for (const std::string& tok : split_list(heights_csv)) h.push_back(std::stod(tok));
    }
    const HermitianMatrix M = hermitian_matrix(a);
    const Signature sig = signature(M);
    const double residual = embedding_residual(a);
    if (as_json) {
      std::printf(
          "{\"signature\":[%d,%d,%d],\"embedding_residual\":%.17g}\n", sig.negative, sig.zero,
          sig.positive, residual);
    } else {
      std::printf("signature of M: (%d, %d, %d)   expected (1, 2, n) = (1, 2, %d)\n", sig.negative,
                  sig.zero, sig.positive, a.dimension());
      std::printf("embedding residual |M(f u_i, f u_j) - 2 m(u_i, u_j)|: %.3g\n", residual);
    }
    if (!svg_path.empty()) {
      const Unfolding u = unfold_double(a, h);
      write_file(svg_path, to_svg(u));
      if (!as_json) std::printf("unfolding written to %s\n", svg_path.c_str());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const polyscheme::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
