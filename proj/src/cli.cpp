#include "gsc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsc/classify.hpp"
#include "gsc/dimension.hpp"
#include "gsc/disconnect.hpp"
#include "gsc/errors.hpp"
#include "gsc/render.hpp"
#include "gsc/sequence_io.hpp"
#include "gsc/structure.hpp"

namespace gsc::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string big(const BigInt& v) { return v.str(); }

// Rounded to 12 significant digits, then printed shortest.
double round12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

Json cell_json(Cell c) { return Json::array({c.x, c.y}); }

Json box_json(const BoundingBox& b) {
  return {{"min_x", b.min_x}, {"max_x", b.max_x}, {"min_y", b.min_y}, {"max_y", b.max_y}};
}

Json classification_json(const Classification& c) {
  Json j;
  for (auto t : kAllTypes) j[std::string(to_string(t))] = c.types.has(t);
  Json w;
  auto cutting = [](const std::optional<CuttingWitness>& cw, const char* a, const char* b) {
    if (!cw) return Json(nullptr);
    return Json{{"component", cw->component}, {a, cw->first}, {b, cw->second}};
  };
  auto diagonal = [](const std::optional<DiagonalWitness>& d) {
    if (!d) return Json(nullptr);
    Json o{{"case", d->which_case}, {"component1", d->component1}, {"component2", d->component2}};
    if (d->which_case == 2) {
      o["j1"] = d->j1;
      o["j2"] = d->j2;
      o["i1"] = d->i1;
      o["i2"] = d->i2;
    }
    return o;
  };
  auto corner = [](const std::optional<CornerWitness>& cw) {
    if (!cw) return Json(nullptr);
    Json cells = Json::array();
    for (const auto& p : cw->corners) cells.push_back(Json::array({p.i, p.j}));
    return Json{{"corners", cells}};
  };
  w["V"] = cutting(c.v, "i1", "i2");
  w["H"] = cutting(c.h, "j1", "j2");
  w["D1"] = diagonal(c.d1);
  w["D2"] = diagonal(c.d2);
  w["C1"] = corner(c.c1);
  w["C2"] = corner(c.c2);
  j["witnesses"] = w;
  Json comps = Json::array();
  for (const auto& comp : c.components) {
    Json cells = Json::array();
    for (const auto& p : comp) cells.push_back(Json::array({p.i, p.j}));
    comps.push_back(cells);
  }
  j["components"] = comps;
  return j;
}

Json clause_json(const std::optional<ClauseWitness>& w) {
  if (!w) return nullptr;
  Json j{{"type", std::string(to_string(w->type))}, {"cycle_positions", w->cycle_positions}};
  if (!w->generator_rule.empty()) j["generator_rule"] = w->generator_rule;
  return j;
}

Json rational_pair(const std::pair<Rational, Rational>& p) { return Json::array({p.first.str(), p.second.str()}); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ParseError::Kind::malformed_file, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string one_line(std::string s) {
  for (auto& ch : s)
    if (ch == '\n' || ch == '\r') ch = ' ';
  return s;
}

struct Options {
  std::uint64_t cap = kDefaultCellCap;
  unsigned threads = 1;
  EnumerationOptions enumeration() const { return {cap, threads}; }
};

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalised Sierpinski carpets: construction, classification and audits", "gsc"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--cap", opt.cap, "Largest number of cells any step may enumerate")->check(CLI::PositiveNumber);
  app.add_option("--threads", opt.threads, "Worker threads for level expansion")->check(CLI::Range(1u, 256u));

  std::function<Json()> action;
  std::string seq_path;
  int level = 1;

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "Classify one pattern file");
  std::string pattern_path;
  bool strict = false;
  classify_cmd->add_option("pattern", pattern_path, "Pattern text file")->required();
  classify_cmd->add_flag("--strict", strict, "Require distinct components in the two-component diagonal case");
  classify_cmd->callback([&] {
    action = [&] {
      const auto p = parse_pattern(read_file(pattern_path));
      return classification_json(classify(p, ClassifyOptions{strict}));
    };
  });

  // render
  auto* render_cmd = app.add_subcommand("render", "Write level n as a binary PGM");
  std::string out_path;
  render_cmd->add_option("--seq", seq_path, "Sequence file")->required();
  render_cmd->add_option("--level", level, "Level")->required()->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--out", out_path, "Output file")->required();
  render_cmd->callback([&] {
    action = [&] {
      const auto spec = load_sequence(seq_path);
      const auto bytes = render_pgm(spec, level, opt.enumeration());
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw Error("cannot write '" + out_path + "'");
      f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
      const auto width = level_width_checked(spec, level);
      return Json{{"file", out_path}, {"level", level}, {"width", width}, {"bytes", bytes.size()}};
    };
  });

  // components
  auto* comp_cmd = app.add_subcommand("components", "Connected components of the white (or black) set");
  std::string adjacency = "corner";
  bool black_set = false;
  bool dump_cells = false;
  comp_cmd->add_option("--seq", seq_path, "Sequence file")->required();
  comp_cmd->add_option("--level", level, "Level")->required()->check(CLI::NonNegativeNumber);
  comp_cmd->add_option("--adjacency", adjacency, "corner or side")->check(CLI::IsMember({"corner", "side"}));
  comp_cmd->add_flag("--black", black_set, "Use the black set instead of the white set");
  comp_cmd->add_flag("--cells", dump_cells, "List the cells of every component");
  comp_cmd->callback([&] {
    action = [&] {
      const auto spec = load_sequence(seq_path);
      const auto sets = materialize(spec, level, opt.enumeration());
      const auto mode = adjacency == "side" ? Adjacency::side : Adjacency::corner;
      const auto cells = black_set ? sets.black(opt.cap) : sets.white();
      const auto report = components(cells, mode);
      Json list = Json::array();
      for (const auto& c : report.components) {
        Json e{{"size", c.cells.size()}, {"box", box_json(c.box)}};
        if (dump_cells) {
          Json cs = Json::array();
          for (const auto& cell : c.cells) cs.push_back(cell_json(cell));
          e["cells"] = cs;
        }
        list.push_back(e);
      }
      return Json{{"level", level},
                  {"width", sets.width()},
                  {"set", black_set ? "black" : "white"},
                  {"adjacency", adjacency},
                  {"cells", cells.size()},
                  {"count", report.components.size()},
                  {"components", list}};
    };
  });

  // verify-paths
  auto* paths_cmd = app.add_subcommand("verify-paths", "Build and check a black path family");
  int k1 = 2, k2 = 3, k3 = 3;
  std::string orientation = "vertical";
  bool dump_corridors = false;
  bool with_curves = false;
  paths_cmd->add_option("--seq", seq_path, "Sequence file")->required();
  paths_cmd->add_option("--k1", k1, "Level carrying the cutting type")->required();
  paths_cmd->add_option("--k2", k2, "Level carrying C1")->required();
  paths_cmd->add_option("--k3", k3, "Level carrying C2; paths live at this level")->required();
  paths_cmd->add_option("--orientation", orientation, "vertical, horizontal, diag1 or diag2")
      ->check(CLI::IsMember({"vertical", "horizontal", "diag1", "diag2"}));
  paths_cmd->add_flag("--corridors", dump_corridors, "Include every path's cells and curve vertices");
  paths_cmd->add_flag("--curves", with_curves, "Also build and check separating curves");
  paths_cmd->callback([&] {
    action = [&] {
      const auto spec = load_sequence(seq_path);
      const auto eo = opt.enumeration();
      PathFamily family;
      PathOrientation o = PathOrientation::vertical;
      if (orientation == "vertical") {
        family = build_vertical_paths(spec, k1, k2, k3, eo);
      } else if (orientation == "horizontal") {
        o = PathOrientation::horizontal;
        family = build_horizontal_paths(spec, k1, k2, k3, eo);
      } else {
        o = orientation == "diag1" ? PathOrientation::diag1 : PathOrientation::diag2;
        family = build_diagonal_paths(spec, k1, k2, k3, o == PathOrientation::diag1 ? PatternType::D1 : PatternType::D2,
                                      eo);
      }
      Json lengths = Json::array();
      for (const auto& p : family.paths) lengths.push_back(p.size());
      Json j{{"orientation", orientation},
             {"level", family.level},
             {"width", family.width},
             {"period", family.period},
             {"step", family.step},
             {"family_size", family.paths.size()},
             {"periodic", family.periodic},
             {"from_translates", family.from_translates},
             {"connects", family.connects},
             {"path_lengths", lengths}};
      if (o == PathOrientation::vertical || o == PathOrientation::horizontal) {
        const auto slices = verify_slice_translations(family);
        j["slice_translations"] = {{"rows", slices.rows}, {"columns", slices.columns}};
      }
      if (dump_corridors) {
        Json corridors = Json::array();
        for (const auto& p : family.paths) {
          Json cs = Json::array();
          for (const auto& c : p) cs.push_back(cell_json(c));
          corridors.push_back(cs);
        }
        j["corridors"] = corridors;
      }
      if (with_curves) {
        const auto report = build_separating_curves(spec, k1, k2, k3, o, eo);
        Json c{{"count", report.curves.size()}, {"avoids_white", report.avoids_white}};
        if (o == PathOrientation::vertical || o == PathOrientation::horizontal) {
          c["translate_within_column"] = report.translate_within_column;
          c["translate_within_row"] = report.translate_within_row;
          c["curves_are_translates"] = report.curves_are_translates;
          c["confined_to_column"] = report.confined_to_column;
        } else {
          c["containment_x"] = report.containment_x;
          c["containment_y"] = report.containment_y;
        }
        c["all_verified"] = report.all_verified();
        if (dump_corridors) {
          Json polys = Json::array();
          for (const auto& pl : report.curves) {
            Json vs = Json::array();
            for (std::size_t i = 0; i < pl.vertices.size(); ++i) vs.push_back(rational_pair(pl.vertex(i)));
            polys.push_back(vs);
          }
          c["polylines"] = polys;
        }
        j["curves"] = c;
      }
      return j;
    };
  });

  // audit-lemma
  auto* audit_cmd = app.add_subcommand("audit-lemma", "Measure white components against a lemma's bounds");
  int lemma = 1;
  std::vector<int> indices;
  audit_cmd->add_option("--seq", seq_path, "Sequence file")->required();
  audit_cmd->add_option("--lemma", lemma, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
  audit_cmd->add_option("--k", indices, "k1 k2 k3 k4 k5 k6 (comma or space separated)")
      ->required()
      ->expected(6)
      ->delimiter(',');
  audit_cmd->callback([&] {
    action = [&] {
      const auto spec = load_sequence(seq_path);
      std::array<int, 6> k{};
      std::copy(indices.begin(), indices.end(), k.begin());
      const auto r = audit_lemma(spec, lemma, k, opt.enumeration());
      Json violations = Json::array();
      for (const auto& v : r.violations)
        violations.push_back({{"component", v.component},
                              {"box", box_json(v.box)},
                              {"extent_x", v.extent_x.str()},
                              {"extent_y", v.extent_y.str()}});
      return Json{{"lemma", r.lemma},
                  {"indices", r.indices},
                  {"level", r.level},
                  {"width", r.width},
                  {"white_cells", r.white_cells},
                  {"component_count", r.component_count},
                  {"bound_x", r.bound_x.str()},
                  {"bound_y", r.bound_y.str()},
                  {"worst_x", r.worst_x.str()},
                  {"worst_y", r.worst_y.str()},
                  {"violations", violations},
                  {"passed", r.passed()}};
    };
  });

  // check-theorem
  auto* theorem_cmd = app.add_subcommand("check-theorem", "Decide the sufficient total-disconnectedness condition");
  theorem_cmd->add_option("--seq", seq_path, "Sequence file")->required();
  theorem_cmd->callback([&] {
    action = [&] {
      const auto v = check_theorem(load_sequence(seq_path));
      return Json{{"status", std::string(to_string(v.status))},
                  {"theorem", v.theorem},
                  {"reason", v.reason},
                  {"witnesses",
                   {{"T1", clause_json(v.t1)}, {"T2", clause_json(v.t2)}, {"C1", clause_json(v.c1)},
                    {"C2", clause_json(v.c2)}}}};
    };
  });

  // trend
  auto* trend_cmd = app.add_subcommand("trend", "Largest white-component extents per level");
  int max_level = 3;
  trend_cmd->add_option("--seq", seq_path, "Sequence file")->required();
  trend_cmd->add_option("--levels", max_level, "Highest level")->required()->check(CLI::NonNegativeNumber);
  trend_cmd->callback([&] {
    action = [&] {
      const auto points = diameter_trend(load_sequence(seq_path), max_level, opt.enumeration());
      Json list = Json::array();
      bool x_mono = true, y_mono = true;
      for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        if (i > 0) {
          x_mono = x_mono && p.worst_x <= points[i - 1].worst_x;
          y_mono = y_mono && p.worst_y <= points[i - 1].worst_y;
        }
        list.push_back({{"level", p.level},
                        {"width", p.width},
                        {"components", p.components},
                        {"worst_x", p.worst_x.str()},
                        {"worst_y", p.worst_y.str()}});
      }
      return Json{{"levels", list}, {"non_increasing", {{"x", x_mono}, {"y", y_mono}}}};
    };
  });

  // dimension
  auto* dim_cmd = app.add_subcommand("dimension", "Box-counting estimates from exact counts");
  int dim_levels = 1;
  dim_cmd->add_option("--seq", seq_path, "Sequence file")->required();
  dim_cmd->add_option("--levels", dim_levels, "Estimate levels 1..N")->required()->check(CLI::PositiveNumber);
  dim_cmd->callback([&] {
    action = [&] {
      const auto spec = load_sequence(seq_path);
      Json list = Json::array();
      for (int n = 1; n <= dim_levels; ++n) {
        const auto e = estimate(spec, n, opt.enumeration());
        list.push_back({{"level", e.level},
                        {"white_count", big(e.white_count)},
                        {"width", big(e.width)},
                        {"estimate", round12(e.estimate)}});
      }
      return Json{{"levels", list}};
    };
  });

  // gen-example
  auto* gen_cmd = app.add_subcommand("gen-example", "Write an example sequence file");
  std::string kind = "dim2";
  int gen_levels = 6;
  std::string gen_out;
  gen_cmd->add_option("--kind", kind, "Example family")->check(CLI::IsMember({"dim2"}));
  gen_cmd->add_option("--levels", gen_levels, "Explicit levels before the generator")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out", gen_out, "Output file")->required();
  gen_cmd->callback([&] {
    action = [&] {
      const auto text = serialize_sequence(gen_dim2_example(gen_levels));
      std::ofstream f(gen_out, std::ios::binary);
      if (!f) throw Error("cannot write '" + gen_out + "'");
      f << text;
      return Json{{"kind", kind}, {"levels", gen_levels}, {"file", gen_out}};
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gsc: " << one_line(e.what()) << "\n";
    return 2;
  }

  try {
    out << action().dump(2) << "\n";
    return 0;
  } catch (const ParseError& e) {
    err << "gsc: " << one_line(e.what()) << "\n";
    return 2;
  } catch (const Error& e) {
    err << "gsc: " << one_line(e.what()) << "\n";
    return 1;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gsc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gsc::cli
