#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "ratsemi/algebra.hpp"
#include "ratsemi/experiments.hpp"
#include "ratsemi/expression.hpp"
#include "ratsemi/halfplane.hpp"
#include "ratsemi/hausdorff.hpp"
#include "ratsemi/moebius.hpp"
#include "ratsemi/raster.hpp"
#include "ratsemi/saturation.hpp"

namespace ratsemi::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  int workers = 1;
  bool timing = false;
};

struct SceneFlags {
  std::optional<std::string> config;
  std::vector<std::string> generators;
  std::optional<std::size_t> orbit_length;
  std::optional<std::size_t> burn_in;
  std::optional<int> word_length_max;
  std::vector<double> window;
  std::vector<int> resolution;
};

struct Scene {
  SemigroupSpec spec;
  std::vector<std::string> sources;
  std::string out_dir = ".";
};

RationalMap parse_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_and_lower(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

void add_scene_flags(CLI::App* cmd, SceneFlags& s) {
  cmd->add_option("--config", s.config, "JSON scene file");
  cmd->add_option("--gen", s.generators, "generator expression (repeatable)");
  cmd->add_option("--orbit-length", s.orbit_length);
  cmd->add_option("--burn-in", s.burn_in);
  cmd->add_option("--word-length-max", s.word_length_max);
  cmd->add_option("--window", s.window, "cx cy width height")->expected(4);
  cmd->add_option("--resolution", s.resolution, "w h")->expected(2);
}

Scene load_scene(const SceneFlags& flags, const Globals& g) {
  Scene scene;
  SemigroupSpec& spec = scene.spec;
  if (flags.config) {
    std::ifstream in(*flags.config);
    if (!in) throw UsageError("cannot read config " + *flags.config);
    json cfg;
    try {
      cfg = json::parse(in);
      static const std::set<std::string> known = {"generators", "seed",   "orbit_length",    "burn_in",
                                                  "word_length_max", "window", "resolution", "output_directory"};
      if (!cfg.is_object()) throw UsageError("config must be a JSON object");
      for (const auto& [key, _] : cfg.items()) {
        if (!known.contains(key)) throw UsageError("unknown config key '" + key + "'");
      }
      if (cfg.contains("generators")) scene.sources = cfg["generators"].get<std::vector<std::string>>();
      if (cfg.contains("seed")) spec.seed = cfg["seed"].get<std::uint64_t>();
      if (cfg.contains("orbit_length")) spec.orbit_length = cfg["orbit_length"].get<std::size_t>();
      if (cfg.contains("burn_in")) spec.burn_in = cfg["burn_in"].get<std::size_t>();
      if (cfg.contains("word_length_max")) spec.word_length_max = cfg["word_length_max"].get<int>();
      if (cfg.contains("window")) {
        const json& w = cfg["window"];
        for (const auto& [key, _] : w.items()) {
          if (key != "cx" && key != "cy" && key != "width" && key != "height") {
            throw UsageError("unknown window key '" + key + "'");
          }
        }
        spec.window.cx = w.value("cx", spec.window.cx);
        spec.window.cy = w.value("cy", spec.window.cy);
        spec.window.width = w.value("width", spec.window.width);
        spec.window.height = w.value("height", spec.window.height);
      }
      if (cfg.contains("resolution")) {
        const json& r = cfg["resolution"];
        for (const auto& [key, _] : r.items()) {
          if (key != "w" && key != "h") throw UsageError("unknown resolution key '" + key + "'");
        }
        spec.resolution.w = r.value("w", spec.resolution.w);
        spec.resolution.h = r.value("h", spec.resolution.h);
      }
      if (cfg.contains("output_directory")) scene.out_dir = cfg["output_directory"].get<std::string>();
    } catch (const json::exception& e) {
      throw UsageError("config " + *flags.config + ": " + e.what());
    }
  }
  if (!flags.generators.empty()) scene.sources = flags.generators;
  if (flags.orbit_length) spec.orbit_length = *flags.orbit_length;
  if (flags.burn_in) spec.burn_in = *flags.burn_in;
  if (flags.word_length_max) spec.word_length_max = *flags.word_length_max;
  if (!flags.window.empty()) spec.window = Window{flags.window[0], flags.window[1], flags.window[2], flags.window[3]};
  if (!flags.resolution.empty()) spec.resolution = Resolution{flags.resolution[0], flags.resolution[1]};
  if (g.seed) spec.seed = *g.seed;
  if (g.out_dir) scene.out_dir = *g.out_dir;
  spec.workers = g.workers;

  if (scene.sources.empty()) throw UsageError("no generators given (use --gen or a config file)");
  for (std::size_t k = 0; k < scene.sources.size(); ++k) {
    spec.generators.push_back(parse_flag("generator " + std::to_string(k), scene.sources[k]));
  }
  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return scene;
}

json scene_json(const Scene& scene) {
  const SemigroupSpec& s = scene.spec;
  json gens = json::array();
  for (const RationalMap& f : s.generators) gens.push_back(integral_form(f));
  json j;
  j["generators"] = gens;
  j["seed"] = s.seed;
  j["orbit_length"] = s.orbit_length;
  j["burn_in"] = s.burn_in;
  j["word_length_max"] = s.word_length_max;
  j["workers"] = s.workers;
  j["window"] = {{"cx", s.window.cx}, {"cy", s.window.cy}, {"width", s.window.width}, {"height", s.window.height}};
  j["resolution"] = {{"w", s.resolution.w}, {"h", s.resolution.h}};
  return j;
}

std::vector<std::string> scene_maps(const Scene& scene) {
  std::vector<std::string> maps;
  for (std::size_t k = 0; k < scene.spec.generators.size(); ++k) {
    maps.push_back("g" + std::to_string(k) + " = " + integral_form(scene.spec.generators[k]));
  }
  return maps;
}

class Output {
 public:
  Output(std::string dir, std::ostream& out) : dir_(std::move(dir)), out_(out) {
    std::filesystem::create_directories(dir_);
  }

  void write(const std::string& name, const std::string& bytes) {
    const std::string path = (std::filesystem::path(dir_) / name).string();
    write_file(path, bytes);
    paths_.push_back(path);
    out_ << "wrote " << path << "\n";
  }

  const std::vector<std::string>& paths() const { return paths_; }

 private:
  std::string dir_;
  std::ostream& out_;
  std::vector<std::string> paths_;
};

std::size_t count_infinite(const PointCloud& c) {
  std::size_t n = 0;
  for (const SpherePoint& p : c.points) n += p.infinite ? 1 : 0;
  return n;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_lift(const std::string& map_text, const std::optional<std::string>& against, std::ostream& out,
             std::ostream& err) {
  const RationalMap f = parse_flag("--map", map_text);
  RationalMap ft;
  try {
    ft = lift(f);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    out << "verified: false\n";
    return kExitCheckFailed;
  }
  const bool verified = verify_semiconjugacy(f, ft, halfplane_link());
  out << integral_form(ft) << "\n";
  out << "verified: " << (verified ? "true" : "false") << "\n";
  bool ok = verified;
  if (against) {
    const RationalMap claimed = parse_flag("--against", *against);
    const bool same = equals(ft, claimed);
    out << "matches claimed lift: " << (same ? "true" : "false") << "\n";
    ok = ok && same;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const std::string& lower_text, const std::string& upper_text, const std::optional<std::string>& link,
               std::ostream& out) {
  const RationalMap lower = parse_flag("--lower", lower_text);
  const RationalMap upper = parse_flag("--upper", upper_text);
  const RationalMap phi = link ? parse_flag("--link", *link) : halfplane_link();
  const bool holds = verify_semiconjugacy(lower, upper, phi);
  out << "semiconjugacy: " << (holds ? "true" : "false") << "\n";
  return holds ? kExitOk : kExitCheckFailed;
}

int cmd_julia(const SceneFlags& flags, bool repelling, const Globals& g, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Scene scene = load_scene(flags, g);
  PointCloud cloud;
  try {
    cloud = random_backward_orbit(scene.spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const RasterGrid grid = rasterize(cloud, scene.spec.window, scene.spec.resolution);

  ExperimentReport report;
  report.experiment = "julia";
  report.seed = scene.spec.seed;
  report.maps = scene_maps(scene);
  Output files(scene.out_dir, out);
  files.write("julia.csv", to_csv(cloud));
  files.write("julia.pgm", to_pgm(grid));
  if (repelling) {
    const PointCloud rep = repelling_fixed_points(scene.spec);
    files.write("repelling.csv", to_csv(rep));
    const double d = rep.points.empty() ? 0.0 : directed_hausdorff(rep, cloud);
    report.checks.push_back(Check::at_most("repelling_points_near_cloud", d, 0.02,
                                           std::to_string(rep.points.size()) + " repelling fixed points"));
  }
  report.artifacts = files.paths();
  report.artifacts.push_back((std::filesystem::path(scene.out_dir) / "report.json").string());
  if (g.timing) report.duration_ms = elapsed_ms(start);

  json j = json::parse(to_json(report));
  j["scene"] = scene_json(scene);
  j["points"] = cloud.points.size();
  j["infinite_points"] = count_infinite(cloud);
  j["occupied_pixels"] = grid.occupied();
  j["outside_window"] = grid.overflow;
  files.write("report.json", j.dump(2) + "\n");

  out << "points: " << cloud.points.size() << "\n";
  out << "occupied pixels: " << grid.occupied() << "\n";
  for (const Check& c : report.checks) {
    out << (c.pass ? "pass " : "FAIL ") << c.name << " = " << fmt(c.value) << " (at most " << fmt(*c.tolerance)
        << ")\n";
  }
  return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_eset(const SceneFlags& flags, std::size_t seed_from, std::size_t rounds, const Globals& g,
             std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const Scene scene = load_scene(flags, g);
  if (seed_from >= scene.spec.generators.size()) {
    throw UsageError("--seed-from " + std::to_string(seed_from) + " is not a generator index");
  }
  SemigroupSpec single = scene.spec;
  single.generators = {scene.spec.generators[seed_from]};
  PointCloud seed;
  try {
    seed = random_backward_orbit(single);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SaturationResult r = e_set_saturation(scene.spec, seed, rounds);

  ExperimentReport report;
  report.experiment = "eset";
  report.seed = scene.spec.seed;
  report.maps = scene_maps(scene);
  Output files(scene.out_dir, out);
  files.write("eset.pgm", to_pgm(r.grid));
  report.artifacts = files.paths();
  report.artifacts.push_back((std::filesystem::path(scene.out_dir) / "report.json").string());
  if (g.timing) report.duration_ms = elapsed_ms(start);

  json j = json::parse(to_json(report));
  j["scene"] = scene_json(scene);
  j["seed_generator"] = seed_from;
  j["rounds_run"] = r.rounds_run;
  j["fixpoint"] = r.fixpoint;
  j["capped"] = r.capped;
  j["cells_total"] = r.cells_total;
  j["occupied_per_round"] = r.occupied_per_round;
  files.write("report.json", j.dump(2) + "\n");

  out << "rounds: " << r.rounds_run << (r.fixpoint ? " (fixpoint)" : r.capped ? " (cell cap reached)" : "") << "\n";
  out << "occupied pixels: " << r.grid.occupied() << "\n";
  return kExitOk;
}

int cmd_examples(const std::string& which, const Globals& g, std::ostream& out, std::ostream& err) {
  ExperimentOptions opt;
  if (g.seed) opt.seed = *g.seed;
  opt.workers = g.workers;
  opt.out_dir = g.out_dir;
  opt.timing = g.timing;

  std::vector<ExperimentReport (*)(const ExperimentOptions&)> runs;
  if (which == "1" || which == "all") runs.push_back(run_example1);
  if (which == "2" || which == "all") runs.push_back(run_example2);
  if (which == "3" || which == "all") runs.push_back(run_example3);

  std::vector<std::string> failed;
  for (auto fn : runs) {
    const ExperimentReport r = fn(opt);
    out << r.experiment << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (const Check& c : r.checks) {
      out << "  " << (c.pass ? "pass " : "FAIL ") << c.name;
      if (c.kind == Check::Kind::Numeric) {
        out << " = " << fmt(c.value) << (c.bound == Check::Bound::AtMost ? " (at most " : " (at least ")
            << fmt(*c.tolerance) << ")";
      }
      out << "\n";
      if (!c.note.empty()) out << "      " << c.note << "\n";
    }
    if (g.out_dir) {
      const std::string path = (std::filesystem::path(*g.out_dir) / (r.experiment + "_report.json")).string();
      write_file(path, to_json(r));
      out << "wrote " << path << "\n";
    }
    for (const std::string& name : r.failures()) failed.push_back(r.experiment + "." + name);
  }
  if (!failed.empty()) {
    err << "failed checks:\n";
    for (const std::string& name : failed) err << "  " << name << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lifts and Julia-set numerics for rational semigroups"};
  app.name("ratsemi");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--out", g.out_dir, "output directory");
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--workers", g.workers, "chaos-game walkers")->check(CLI::PositiveNumber);
  app.add_flag("--timing", g.timing, "record wall-clock duration_ms in reports");

  std::string map_text, lower_text, upper_text, f_text, g_text, by_text;
  std::optional<std::string> against, link;

  auto* lift_cmd = app.add_subcommand("lift", "lift an odd map through (z^2-1)/(z^2+1)");
  lift_cmd->add_option("--map", map_text)->required();
  lift_cmd->add_option("--against", against, "claimed lift to compare with");

  auto* verify_cmd = app.add_subcommand("verify", "check link∘lower = upper∘link exactly");
  verify_cmd->add_option("--lower", lower_text)->required();
  verify_cmd->add_option("--upper", upper_text)->required();
  verify_cmd->add_option("--link", link, "defaults to (z^2-1)/(z^2+1)");

  auto* parity_cmd = app.add_subcommand("parity", "classify a map as Even, Odd or Neither");
  parity_cmd->add_option("--map", map_text)->required();

  auto* conjugate_cmd = app.add_subcommand("conjugate", "m∘f∘m⁻¹ for a Moebius map m");
  conjugate_cmd->add_option("--map", map_text)->required();
  conjugate_cmd->add_option("--by", by_text)->required();

  auto* commute_cmd = app.add_subcommand("commute", "search a Moebius φ with f∘g = φ∘g∘f");
  commute_cmd->add_option("--f", f_text)->required();
  commute_cmd->add_option("--g", g_text)->required();

  SceneFlags julia_flags, eset_flags;
  bool repelling = false;
  auto* julia_cmd = app.add_subcommand("julia", "chaos-game point cloud of J(G)");
  add_scene_flags(julia_cmd, julia_flags);
  julia_cmd->add_flag("--repelling", repelling, "also compute repelling fixed points of short words");

  std::size_t seed_from = 0;
  std::size_t rounds = kDefaultSaturationRounds;
  auto* eset_cmd = app.add_subcommand("eset", "saturate a Julia cloud to approximate E(G)");
  add_scene_flags(eset_cmd, eset_flags);
  eset_cmd->add_option("--seed-from", seed_from, "index of the generator whose Julia cloud seeds the closure");
  eset_cmd->add_option("--rounds", rounds);

  std::string which;
  auto* examples_cmd = app.add_subcommand("examples", "run the scripted reproductions");
  examples_cmd->add_option("--which", which)->required()->check(CLI::IsMember({"1", "2", "3", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*lift_cmd) return cmd_lift(map_text, against, out, err);
    if (*verify_cmd) return cmd_verify(lower_text, upper_text, link, out);
    if (*parity_cmd) {
      out << to_string(parity(parse_flag("--map", map_text))) << "\n";
      return kExitOk;
    }
    if (*conjugate_cmd) {
      const RationalMap f = parse_flag("--map", map_text);
      const RationalMap m = parse_flag("--by", by_text);
      MoebiusMap mm = MoebiusMap::identity();
      try {
        mm = MoebiusMap::from_map(m);
      } catch (const std::domain_error& e) {
        throw UsageError(std::string("--by: ") + e.what());
      }
      out << integral_form(conjugate(f, mm)) << "\n";
      return kExitOk;
    }
    if (*commute_cmd) {
      const auto phi = find_commutation_moebius(parse_flag("--f", f_text), parse_flag("--g", g_text));
      out << "moebius: " << (phi ? integral_form(phi->as_map()) : "none") << "\n";
      return kExitOk;
    }
    if (*julia_cmd) return cmd_julia(julia_flags, repelling, g, out);
    if (*eset_cmd) return cmd_eset(eset_flags, seed_from, rounds, g, out);
    if (*examples_cmd) return cmd_examples(which, g, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ratsemi::cli
