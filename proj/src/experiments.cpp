#include "ratsemi/experiments.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>

#include "json.hpp"
#include "ratsemi/algebra.hpp"
#include "ratsemi/expression.hpp"
#include "ratsemi/halfplane.hpp"
#include "ratsemi/hausdorff.hpp"
#include "ratsemi/moebius.hpp"
#include "ratsemi/raster.hpp"
#include "ratsemi/saturation.hpp"

namespace ratsemi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
const Resolution kSaturationResolution{400, 400};

RationalMap expr(std::string_view text) { return parse_and_lower(text); }

class Run {
 public:
  Run(std::string id, const ExperimentOptions& opt) : opt_(opt), start_(std::chrono::steady_clock::now()) {
    report_.experiment = std::move(id);
    report_.seed = opt.seed;
    if (opt.out_dir) std::filesystem::create_directories(*opt.out_dir);
  }

  SemigroupSpec spec(std::vector<RationalMap> gens, const Window& window) const {
    SemigroupSpec s;
    s.generators = std::move(gens);
    s.seed = opt_.seed;
    s.orbit_length = opt_.orbit_length;
    s.burn_in = opt_.burn_in;
    s.word_length_max = opt_.word_length_max;
    s.workers = opt_.workers;
    s.window = window;
    s.resolution = kSaturationResolution;
    return s;
  }

  PointCloud julia(std::vector<RationalMap> gens, const std::string& label) const {
    PointCloud c = random_backward_orbit(spec(std::move(gens), Window{}));
    c.label = label;
    return c;
  }

  void map(const std::string& name, const RationalMap& f) { report_.maps.push_back(name + " = " + integral_form(f)); }
  void add(Check c) { report_.checks.push_back(std::move(c)); }
  void note(std::string n) { report_.notes.push_back(std::move(n)); }

  void artifact(const std::string& name, const std::string& bytes) {
    if (!opt_.out_dir) return;
    const std::string path = (std::filesystem::path(*opt_.out_dir) / (report_.experiment + "_" + name)).string();
    write_file(path, bytes);
    report_.artifacts.push_back(path);
  }

  // Saturation from a seed cloud, recorded as coverage and stray checks.
  void eset(const std::string& name, const SemigroupSpec& s, const PointCloud& seed, double a, double b) {
    const SaturationResult r = e_set_saturation(s, seed, opt_.saturation_rounds);
    const SegmentBand band = segment_band(r.grid, a, b);
    add(Check::at_most(name + "_missing_columns", static_cast<double>(band.columns - band.covered), 0,
                       std::to_string(band.columns) + " columns along the segment"));
    add(Check::at_most(name + "_stray_cells", static_cast<double>(band.stray), 0));
    add(Check::at_most(name + "_rounds_to_fixpoint", r.fixpoint ? static_cast<double>(r.rounds_run) : kInf,
                       static_cast<double>(opt_.saturation_rounds),
                       std::to_string(r.rounds_run) + " rounds, " + std::to_string(r.grid.occupied()) + " pixels" +
                           (r.capped ? ", cell cap reached" : "")));
    artifact(name + ".pgm", to_pgm(r.grid));
  }

  ExperimentReport finish() {
    if (opt_.timing) {
      report_.duration_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }
    return std::move(report_);
  }

  const ExperimentOptions& opt() const { return opt_; }

 private:
  const ExperimentOptions& opt_;
  std::chrono::steady_clock::time_point start_;
  ExperimentReport report_;
};

std::optional<RationalMap> try_lift(const RationalMap& f, std::string& why) {
  try {
    return lift(f);
  } catch (const std::exception& e) {
    why = e.what();
    return std::nullopt;
  }
}

// max(|Re z| − half_width, |Im z|) over the cloud; ∞ counts as unbounded.
double band_excess(const PointCloud& c, double half_width) {
  double worst = -kInf;
  for (const SpherePoint& p : c.points) {
    if (p.infinite) return kInf;
    worst = std::max({worst, std::abs(p.z.real()) - half_width, std::abs(p.z.imag())});
  }
  return worst;
}

double max_modulus(const PointCloud& c) {
  double m = 0.0;
  for (const SpherePoint& p : c.points) m = p.infinite ? kInf : std::max(m, std::abs(p.z));
  return m;
}

}  // namespace

Check Check::exact(std::string name, bool holds, std::string note) {
  Check c;
  c.name = std::move(name);
  c.kind = Kind::Exact;
  c.value = holds ? 1.0 : 0.0;
  c.pass = holds;
  c.note = std::move(note);
  return c;
}

Check Check::at_most(std::string name, double value, double limit, std::string note) {
  Check c;
  c.name = std::move(name);
  c.kind = Kind::Numeric;
  c.value = value;
  c.tolerance = limit;
  c.bound = Bound::AtMost;
  c.pass = value <= limit;
  c.note = std::move(note);
  return c;
}

Check Check::at_least(std::string name, double value, double limit, std::string note) {
  Check c = at_most(std::move(name), value, limit, std::move(note));
  c.bound = Bound::AtLeast;
  c.pass = value >= limit;
  return c;
}

bool ExperimentReport::passed() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<std::string> ExperimentReport::failures() const {
  std::vector<std::string> out;
  for (const Check& c : checks) {
    if (!c.pass) out.push_back(c.name);
  }
  return out;
}

RationalMap claimed_lift_of_example2() { return expr("(5*z^2+40*z-29)/(3*z^2+40*z-27)"); }

ExperimentReport run_example1(const ExperimentOptions& opt) {
  Run run("example1", opt);
  const RationalMap f = opt.f.value_or(expr("2*z-1/z"));
  const RationalMap g = opt.g.value_or(expr("(z^2-1)/(2*z)"));
  const RationalMap phi = halfplane_link();
  run.map("f", f);
  run.map("g", g);

  std::string why_f, why_g;
  const auto lf = try_lift(f, why_f);
  const auto lg = try_lift(g, why_g);
  run.add(Check::exact("lift_f_equals_expected", lf && equals(*lf, expr("(3*z+5*z^2)/(1+3*z+4*z^2)")), why_f));
  run.add(Check::exact("lift_g_equals_expected", lg && equals(*lg, expr("2*z^2-1")), why_g));
  const RationalMap ft = opt.f_tilde ? *opt.f_tilde : lf.value_or(f);
  const RationalMap gt = opt.g_tilde ? *opt.g_tilde : lg.value_or(g);
  run.map("f_tilde", ft);
  run.map("g_tilde", gt);
  run.add(Check::exact("semiconjugacy_f", verify_semiconjugacy(f, ft, phi)));
  run.add(Check::exact("semiconjugacy_g", verify_semiconjugacy(g, gt, phi)));

  const PointCloud jf = run.julia({f}, "J_f");
  run.add(Check::at_most("julia_f_in_interval_band", band_excess(jf, 1.0), 0.01));
  // The preimages of [−1,1] under f are [−1,−1/2] ∪ [1/2,1].
  double gap = kInf;
  for (const SpherePoint& p : jf.points) gap = p.infinite ? gap : std::min(gap, std::abs(p.z));
  run.add(Check::at_least("julia_f_gap_around_0", gap, 0.49, "Cantor structure beyond this gap is not tested"));

  const PointCloud jgt = run.julia({gt}, "J_g_tilde");
  run.add(Check::at_most("julia_g_tilde_vs_interval", hausdorff(jgt, segment_cloud(-1, 1)), 0.02));

  const PointCloud jg = run.julia({g}, "J_g");
  const Window axis_window = opt.window.value_or(Window{0, 0, 5, 5});
  run.eset("eset_fg_axis", run.spec({f, g}, axis_window), jg, axis_window.left(), axis_window.right());
  run.eset("eset_lifted_interval", run.spec({ft, gt}, Window{0, 0, 2.5, 2.5}), jgt, -1, 1);

  const PointCloud jfg = run.julia({f, g}, "J<f,g>");
  const PointCloud jfgt = run.julia({ft, gt}, "J<f_tilde,g_tilde>");
  run.add(Check::at_most("pushforward_matches_lifted_julia", hausdorff(pushforward(jfg, phi), jfgt), 0.03));

  const PointCloud jft = run.julia({ft}, "J_f_tilde");
  run.add(Check::at_least("julia_f_tilde_differs_from_julia_g_tilde", hausdorff(jft, jgt), 0.1));

  run.artifact("julia_fg.csv", to_csv(jfg));
  run.artifact("julia_fg.pgm", to_pgm(rasterize(jfg, axis_window, kSaturationResolution)));
  run.artifact("julia_lifted.csv", to_csv(jfgt));
  run.artifact("julia_lifted.pgm", to_pgm(rasterize(jfgt, Window{0, 0, 2.5, 2.5}, kSaturationResolution)));
  return run.finish();
}

ExperimentReport run_example2(const ExperimentOptions& opt) {
  Run run("example2", opt);
  const RationalMap f = opt.f.value_or(expr("2*z-1/z"));
  const RationalMap g = opt.g.value_or(conjugate(f, MoebiusMap::scaling(GaussianRational(2))));
  const RationalMap phi = halfplane_link();
  run.map("f", f);
  run.map("g", g);

  run.add(Check::exact("conjugate_f_by_2z_equals_g",
                       equals(conjugate(f, MoebiusMap::scaling(GaussianRational(2))), expr("2*z-4/z"))));
  std::string why_f, why_g;
  const auto lf = try_lift(f, why_f);
  const auto lg = try_lift(g, why_g);
  const RationalMap ft = opt.f_tilde ? *opt.f_tilde : lf.value_or(f);
  const RationalMap gt = opt.g_tilde ? *opt.g_tilde : lg.value_or(g);
  run.map("f_tilde", ft);
  run.map("g_tilde", gt);
  run.add(Check::exact("semiconjugacy_f", lf.has_value() && verify_semiconjugacy(f, ft, phi), why_f));
  run.add(Check::exact("semiconjugacy_g", lg.has_value() && verify_semiconjugacy(g, gt, phi), why_g));

  const RationalMap claimed = claimed_lift_of_example2();
  const bool claimed_holds = verify_semiconjugacy(g, claimed, phi);
  run.add(Check::exact("claimed_lift_of_g_fails_semiconjugacy", !claimed_holds,
                       "informational: " + integral_form(claimed) + " is not a lift of " + integral_form(g) +
                           "; the constructed lift is " + integral_form(gt)));
  const ExtendedGaussian at_zero = gt.evaluate(GaussianRational(0));
  run.add(Check::exact("constructed_lift_of_g_at_0_is_3_5",
                       !at_zero.infinite && at_zero.value == GaussianRational(Rational(3, 5)),
                       at_zero.infinite ? "value is infinite" : "value " + at_zero.value.to_string()));

  const PointCloud jf = run.julia({f}, "J_f");
  const PointCloud jg = run.julia({g}, "J_g");
  run.add(Check::at_most("julia_g_vs_scaled_julia_f", hausdorff(jg, pushforward(jf, expr("2*z"))), 0.02));

  const Window axis_window = opt.window.value_or(Window{0, 0, 20, 20});
  run.eset("eset_fg_axis", run.spec({f, g}, axis_window), jg, axis_window.left(), axis_window.right());

  const auto orbit = forward_orbit(f, SpherePoint::finite(2.0), 30);
  std::size_t non_increasing = 0;
  for (std::size_t k = 1; k < orbit.size(); ++k) {
    const bool up = orbit[k].infinite ? !orbit[k - 1].infinite
                                      : (!orbit[k - 1].infinite && orbit[k].z.imag() == 0.0 &&
                                         orbit[k].z.real() > orbit[k - 1].z.real());
    if (!up) ++non_increasing;
  }
  run.add(Check::at_most("forward_orbit_of_2_non_increasing_steps", static_cast<double>(non_increasing), 0));
  const double last = orbit.back().infinite ? kInf : std::abs(orbit.back().z);
  run.add(Check::at_least("forward_orbit_of_2_final_modulus", last, 1e6));

  const PointCloud jfg = run.julia({f, g}, "J<f,g>");
  run.add(Check::at_most("julia_fg_max_modulus", max_modulus(jfg), 2.5));

  run.artifact("julia_fg.csv", to_csv(jfg));
  run.artifact("julia_fg.pgm", to_pgm(rasterize(jfg, Window{0, 0, 5, 5}, kSaturationResolution)));
  return run.finish();
}

ExperimentReport run_example3(const ExperimentOptions& opt) {
  Run run("example3", opt);
  const RationalMap f = opt.f.value_or(expr("z^2-2"));
  const RationalMap g = opt.g.value_or(expr("4*z^2-2"));
  run.map("f", f);
  run.map("g", g);

  run.add(Check::exact("conjugate_2z2_minus_1_by_2z_equals_z2_minus_2",
                       equals(conjugate(expr("2*z^2-1"), MoebiusMap::scaling(GaussianRational(2))), expr("z^2-2"))));
  const auto phi = find_commutation_moebius(f, g);
  run.add(Check::exact("no_commutation_moebius", !phi.has_value(), phi ? "found " + phi->to_string() : ""));

  const PointCloud segment = segment_cloud(-2, 2);
  const PointCloud jf = run.julia({f}, "J_f");
  const PointCloud jg = run.julia({g}, "J_g");
  const PointCloud jfg = run.julia({f, g}, "J<f,g>");
  run.add(Check::at_most("julia_f_vs_interval", hausdorff(jf, segment), 0.02));
  run.add(Check::at_most("julia_g_in_unit_band", band_excess(jg, 1.0), 0.01));
  run.add(Check::at_most("julia_fg_vs_interval", hausdorff(jfg, segment), 0.02));
  run.add(Check::at_least("julia_f_differs_from_julia_g", hausdorff(jf, jg), 0.5));

  const NumericMap ng(g);
  double worst = -kInf;
  for (int k = 0; k < 20; ++k) {
    const SpherePoint w = SpherePoint::finite(-2.0 + 4.0 * k / 19.0);
    const PointCloud pre{ng.preimages(w), "preimages"};
    worst = std::max(worst, pre.points.size() == 2 ? band_excess(pre, 1.0) : kInf);
  }
  run.add(Check::at_most("g_two_to_one_onto_interval", worst, 0.01, "20 sample points of [-2,2]"));

  run.artifact("julia_fg.csv", to_csv(jfg));
  run.artifact("julia_fg.pgm", to_pgm(rasterize(jfg, Window{0, 0, 5, 5}, kSaturationResolution)));
  run.artifact("julia_g.csv", to_csv(jg));
  return run.finish();
}

std::string to_json(const ExperimentReport& r) {
  using json = nlohmann::ordered_json;
  json checks = json::array();
  for (const Check& c : r.checks) {
    json j;
    j["name"] = c.name;
    j["kind"] = c.kind == Check::Kind::Exact ? "exact" : "numeric";
    if (c.kind == Check::Kind::Exact) {
      j["value"] = c.value != 0.0;
    } else if (std::isfinite(c.value)) {
      j["value"] = c.value;
    } else {
      j["value"] = c.value > 0 ? "inf" : "-inf";
    }
    j["tolerance"] = c.tolerance ? json(*c.tolerance) : json(nullptr);
    if (c.kind == Check::Kind::Numeric) j["bound"] = c.bound == Check::Bound::AtMost ? "at_most" : "at_least";
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  json out;
  out["experiment"] = r.experiment;
  out["seed"] = r.seed;
  out["maps"] = r.maps;
  out["pass"] = r.passed();
  out["checks"] = std::move(checks);
  out["notes"] = r.notes;
  out["artifacts"] = r.artifacts;
  out["duration_ms"] = std::llround(r.duration_ms);
  return out.dump(2) + "\n";
}

}  // namespace ratsemi
