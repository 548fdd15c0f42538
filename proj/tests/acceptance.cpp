// One line per acceptance criterion: id, verdict, measurements, runtime.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "expression_corpus.hpp"
#include "random_maps.hpp"
#include "ratsemi/algebra.hpp"
#include "ratsemi/experiments.hpp"
#include "ratsemi/expression.hpp"
#include "ratsemi/halfplane.hpp"
#include "ratsemi/hausdorff.hpp"
#include "ratsemi/raster.hpp"
#include "ratsemi/saturation.hpp"

using namespace ratsemi;
using namespace ratsemi::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [FAILED]");
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

RationalMap m(const char* text) { return parse_and_lower(text); }

SemigroupSpec scene(std::vector<RationalMap> gens, double width = 5.0) {
  SemigroupSpec s;
  s.generators = std::move(gens);
  s.seed = 42;
  s.orbit_length = 100000;
  s.window = {0, 0, width, width};
  return s;
}

PointCloud julia(std::vector<RationalMap> gens) { return random_backward_orbit(scene(std::move(gens))); }

double band_excess(const PointCloud& c, double half_width) {
  double worst = 0.0;
  for (const SpherePoint& p : c.points) {
    if (p.infinite) return INFINITY;
    worst = std::max({worst, std::abs(p.z.real()) - half_width, std::abs(p.z.imag())});
  }
  return worst;
}

Outcome ac1() {
  Outcome o;
  o.require(equals(lift(m("(2*z^2-1)/z")), m("(3*z+5*z^2)/(1+3*z+4*z^2)")), "lift(2z-1/z) = (3z+5z^2)/(1+3z+4z^2)");
  o.require(equals(lift(m("(z^2-1)/(2*z)")), m("2*z^2-1")), "lift((z^2-1)/(2z)) = 2z^2-1");
  return o;
}

Outcome ac2() {
  Outcome o;
  MapGenerator gen(2024);
  int verified = 0, drawn = 0;
  while (drawn < 100) {
    const RationalMap f = build_from_params(gen.halfplane_params(6));
    if (f.degree() > 8) continue;
    ++drawn;
    verified += verify_semiconjugacy(f, lift(f), halfplane_link()) ? 1 : 0;
  }
  o.require(verified == 100, std::to_string(verified) + "/100 normal-form maps verified");
  return o;
}

Outcome ac3() {
  Outcome o;
  MapGenerator gen(77);
  const RationalMap phi = halfplane_link();
  int square_iff = 0, link_iff = 0;
  for (int k = 0; k < 200; ++k) {
    const RationalMap f = gen.map(5);
    const Parity p = parity(f);
    const bool square_even = parity(product(f, f)) == Parity::Even;
    square_iff += square_even == (p == Parity::Even || p == Parity::Odd) ? 1 : 0;
    link_iff += (parity(compose(phi, f)) == Parity::Even) == square_even ? 1 : 0;
  }
  o.require(square_iff == 200, "f*f even <=> f even or odd: " + std::to_string(square_iff) + "/200");
  o.require(link_iff == 200, "phi(f) even <=> f*f even: " + std::to_string(link_iff) + "/200");
  return o;
}

Outcome ac4() {
  Outcome o;
  const RationalMap g = m("2*z-4/z");
  const RationalMap phi = halfplane_link();
  const RationalMap constructed = m("(37*z^2-24*z+3)/(35*z^2-24*z+5)");
  o.require(!verify_semiconjugacy(g, claimed_lift_of_example2(), phi), "claimed lift rejected");
  o.require(verify_semiconjugacy(g, constructed, phi), "constructed lift verified");
  o.require(equals(lift(g), constructed), "lift(g) equals the constructed lift");
  const ExtendedGaussian at0 = constructed.evaluate(GaussianRational(0));
  o.require(!at0.infinite && at0.value == GaussianRational(Rational(3, 5)), "lift(0) = 3/5");
  return o;
}

Outcome ac5() {
  Outcome o;
  const struct {
    const char* label;
    std::vector<RationalMap> gens;
    double a, b;
  } cases[] = {{"<z^2-2>", {m("z^2-2")}, -2, 2},
               {"<2z^2-1>", {m("2*z^2-1")}, -1, 1},
               {"<z^2-2, 4z^2-2>", {m("z^2-2"), m("4*z^2-2")}, -2, 2}};
  for (const auto& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const double d = hausdorff(julia(c.gens), segment_cloud(c.a, c.b));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(d <= 0.02 && secs < 10, std::string(c.label) + " " + fmt(d) + " <= 0.02 in " + fmt(secs) + " s");
  }
  return o;
}

Outcome ac6() {
  Outcome o;
  const PointCloud jf = julia({m("z^2-2")});
  const PointCloud jg = julia({m("4*z^2-2")});
  const double excess = band_excess(jg, 1.0);
  o.require(excess <= 0.01, "J_g band excess " + fmt(excess) + " <= 0.01");
  const double d = hausdorff(jf, jg);
  o.require(d >= 0.5, "H(J_f, J_g) " + fmt(d) + " >= 0.5");
  o.require(!find_commutation_moebius(m("z^2-2"), m("4*z^2-2")).has_value(), "no commutation Moebius");
  return o;
}

void axis_eset(Outcome& o, const std::string& label, std::vector<RationalMap> gens, double width) {
  const auto start = std::chrono::steady_clock::now();
  const SemigroupSpec s = scene(gens, width);
  SemigroupSpec seed_scene = s;
  seed_scene.generators = {gens[1]};
  const SaturationResult r = e_set_saturation(s, random_backward_orbit(seed_scene), kDefaultSaturationRounds);
  const SegmentBand band = segment_band(r.grid, -width / 2, width / 2);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(band.covered == band.columns && band.stray == 0 && r.fixpoint && secs < 60,
            label + " covered " + std::to_string(band.covered) + "/" + std::to_string(band.columns) + ", stray " +
                std::to_string(band.stray) + ", " + std::to_string(r.rounds_run) + " rounds, " + fmt(secs) + " s");
}

Outcome ac7() {
  Outcome o;
  axis_eset(o, "ex1 width 5", {m("2*z-1/z"), m("(z^2-1)/(2*z)")}, 5);
  axis_eset(o, "ex2 width 20", {m("2*z-1/z"), m("2*z-4/z")}, 20);
  double max_mod = 0.0;
  for (const SpherePoint& p : julia({m("2*z-1/z"), m("2*z-4/z")}).points) {
    max_mod = p.infinite ? INFINITY : std::max(max_mod, std::abs(p.z));
  }
  o.require(max_mod <= 2.5, "ex2 max|z| " + fmt(max_mod) + " <= 2.5");
  const SpherePoint last = forward_orbit(m("2*z-1/z"), SpherePoint::finite(2.0), 30).back();
  const double mod = last.infinite ? INFINITY : std::abs(last.z);
  o.require(mod > 1e6, "|f^30(2)| " + fmt(mod) + " > 1e6");
  return o;
}

Outcome ac8() {
  Outcome o;
  const RationalMap f = m("2*z-1/z"), g = m("(z^2-1)/(2*z)");
  const double d = hausdorff(pushforward(julia({f, g}), halfplane_link()), julia({lift(f), lift(g)}));
  o.require(d <= 0.03, "H(phi(J<f,g>), J<f~,g~>) " + fmt(d) + " <= 0.03");
  return o;
}

bool same_points(const PointCloud& got, std::vector<double> want) {
  if (got.points.size() != want.size()) return false;
  std::vector<double> re;
  for (const SpherePoint& p : got.points) {
    if (p.infinite || std::abs(p.z.imag()) > 1e-9) return false;
    re.push_back(p.z.real());
  }
  std::sort(re.begin(), re.end());
  std::sort(want.begin(), want.end());
  for (std::size_t k = 0; k < re.size(); ++k) {
    if (std::abs(re[k] - want[k]) > 1e-9) return false;
  }
  return true;
}

Outcome ac9() {
  Outcome o;
  const RationalMap f1 = m("2*z-1/z"), g1 = m("(z^2-1)/(2*z)");
  const struct {
    const char* label;
    std::vector<RationalMap> gens;
  } cases[] = {{"ex1", {f1, g1}},
               {"ex1 lifted", {lift(f1), lift(g1)}},
               {"ex2", {f1, m("2*z-4/z")}},
               {"ex3", {m("z^2-2"), m("4*z^2-2")}}};
  for (const auto& c : cases) {
    const SemigroupSpec s = scene(c.gens);
    const PointCloud rep = repelling_fixed_points(s);
    const double d = directed_hausdorff(rep, random_backward_orbit(s));
    o.require(d <= 0.02, std::string(c.label) + " " + std::to_string(rep.points.size()) + " points within " + fmt(d));
  }
  SemigroupSpec single = scene({m("z^2-2")});
  single.word_length_max = 1;
  o.require(same_points(repelling_fixed_points(single), {2, -1}), "z^2-2 fixes {2,-1}");
  single.generators = {f1};
  o.require(same_points(repelling_fixed_points(single), {1, -1}), "2z-1/z fixes {1,-1}");
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

Outcome ac10() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / ("ratsemi_acceptance_" + std::to_string(::getpid()));
  auto run_into = [&](const std::string& name) {
    const std::string dir = (root / name).string();
    const char* argv[] = {"ratsemi", "julia",  "--gen", "z^2-2", "--gen", "4*z^2-2", "--workers",
                          "2",       "--out", dir.c_str()};
    std::ostringstream out, err;
    return cli::run(10, argv, out, err);
  };
  o.require(run_into("a") == 0 && run_into("b") == 0, "two julia runs");
  bool same = true;
  for (const char* file : {"julia.csv", "julia.pgm"}) same = same && slurp(root / "a" / file) == slurp(root / "b" / file);
  std::string ra = slurp(root / "a" / "report.json"), rb = slurp(root / "b" / "report.json");
  for (std::size_t p; (p = ra.find((root / "a").string())) != std::string::npos;) ra.replace(p, (root / "a").string().size(), "@");
  for (std::size_t p; (p = rb.find((root / "b").string())) != std::string::npos;) rb.replace(p, (root / "b").string().size(), "@");
  same = same && !ra.empty() && ra == rb;
  o.require(same, "CSV/PGM/JSON byte-identical");
  fs::remove_all(root);

  ExperimentOptions opt;
  opt.timing = false;
  o.require(to_json(run_example2(opt)) == to_json(run_example2(opt)), "example report byte-identical");

  int round_trips = 0;
  for (const std::string& s : expression_corpus()) {
    const Expr e = *parse_map(s).root;
    const std::string printed = print(e);
    round_trips += *parse_map(printed).root == e && equals(lower(*parse_map(printed).root), lower(e)) ? 1 : 0;
  }
  o.require(round_trips == static_cast<int>(expression_corpus().size()),
            "parser corpus " + std::to_string(round_trips) + "/" + std::to_string(expression_corpus().size()));
  return o;
}

}  // namespace

int main() {
  const struct {
    const char* id;
    double limit_s;
    std::function<Outcome()> run;
  } criteria[] = {{"AC1", 1, ac1},   {"AC2", 30, ac2},  {"AC3", 30, ac3}, {"AC4", 1, ac4},  {"AC5", 30, ac5},
                  {"AC6", 10, ac6},  {"AC7", 120, ac7}, {"AC8", 30, ac8}, {"AC9", 60, ac9}, {"AC10", 10, ac10}};
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit_s;
    failed += pass ? 0 : 1;
    std::printf("%-4s %s  %s  (%.2f s, limit %.0f s)\n", c.id, pass ? "PASS" : "FAIL", o.detail.c_str(), secs,
                c.limit_s);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
