#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using ratsemi::cli::run;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ratsemi");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag)
      : path(fs::temp_directory_path() / ("ratsemi_cli_" + tag + "_" + std::to_string(::getpid()))) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Pgm {
  int w = 0, h = 0;
  std::string pixels;
};

Pgm read_pgm(const std::string& bytes) {
  std::istringstream in(bytes);
  std::string magic;
  int maxval = 0;
  Pgm p;
  in >> magic >> p.w >> p.h >> maxval;
  in.get();
  REQUIRE(magic == "P5");
  REQUIRE(maxval == 255);
  p.pixels.assign(std::istreambuf_iterator<char>(in), {});
  REQUIRE(p.pixels.size() == static_cast<std::size_t>(p.w) * p.h);
  return p;
}

}  // namespace

TEST_CASE("lift prints the integral form and the verdict") {
  Result r = invoke({"lift", "--map", "2*z-1/z"});
  CHECK(r.status == 0);
  CHECK(r.out == "(5*z^2+3*z)/(4*z^2+3*z+1)\nverified: true\n");

  r = invoke({"lift", "--map", "(z^2-1)/(2*z)"});
  CHECK(r.status == 0);
  CHECK(r.out == "2*z^2-1\nverified: true\n");

  r = invoke({"lift", "--map", "2z - 1/z", "--against", "(3z+5z^2)/(1+3z+4z^2)"});
  CHECK(r.status == 0);
  CHECK(r.out.find("matches claimed lift: true") != std::string::npos);

  r = invoke({"lift", "--map", "2*z-4/z", "--against", "(5*z^2+40*z-29)/(3*z^2+40*z-27)"});
  CHECK(r.status == 1);
  CHECK(r.out.find("(37*z^2-24*z+3)/(35*z^2-24*z+5)") != std::string::npos);
  CHECK(r.out.find("matches claimed lift: false") != std::string::npos);
}

TEST_CASE("lift rejects non-odd maps and malformed input") {
  Result r = invoke({"lift", "--map", "z^2"});
  CHECK(r.status == 2);
  CHECK(r.err.find("map is Even, lift requires Odd") != std::string::npos);

  r = invoke({"lift", "--map", "z^"});
  CHECK(r.status == 2);
  CHECK(r.err.find("offset 2") != std::string::npos);

  r = invoke({"lift", "--map", "1/(z-z)"});
  CHECK(r.status == 2);

  CHECK(invoke({"lift"}).status == 2);
}

TEST_CASE("verify, parity, conjugate, commute") {
  CHECK(invoke({"verify", "--lower", "2*z-1/z", "--upper", "(3*z+5*z^2)/(1+3*z+4*z^2)"}).status == 0);
  Result r = invoke({"verify", "--lower", "2*z-4/z", "--upper", "(5*z^2+40*z-29)/(3*z^2+40*z-27)"});
  CHECK(r.status == 1);
  CHECK(r.out == "semiconjugacy: false\n");
  CHECK(invoke({"verify", "--lower", "z^2", "--upper", "z^2", "--link", "z"}).status == 0);

  CHECK(invoke({"parity", "--map", "2*z-1/z"}).out == "Odd\n");
  CHECK(invoke({"parity", "--map", "z^2-2"}).out == "Even\n");
  CHECK(invoke({"parity", "--map", "z^2+z"}).out == "Neither\n");

  r = invoke({"conjugate", "--map", "2*z^2-1", "--by", "2*z"});
  CHECK(r.status == 0);
  CHECK(r.out == "z^2-2\n");
  CHECK(invoke({"conjugate", "--map", "2*z-1/z", "--by", "2*z"}).out == "(2*z^2-4)/z\n");
  CHECK(invoke({"conjugate", "--map", "z^2", "--by", "z^2"}).status == 2);

  r = invoke({"commute", "--f", "z^2-2", "--g", "4*z^2-2"});
  CHECK(r.status == 0);
  CHECK(r.out == "moebius: none\n");
  CHECK(invoke({"commute", "--f", "z^2", "--g", "z^3"}).out == "moebius: z\n");
}

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(invoke({}).status == 2);
  CHECK(invoke({"frobnicate"}).status == 2);
  CHECK(invoke({"examples", "--which", "9"}).status == 2);
  CHECK(invoke({"--help"}).status == 0);
  CHECK(invoke({"parity", "--map", "z", "--workers", "0"}).status == 2);
}

TEST_CASE("julia writes a band raster over [-2,2] for z^2-2 and 4z^2-2") {
  TempDir dir("julia");
  const Result r = invoke({"julia", "--gen", "z^2-2", "--gen", "4*z^2-2", "--repelling", "--out", dir.path.string()});
  CHECK(r.status == 0);
  for (const char* name : {"julia.csv", "julia.pgm", "repelling.csv", "report.json"}) CHECK(fs::exists(dir / name));

  const Pgm pgm = read_pgm(slurp(dir / "julia.pgm"));
  CHECK(pgm.w == 400);
  CHECK(pgm.h == 400);
  // Window [-2.5,2.5]²: the axis lies between rows 199 and 200, [-2,2] spans columns 40..359.
  int min_col = pgm.w, max_col = -1;
  for (int row = 0; row < pgm.h; ++row) {
    for (int col = 0; col < pgm.w; ++col) {
      if (pgm.pixels[static_cast<std::size_t>(row) * pgm.w + col] == 0) continue;
      CHECK((row == 199 || row == 200));
      min_col = std::min(min_col, col);
      max_col = std::max(max_col, col);
    }
  }
  CHECK(min_col == 40);
  CHECK(max_col == 359);

  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  CHECK(report["pass"] == true);
  CHECK(report["points"] == 99900);
  CHECK(report["infinite_points"] == 0);
  CHECK(report["checks"][0]["name"] == "repelling_points_near_cloud");

  std::ifstream csv(dir / "julia.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "re,im");
}

TEST_CASE("julia output is byte-identical across runs and matches a config file") {
  TempDir a("det_a"), b("det_b"), c("det_c");
  const std::vector<std::string> flags = {"--gen", "2*z^2-1", "--orbit-length", "20000", "--workers", "3"};
  auto with_out = [&](const TempDir& d) {
    std::vector<std::string> args = {"julia"};
    args.insert(args.end(), flags.begin(), flags.end());
    args.insert(args.end(), {"--out", d.path.string()});
    return args;
  };
  REQUIRE(invoke(with_out(a)).status == 0);
  REQUIRE(invoke(with_out(b)).status == 0);
  for (const char* name : {"julia.csv", "julia.pgm"}) CHECK(slurp(a / name) == slurp(b / name));
  auto strip_paths = [](std::string s, const TempDir& d) {
    for (std::size_t p; (p = s.find(d.path.string())) != std::string::npos;) s.replace(p, d.path.string().size(), "@");
    return s;
  };
  CHECK(strip_paths(slurp(a / "report.json"), a) == strip_paths(slurp(b / "report.json"), b));

  {
    std::ofstream cfg(c / "scene.json");
    cfg << R"({"generators": ["2*z^2-1"], "seed": 42, "orbit_length": 20000, "burn_in": 100,
              "word_length_max": 4, "window": {"cx": 0, "cy": 0, "width": 5, "height": 5},
              "resolution": {"w": 400, "h": 400}, "output_directory": ")"
        << c.path.string() << "\"}";
  }
  REQUIRE(invoke({"julia", "--config", c / "scene.json", "--workers", "3"}).status == 0);
  CHECK(slurp(a / "julia.csv") == slurp(c / "julia.csv"));
  CHECK(slurp(a / "julia.pgm") == slurp(c / "julia.pgm"));
}

TEST_CASE("julia rejects bad scenes with status 2") {
  TempDir dir("bad");
  {
    std::ofstream cfg(dir / "typo.json");
    cfg << R"({"generators": ["z^2-2"], "orbit_lenght": 10})";
  }
  Result r = invoke({"julia", "--config", dir / "typo.json", "--out", dir.path.string()});
  CHECK(r.status == 2);
  CHECK(r.err.find("orbit_lenght") != std::string::npos);

  {
    std::ofstream cfg(dir / "broken.json");
    cfg << "{\"generators\": [";
  }
  CHECK(invoke({"julia", "--config", dir / "broken.json"}).status == 2);
  CHECK(invoke({"julia", "--config", dir / "missing.json"}).status == 2);
  CHECK(invoke({"julia", "--out", dir.path.string()}).status == 2);
  CHECK(invoke({"julia", "--gen", "2*z+1", "--out", dir.path.string()}).status == 2);
  CHECK(invoke({"julia", "--gen", "z^2", "--resolution", "0", "4", "--out", dir.path.string()}).status == 2);
  r = invoke({"julia", "--gen", "z^2-2", "--burn-in", "100", "--orbit-length", "50", "--out", dir.path.string()});
  CHECK(r.status == 2);
}

TEST_CASE("julia with a 1x1 resolution writes a single-cell raster") {
  TempDir dir("one");
  REQUIRE(invoke({"julia", "--gen", "z^2-2", "--resolution", "1", "1", "--orbit-length", "5000", "--out",
                  dir.path.string()})
              .status == 0);
  const Pgm pgm = read_pgm(slurp(dir / "julia.pgm"));
  CHECK(pgm.w == 1);
  CHECK(pgm.h == 1);
  CHECK(static_cast<unsigned char>(pgm.pixels[0]) == 255);
}

TEST_CASE("eset with zero rounds rasterizes the seed cloud") {
  TempDir seed("eset_seed"), zero("eset_zero");
  REQUIRE(invoke({"julia", "--gen", "(z^2-1)/(2*z)", "--out", seed.path.string()}).status == 0);
  REQUIRE(invoke({"eset", "--gen", "2*z-1/z", "--gen", "(z^2-1)/(2*z)", "--seed-from", "1", "--rounds", "0", "--out",
                  zero.path.string()})
              .status == 0);
  CHECK(slurp(seed / "julia.pgm") == slurp(zero / "eset.pgm"));
}

TEST_CASE("eset on the real-axis scene reaches a fixpoint on the axis") {
  TempDir dir("eset_axis");
  const Result r =
      invoke({"eset", "--gen", "2*z-1/z", "--gen", "(z^2-1)/(2*z)", "--seed-from", "1", "--out", dir.path.string()});
  CHECK(r.status == 0);
  const auto report = nlohmann::json::parse(slurp(dir / "report.json"));
  CHECK(report["fixpoint"] == true);
  CHECK(report["capped"] == false);
  const auto rounds = report["occupied_per_round"].get<std::vector<std::size_t>>();
  CHECK(rounds.size() == report["rounds_run"].get<std::size_t>() + 1);
  CHECK(rounds.back() == 400);
  const Pgm pgm = read_pgm(slurp(dir / "eset.pgm"));
  for (int row = 0; row < pgm.h; ++row) {
    for (int col = 0; col < pgm.w; ++col) {
      if (pgm.pixels[static_cast<std::size_t>(row) * pgm.w + col] != 0) CHECK((row == 199 || row == 200));
    }
  }
  CHECK(invoke({"eset", "--gen", "z^2-2", "--seed-from", "3", "--out", dir.path.string()}).status == 2);
}

TEST_CASE("examples report the claimed-lift discrepancy and write reports") {
  TempDir dir("examples");
  const Result r = invoke({"examples", "--which", "2", "--seed", "42", "--out", dir.path.string()});
  CHECK(r.status == 0);
  CHECK(r.out.find("is not a lift of") != std::string::npos);
  const auto report = nlohmann::json::parse(slurp(dir / "example2_report.json"));
  CHECK(report["pass"] == true);
  CHECK(report["duration_ms"] == 0);
  bool noted = false;
  for (const auto& c : report["checks"]) {
    if (c["name"] == "claimed_lift_of_g_fails_semiconjugacy") noted = c["note"].get<std::string>().find("37*z^2") != std::string::npos;
  }
  CHECK(noted);
}

TEST_CASE("examples all pass at seed 42") {
  const Result r = invoke({"examples", "--which", "all", "--seed", "42"});
  CHECK(r.status == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
