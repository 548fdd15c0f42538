#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ratsemi/dynamics.hpp"
#include "ratsemi/rational_map.hpp"

namespace ratsemi {

struct Check {
  enum class Kind { Exact, Numeric };
  enum class Bound { AtMost, AtLeast };

  std::string name;
  Kind kind = Kind::Exact;
  double value = 0.0;  // measured quantity; 1/0 for exact checks
  std::optional<double> tolerance;
  Bound bound = Bound::AtMost;
  bool pass = false;
  std::string note;

  static Check exact(std::string name, bool holds, std::string note = {});
  static Check at_most(std::string name, double value, double limit, std::string note = {});
  static Check at_least(std::string name, double value, double limit, std::string note = {});
};

struct ExperimentReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::vector<std::string> maps;
  std::vector<Check> checks;
  std::vector<std::string> artifacts;
  std::vector<std::string> notes;
  double duration_ms = 0.0;

  bool passed() const;
  std::vector<std::string> failures() const;
};

/// Budgets and substitutions shared by the three reproductions. Map
/// overrides exist for fault injection.
struct ExperimentOptions {
  std::uint64_t seed = 42;
  std::size_t orbit_length = 100000;
  std::size_t burn_in = 100;
  int word_length_max = 4;
  int workers = 1;
  std::size_t saturation_rounds = 1000;
  std::optional<Window> window;
  std::optional<std::string> out_dir;
  bool timing = true;

  std::optional<RationalMap> f;
  std::optional<RationalMap> g;
  std::optional<RationalMap> f_tilde;
  std::optional<RationalMap> g_tilde;
};

/// 2z − 1/z and (z²−1)/(2z) with their lifts under (z²−1)/(z²+1).
ExperimentReport run_example1(const ExperimentOptions& opt = {});
/// 2z − 1/z and its conjugate 2z − 4/z: E(G) is the real line, J(G) is not.
ExperimentReport run_example2(const ExperimentOptions& opt = {});
/// z² − 2 and 4z² − 2: same Julia set for the semigroup and for z² − 2.
ExperimentReport run_example3(const ExperimentOptions& opt = {});

/// A claimed lift of 2z − 4/z, (5z²+40z−29)/(3z²+40z−27), that fails the
/// semi-conjugacy.
RationalMap claimed_lift_of_example2();

std::string to_json(const ExperimentReport& report);

}  // namespace ratsemi
