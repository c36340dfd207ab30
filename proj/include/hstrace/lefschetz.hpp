#pragma once

#include <chrono>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hstrace/module.hpp"
#include "hstrace/trace.hpp"

namespace hst {

enum class OracleKind {
  Sphere,      // degree-d self-map of S^2, fixed points found numerically
  Circle,      // x -> d x on R/Z
  Torus,       // linear map of R^2/Z^2 given by an integer matrix
  Projective,  // [z_0 : ... : z_n] -> [z_0^q : ... : z_n^q] on CP^n
  RankSum,     // alternating signed rank sum of the resolutions; endos must be identities
  Hand,        // value written in the case file
};

struct OracleSpec {
  OracleKind kind = OracleKind::RankSum;
  std::vector<long> params;                // sphere/circle: {d}; projective: {n, q}
  std::vector<std::vector<long>> matrix;   // torus
  std::string hand_value;                  // hand, as an element expression
};

struct ExampleCase {
  std::string name;
  RingSpec ring;
  PresentedModule ktheory_even;
  PresentedModule ktheory_odd;
  ModuleHom endo_even;
  ModuleHom endo_odd;
  OracleSpec oracle;
  std::string provenance;
};

struct RunReport {
  std::string name;
  std::optional<TraceValue> computed;  // even trace minus odd trace
  std::optional<TraceValue> expected;
  bool match = false;
  std::size_t length_even = 0, length_odd = 0;
  std::chrono::microseconds wall_time{0};
  std::string error;  // set when resolution, lifting or the oracle failed
};

/// Expected trace of a case from its oracle.
TraceValue oracle_value(const ExampleCase& c);

RunReport run_case(const ExampleCase& c, int max_length = kDefaultMaxLength);

/// Runs the cases whose names contain filter (all when empty), in parallel;
/// reports are sorted by name.
std::vector<RunReport> run_suite(const std::vector<ExampleCase>& cases, const std::string& filter = "");

/// All *.case files of a directory, sorted by case name.
std::vector<ExampleCase> load_catalog(const std::filesystem::path& dir = HSTRACE_CATALOG_DIR);

std::string oracle_to_string(const OracleSpec& o);

}  // namespace hst
