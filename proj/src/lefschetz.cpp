#include "hstrace/lefschetz.hpp"

#include <algorithm>
#include <future>

#include "hstrace/errors.hpp"
#include "hstrace/oracles.hpp"
#include "hstrace/text.hpp"

namespace hst {

TraceValue oracle_value(const ExampleCase& c) {
  const auto& o = c.oracle;
  auto constant = [&](const Integer& v) { return TraceValue{RingElement::constant(c.ring, v), 0}; };
  switch (o.kind) {
    case OracleKind::Sphere: return constant(oracle::sphere_lefschetz(o.params.at(0)));
    case OracleKind::Circle: return constant(oracle::circle_lefschetz(o.params.at(0)));
    case OracleKind::Torus: {
      std::array<std::array<long, 2>, 2> m{{{o.matrix[0][0], o.matrix[0][1]}, {o.matrix[1][0], o.matrix[1][1]}}};
      return constant(oracle::torus_lefschetz(m));
    }
    case OracleKind::Projective: return constant(oracle::projective_lefschetz(o.params.at(0), o.params.at(1)));
    case OracleKind::RankSum: {
      if (!equal_as_module_maps(c.endo_even, ModuleHom::identity(c.ktheory_even)) ||
          !equal_as_module_maps(c.endo_odd, ModuleHom::identity(c.ktheory_odd)))
        throw InvalidArgument("rank-sum oracle requires identity endomorphisms");
      return constant(signed_rank_sum(resolve(c.ktheory_even)) - signed_rank_sum(resolve(c.ktheory_odd)));
    }
    case OracleKind::Hand: return TraceValue{parse_element(c.ring, o.hand_value), 0};
  }
  throw InternalError("unknown oracle kind");
}

RunReport run_case(const ExampleCase& c, int max_length) {
  RunReport report;
  report.name = c.name;
  auto start = std::chrono::steady_clock::now();
  try {
    auto re = resolve(c.ktheory_even, max_length);
    auto ro = resolve(c.ktheory_odd, max_length);
    report.length_even = re.length();
    report.length_odd = ro.length();
    auto te = hs_trace(c.endo_even, re);
    auto to = hs_trace(c.endo_odd, ro);
    report.computed = TraceValue{te.value - to.value, te.degree};
    report.expected = oracle_value(c);
    report.match = report.computed->value == report.expected->value;
  } catch (const std::exception& e) {
    report.error = e.what();
    report.match = false;
  }
  report.wall_time =
      std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

std::vector<RunReport> run_suite(const std::vector<ExampleCase>& cases, const std::string& filter) {
  std::vector<std::future<RunReport>> running;
  for (const auto& c : cases)
    if (filter.empty() || c.name.find(filter) != std::string::npos)
      running.push_back(std::async(std::launch::async, [&c] { return run_case(c); }));
  std::vector<RunReport> reports;
  for (auto& f : running) reports.push_back(f.get());
  std::sort(reports.begin(), reports.end(), [](const RunReport& a, const RunReport& b) { return a.name < b.name; });
  return reports;
}

std::vector<ExampleCase> load_catalog(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InvalidArgument("catalog directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".case") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<ExampleCase> cases;
  for (const auto& f : files) {
    auto doc = parse_file(f);
    for (auto& [name, entry] : doc.cases) cases.push_back(entry.value);
  }
  std::sort(cases.begin(), cases.end(), [](const ExampleCase& a, const ExampleCase& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < cases.size(); ++i)
    if (cases[i].name == cases[i - 1].name) throw InvalidArgument("duplicate case name '" + cases[i].name + "'");
  return cases;
}

}  // namespace hst
