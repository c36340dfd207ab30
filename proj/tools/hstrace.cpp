// hstrace: command-line front end for traces, resolutions and the Lefschetz catalog.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "hstrace/lefschetz.hpp"
#include "hstrace/monoidal.hpp"
#include "hstrace/text.hpp"
#include "hstrace/trace.hpp"

namespace {

using nlohmann::json;
using namespace hst;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string format = "text";
  std::vector<std::string> files;
  std::string name;
  std::string catalog = HSTRACE_CATALOG_DIR;
  std::string filter;
  int max_length = kDefaultMaxLength;
  bool emit_grammar = false;
};

Document load(const std::vector<std::string>& files) {
  std::vector<std::filesystem::path> paths(files.begin(), files.end());
  return parse_files(paths);
}

json trace_json(const TraceValue& t) { return json{{"value", t.value.to_string()}, {"degree", t.degree}}; }

void print_trace(const Options& o, const std::string& label, const TraceValue& t) {
  if (o.format == "json") std::cout << json{{label, trace_json(t)}}.dump(2) << "\n";
  else std::cout << label << ": " << t.value.to_string() << "  [degree " << t.degree << "]\n";
}

int cmd_trace_free(const Options& o) {
  auto doc = load(o.files);
  print_trace(o, "trace", free_trace(doc.map(o.name)));
  return kExitOk;
}

int cmd_trace_hs(const Options& o, const std::string& resolution_file) {
  auto files = o.files;
  if (!resolution_file.empty()) files.push_back(resolution_file);
  auto doc = load(files);
  const auto& f = doc.hom(o.name);
  Resolution r = resolution_file.empty() ? resolve(f.source(), o.max_length) : doc.resolution();
  auto check = verify_resolution(r);
  if (!check.ok) throw InvalidArgument("resolution is not valid: " + check.failure);
  auto t = hs_trace(f, r);
  if (o.format == "json") {
    std::cout << json{{"trace", trace_json(t)}, {"resolution_length", r.length()}}.dump(2) << "\n";
  } else {
    std::cout << "resolution length: " << r.length() << "\n";
    print_trace(o, "trace", t);
  }
  return kExitOk;
}

int cmd_resolve(const Options& o) {
  auto doc = load(o.files);
  const auto& m = doc.module(o.name);
  auto r = resolve(m, o.max_length);
  auto check = verify_resolution(r);
  if (o.format == "json") {
    json stages = json::array();
    for (std::size_t j = 0; j < r.modules.size(); ++j) {
      json s{{"shifts", r.modules[j].shifts()}};
      if (j > 0) s["boundary"] = r.boundaries[j - 1].matrix().to_string();
      stages.push_back(s);
    }
    std::cout << json{{"length", r.length()}, {"verified", check.ok}, {"stages", stages},
                      {"signed_rank_sum", signed_rank_sum(r).get_str()}}
                     .dump(2)
              << "\n";
  } else {
    Document out;
    out.ring = m.ring();
    std::string mod_name = o.name.empty() ? doc.modules.begin()->first : o.name;
    out.order = {mod_name, "R"};
    out.modules.emplace(mod_name, m);
    out.resolutions.emplace("R", ResolutionEntry{mod_name, r});
    std::cout << print_document(out);
    std::cout << "# verified: " << (check.ok ? "yes" : "no, " + check.failure) << "\n";
  }
  return check.ok ? kExitOk : kExitMismatch;
}

int cmd_zigzag(const Options& o) {
  auto doc = load(o.files);
  const auto& a = doc.free_module(o.name);
  auto d = standard_duality(a);
  bool ok = zigzag_check(d);
  if (o.format == "json") {
    std::cout << json{{"module", a.shifts()}, {"zigzag", ok}}.dump(2) << "\n";
  } else {
    std::cout << "A = " << a.to_string() << "\n";
    std::cout << "zigzag: " << (ok ? "pass" : "FAIL") << "\n";
    if (ok) print_trace(o, "euler characteristic", euler_characteristic(d));
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_ctrace(const Options& o) {
  auto doc = load(o.files);
  const auto& f = doc.map(o.name);
  if (!f.is_endomorphism()) throw InvalidArgument("ctrace needs an endomorphism");
  auto c = categorical_trace(f, standard_duality(f.source()));
  auto t = free_trace(f);
  bool same = c == t;
  if (o.format == "json") {
    std::cout << json{{"categorical", trace_json(c)}, {"free", trace_json(t)}, {"equal", same}}.dump(2) << "\n";
  } else {
    print_trace(o, "categorical trace", c);
    print_trace(o, "free trace", t);
  }
  return same ? kExitOk : kExitMismatch;
}

int cmd_additivity(const Options& o) {
  auto doc = load(o.files);
  const auto& s = doc.sequence(o.name);
  auto rep = additivity_check(s, o.max_length);
  bool ok = rep.defect.is_zero();
  if (o.format == "json") {
    std::cout << json{{"f_C", rep.f_C.lift().matrix().to_string()},
                      {"trace_A", trace_json(rep.trace_A)},
                      {"trace_B", trace_json(rep.trace_B)},
                      {"trace_C", trace_json(rep.trace_C)},
                      {"defect", rep.defect.to_string()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "f_C lift: " << rep.f_C.lift().matrix().to_string() << "\n";
    print_trace(o, "tr f_A", rep.trace_A);
    print_trace(o, "tr f_B", rep.trace_B);
    print_trace(o, "tr f_C", rep.trace_C);
    std::cout << "defect: " << rep.defect.to_string() << "\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_lefschetz_list(const Options& o) {
  auto cases = load_catalog(o.catalog);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& c : cases)
      arr.push_back({{"name", c.name}, {"ring", c.ring.to_string()}, {"oracle", oracle_to_string(c.oracle)},
                     {"provenance", c.provenance}});
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& c : cases)
      std::cout << c.name << "  " << c.ring.to_string() << "  oracle " << oracle_to_string(c.oracle) << "\n";
  }
  return kExitOk;
}

int cmd_lefschetz_run(const Options& o) {
  auto reports = run_suite(load_catalog(o.catalog), o.filter);
  bool all = true;
  for (const auto& r : reports) all = all && r.match;
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      json j{{"name", r.name},
             {"match", r.match},
             {"length_even", r.length_even},
             {"length_odd", r.length_odd},
             {"wall_time_us", r.wall_time.count()}};
      if (r.computed) j["computed"] = trace_json(*r.computed);
      if (r.expected) j["expected"] = trace_json(*r.expected);
      if (!r.error.empty()) j["error"] = r.error;
      arr.push_back(j);
    }
    std::cout << json{{"cases", arr}, {"all_match", all}}.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << (r.match ? "ok      " : "MISMATCH") << "  " << r.name;
      if (r.computed) std::cout << "  trace " << r.computed->value.to_string();
      if (r.expected) std::cout << "  oracle " << r.expected->value.to_string();
      std::cout << "  lengths " << r.length_even << "/" << r.length_odd << "  " << r.wall_time.count() << " us";
      if (!r.error.empty()) std::cout << "  error: " << r.error;
      std::cout << "\n";
    }
    std::cout << reports.size() << " case(s), " << (all ? "all match" : "mismatches present") << "\n";
  }
  return all ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact graded traces, resolutions and Lefschetz numbers over Z, Z[x] and Laurent rings"};
  app.require_subcommand(0, 1);
  Options o;
  app.add_flag("--emit-grammar", o.emit_grammar, "Print the input format and exit");

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_name = [&](CLI::App* c) { c->add_option("--name", o.name, "Object to use when a file declares several"); };

  auto* trace = app.add_subcommand("trace", "Free or Hattori-Stallings trace");
  trace->require_subcommand(1);
  auto* tfree = trace->add_subcommand("free", "Supertrace of an endomorphism of a graded free module");
  tfree->add_option("-m,--matrix", o.files, "File declaring the map")->required()->check(CLI::ExistingFile);
  add_format(tfree);
  add_name(tfree);
  std::string module_file, hom_file, resolution_file;
  auto* ths = trace->add_subcommand("hs", "Hattori-Stallings trace of a module endomorphism");
  ths->add_option("-M,--module", module_file, "File declaring the module")->required()->check(CLI::ExistingFile);
  ths->add_option("-f,--hom", hom_file, "File declaring the endomorphism")->required()->check(CLI::ExistingFile);
  ths->add_option("--resolution", resolution_file, "File declaring a resolution to use")->check(CLI::ExistingFile);
  ths->add_option("--max-length", o.max_length, "Bound on the resolution length");
  add_format(ths);
  add_name(ths);

  auto* res = app.add_subcommand("resolve", "Free resolution of a presented module");
  res->add_option("-M,--module", o.files, "File declaring the module")->required()->check(CLI::ExistingFile);
  res->add_option("--max-length", o.max_length, "Bound on the resolution length");
  add_format(res);
  add_name(res);

  auto* zz = app.add_subcommand("zigzag", "Check the standard duality data of a graded free module");
  zz->add_option("-A,--module", o.files, "File declaring the free module")->required()->check(CLI::ExistingFile);
  add_format(zz);
  add_name(zz);

  auto* ct = app.add_subcommand("ctrace", "Categorical trace of an endomorphism");
  ct->add_option("-f,--matrix", o.files, "File declaring the map")->required()->check(CLI::ExistingFile);
  add_format(ct);
  add_name(ct);

  auto* add = app.add_subcommand("check-additivity", "Trace defect of a short exact sequence");
  add->add_option("-s,--ses", o.files, "File declaring the sequence")->required()->check(CLI::ExistingFile);
  add->add_option("--max-length", o.max_length, "Bound on the resolution lengths");
  add_format(add);
  add_name(add);

  auto* lef = app.add_subcommand("lefschetz", "The Lefschetz catalog");
  lef->require_subcommand(1);
  auto* lrun = lef->add_subcommand("run", "Run catalog cases against their oracles");
  lrun->add_option("--filter", o.filter, "Only cases whose name contains this text");
  lrun->add_option("--catalog", o.catalog, "Catalog directory")->check(CLI::ExistingDirectory);
  add_format(lrun);
  auto* llist = lef->add_subcommand("list", "List catalog cases");
  llist->add_option("--catalog", o.catalog, "Catalog directory")->check(CLI::ExistingDirectory);
  add_format(llist);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (o.emit_grammar) {
    std::cout << grammar_text();
    return kExitOk;
  }

  try {
    if (tfree->parsed()) return cmd_trace_free(o);
    if (ths->parsed()) {
      o.files = {module_file, hom_file};
      if (module_file == hom_file) o.files.pop_back();
      return cmd_trace_hs(o, resolution_file);
    }
    if (res->parsed()) return cmd_resolve(o);
    if (zz->parsed()) return cmd_zigzag(o);
    if (ct->parsed()) return cmd_ctrace(o);
    if (add->parsed()) return cmd_additivity(o);
    if (lrun->parsed()) return cmd_lefschetz_run(o);
    if (llist->parsed()) return cmd_lefschetz_list(o);
  } catch (const hst::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitInput;
  } catch (const hst::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const hst::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  std::cout << app.help();
  return kExitOk;
}
