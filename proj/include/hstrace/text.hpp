#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hstrace/errors.hpp"
#include "hstrace/lefschetz.hpp"
#include "hstrace/monoidal.hpp"

namespace hst {

struct SourceLocation {
  int line = 1;
  int column = 1;
};

class ParseError : public Error {
public:
  ParseError(std::string source, SourceLocation where, const std::string& message)
      : Error(source + ":" + std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
        where_(where) {}
  SourceLocation where() const { return where_; }

private:
  SourceLocation where_;
};

struct HomEntry {
  std::string source, target;
  ModuleHom hom;
};

struct ResolutionEntry {
  std::string module;
  Resolution resolution;
};

struct SesEntry {
  std::array<std::string, 3> modules;
  std::array<std::string, 2> maps;
  std::array<std::string, 2> endos;
  SESWithEndos ses;
};

struct CaseEntry {
  std::string even, odd, endo_even, endo_odd;
  ExampleCase value;
};

/// Everything declared in one input file. Names share a single namespace.
struct Document {
  std::optional<RingSpec> ring;
  std::vector<std::string> order;  // names in declaration order
  std::map<std::string, GradedFreeModule> free_modules;
  std::map<std::string, GradedMatrixHom> maps;
  std::map<std::string, PresentedModule> modules;
  std::map<std::string, HomEntry> homs;
  std::map<std::string, ResolutionEntry> resolutions;
  std::map<std::string, SesEntry> sequences;
  std::map<std::string, CaseEntry> cases;

  /// The unique object of a kind, or the named one. Throws InvalidArgument.
  const GradedMatrixHom& map(const std::string& name = "") const;
  const GradedFreeModule& free_module(const std::string& name = "") const;
  const PresentedModule& module(const std::string& name = "") const;
  const ModuleHom& hom(const std::string& name = "") const;
  const Resolution& resolution(const std::string& name = "") const;
  const SESWithEndos& sequence(const std::string& name = "") const;
};

Document parse_document(std::string_view text, const std::string& source_name = "<input>");
Document parse_file(const std::filesystem::path& path);
/// Several files read in order into one document; a repeated identical ring
/// declaration is allowed.
Document parse_files(const std::vector<std::filesystem::path>& paths);

/// Parses a single ring element in the expression syntax of the format.
RingElement parse_element(const RingSpec& ring, std::string_view text);
RingSpec parse_ring(std::string_view text);

std::string print_document(const Document& doc);

/// The format description printed by --emit-grammar.
const char* grammar_text();

}  // namespace hst
