#include "hstrace/text.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace hst {

namespace {

const char* error_label(const Error& e) {
  if (dynamic_cast<const NotHomogeneous*>(&e)) return "not homogeneous";
  if (dynamic_cast<const RingMismatch*>(&e)) return "ring mismatch";
  if (dynamic_cast<const ShapeMismatch*>(&e)) return "shape mismatch";
  if (dynamic_cast<const InvalidArgument*>(&e)) return "invalid argument";
  return "error";
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
  Parser(std::string_view text, std::string source) : src_(text), source_(std::move(source)) {}

  void run() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
  }

  Document document() {
    run();
    return std::move(doc_);
  }

  // continue with another input, keeping everything declared so far
  void reset(std::string_view text, std::string source) {
    src_ = text;
    source_ = std::move(source);
    pos_ = 0;
    line_ = col_ = 1;
  }

  Document take() { return std::move(doc_); }

  RingSpec ring_only() {
    skip_ws();
    auto r = ring_spec();
    skip_ws();
    if (!at_end()) fail(loc(), "unexpected text after ring");
    return r;
  }

  RingElement element_only(const RingSpec& ring) {
    doc_.ring = ring;
    auto e = element();
    skip_ws();
    if (!at_end()) fail(loc(), "unexpected text after expression");
    return e;
  }

private:
  std::string_view src_;
  std::string source_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Document doc_;

  // -- lexical helpers -------------------------------------------------------

  SourceLocation loc() const { return {line_, col_}; }

  [[noreturn]] void fail(SourceLocation where, const std::string& message) const {
    throw ParseError(source_, where, message);
  }

  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return at_end() ? '\0' : src_[pos_]; }
  char peek_at(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string describe_here() const {
    if (at_end()) return "end of input";
    return std::string("'") + peek() + "'";
  }

  bool accept(char c) {
    skip_ws();
    if (peek() == c && !at_end()) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c) fail(loc(), std::string("expected '") + c + "', found " + describe_here());
    advance();
  }

  std::string identifier(bool allow_hyphen, const char* what) {
    skip_ws();
    if (!ident_start(peek())) fail(loc(), std::string("expected ") + what + ", found " + describe_here());
    std::string out;
    while (!at_end() && (ident_char(peek()) || (allow_hyphen && peek() == '-' && ident_char(peek_at(1))))) {
      out += peek();
      advance();
    }
    return out;
  }

  bool peek_word(std::string_view w) {
    skip_ws();
    if (src_.substr(pos_, w.size()) != w) return false;
    char after = peek_at(w.size());
    return !(ident_char(after) || after == '-');
  }

  bool accept_word(std::string_view w) {
    if (!peek_word(w)) return false;
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return true;
  }

  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail(loc(), "expected '" + std::string(w) + "', found " + describe_here());
  }

  Integer big_integer() {
    skip_ws();
    auto start = loc();
    std::string digits;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') digits += '-';
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(start, "expected integer, found " + describe_here());
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Integer(digits);
  }

  long integer() {
    auto start = loc();
    Integer v = big_integer();
    if (!v.fits_slong_p()) fail(start, "integer out of range");
    return v.get_si();
  }

  std::string quoted() {
    expect('"');
    std::string out;
    while (!at_end() && peek() != '"') {
      if (peek() == '\\') {
        advance();
        if (at_end()) break;
      }
      out += peek();
      advance();
    }
    if (at_end()) fail(loc(), "unterminated string");
    advance();
    return out;
  }

  std::vector<long> shift_list() {
    expect('[');
    std::vector<long> out;
    if (accept(']')) return out;
    do out.push_back(integer());
    while (accept(','));
    expect(']');
    return out;
  }

  const RingSpec& ring(SourceLocation where) const {
    if (!doc_.ring) fail(where, "no ring declared; the first statement must be 'ring'");
    return *doc_.ring;
  }

  // rows of elements; an empty outer list has zero rows and cols_if_empty columns
  Matrix matrix_literal(std::size_t cols_if_empty) {
    const RingSpec& r = ring(loc());
    auto start = loc();
    expect('[');
    std::vector<std::vector<RingElement>> rows;
    if (!accept(']')) {
      do {
        expect('[');
        std::vector<RingElement> row;
        if (!accept(']')) {
          do row.push_back(element());
          while (accept(','));
          expect(']');
        }
        rows.push_back(std::move(row));
      } while (accept(','));
      expect(']');
    }
    std::size_t cols = rows.empty() ? cols_if_empty : rows[0].size();
    for (const auto& row : rows)
      if (row.size() != cols) fail(start, "matrix rows have different lengths");
    Matrix m(r, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  // -- ring elements -----------------------------------------------------------

  RingElement element() {
    const RingSpec& r = ring(loc());
    RingElement sum = RingElement::zero(r);
    skip_ws();
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = peek() == '-';
      advance();
    }
    RingElement t = term();
    sum = negate ? -t : t;
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        advance();
        sum += term();
      } else if (peek() == '-') {
        advance();
        sum -= term();
      } else {
        break;
      }
    }
    return sum;
  }

  RingElement term() {
    RingElement p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  RingElement factor() {
    RingElement base = atom();
    skip_ws();
    if (peek() == '^') {
      advance();
      auto where = loc();
      long e = integer();
      try {
        return base.pow(e);
      } catch (const Error& err) {
        fail(where, std::string(error_label(err)) + ": " + err.what());
      }
    }
    return base;
  }

  RingElement atom() {
    const RingSpec& r = ring(loc());
    skip_ws();
    auto where = loc();
    char c = peek();
    if (c == '(') {
      advance();
      auto e = element();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RingElement::constant(r, big_integer());
    if (ident_start(c)) {
      std::string name = identifier(false, "variable");
      const auto& names = r.var_names();
      for (std::size_t k = 0; k < names.size(); ++k)
        if (names[k] == name) return RingElement::variable(r, k);
      fail(where, "unknown variable '" + name + "' in ring " + r.to_string());
    }
    fail(where, "expected ring element, found " + describe_here());
  }

  // -- rings -------------------------------------------------------------------

  RingSpec ring_spec() {
    auto where = loc();
    expect_word("Z");
    std::vector<std::string> names;
    std::vector<long> degrees;
    std::set<std::string> inverted;
    if (accept('[')) {
      do {
        auto item_at = loc();
        std::string name = identifier(false, "variable name");
        skip_ws();
        if (peek() == '^') {
          advance();
          expect('-');
          skip_ws();
          if (peek() == '1') advance();
          if (std::find(names.begin(), names.end(), name) == names.end())
            fail(item_at, "inverse of undeclared variable '" + name + "'");
          inverted.insert(name);
        } else {
          long deg = 0;
          if (accept(':')) deg = integer();
          names.push_back(name);
          degrees.push_back(deg);
        }
      } while (accept(','));
      expect(']');
    }
    Grading grading = Grading::Z;
    if (accept_word("grading")) {
      if (accept_word("Z2")) grading = Grading::Z2;
      else if (accept_word("Z")) grading = Grading::Z;
      else fail(loc(), "expected grading Z or Z2");
    }
    try {
      if (names.empty()) return RingSpec::integers(grading);
      if (inverted.empty()) return RingSpec::polynomial(names, degrees, grading);
      if (inverted.size() != names.size())
        fail(where, "either every variable or none must be inverted (mixed Laurent rings are not supported)");
      return RingSpec::laurent(names, degrees, grading);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(where, std::string(error_label(e)) + ": " + e.what());
    }
  }

  // -- statements --------------------------------------------------------------

  void declare(const std::string& name, SourceLocation where) {
    for (const auto& n : doc_.order)
      if (n == name) fail(where, "duplicate name '" + name + "'");
    doc_.order.push_back(name);
  }

  template <class Map>
  const typename Map::mapped_type& lookup(const Map& m, const std::string& name, SourceLocation where,
                                          const char* kind) {
    auto it = m.find(name);
    if (it == m.end()) fail(where, std::string("unknown ") + kind + " '" + name + "'");
    return it->second;
  }

  GradedFreeModule free_ref() {
    skip_ws();
    auto where = loc();
    if (peek() == '[') return GradedFreeModule(ring(where), shift_list());
    std::string name = identifier(true, "free module");
    return lookup(doc_.free_modules, name, where, "free module");
  }

  void end_item() {
    skip_ws();
    accept(';');
  }

  void statement() {
    auto where = loc();
    try {
      if (accept_word("ring")) {
        auto r = ring_spec();
        if (doc_.ring && *doc_.ring != r) fail(where, "ring redeclared as " + r.to_string());
        doc_.ring = r;
      } else if (accept_word("free")) {
        free_statement(where);
      } else if (accept_word("map")) {
        map_statement(where);
      } else if (accept_word("module")) {
        module_statement(where);
      } else if (accept_word("hom")) {
        hom_statement(where);
      } else if (accept_word("resolution")) {
        resolution_statement(where);
      } else if (accept_word("ses")) {
        ses_statement(where);
      } else if (accept_word("case")) {
        case_statement(where);
      } else {
        fail(where, "expected a statement (ring, free, map, module, hom, resolution, ses, case), found " +
                        describe_here());
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail(where, std::string(error_label(e)) + ": " + e.what());
    }
    end_item();
  }

  void free_statement(SourceLocation where) {
    ring(where);
    std::string name = identifier(true, "name");
    declare(name, where);
    doc_.free_modules.emplace(name, GradedFreeModule(*doc_.ring, shift_list()));
  }

  void map_statement(SourceLocation where) {
    ring(where);
    std::string name = identifier(true, "name");
    expect(':');
    auto src = free_ref();
    expect('-');
    expect('>');
    auto tgt = free_ref();
    long degree = 0;
    if (accept_word("degree")) degree = integer();
    auto m = matrix_literal(src.rank());
    if (m.rows() == 0 && tgt.rank() != 0) fail(where, "matrix has no rows");
    declare(name, where);
    doc_.maps.emplace(name, GradedMatrixHom(src, tgt, degree, std::move(m)));
  }

  void module_statement(SourceLocation where) {
    const RingSpec& r = ring(where);
    std::string name = identifier(true, "name");
    expect('{');
    std::optional<std::vector<long>> gens, relshifts;
    std::optional<Matrix> rels;
    long reldegree = 1;
    while (!accept('}')) {
      auto item = loc();
      if (accept_word("gens")) gens = shift_list();
      else if (accept_word("rels")) rels = matrix_literal(0);
      else if (accept_word("relshifts")) relshifts = shift_list();
      else if (accept_word("reldegree")) reldegree = integer();
      else fail(item, "expected gens, rels, relshifts or reldegree, found " + describe_here());
      end_item();
    }
    if (!gens) fail(where, "module needs 'gens'");
    GradedFreeModule g(r, *gens);
    std::optional<PresentedModule> m;
    if (!rels) {
      if (relshifts && !relshifts->empty()) fail(where, "relshifts without rels");
      m = PresentedModule::free(g);
    } else {
      Matrix rel = *rels;
      if (rel.rows() == 0) rel = Matrix(r, g.rank(), relshifts ? relshifts->size() : 0);
      if (rel.rows() != g.rank())
        fail(where, "rels has " + std::to_string(rel.rows()) + " rows for " + std::to_string(g.rank()) + " generators");
      if (relshifts) {
        if (relshifts->size() != rel.cols()) fail(where, "relshifts does not match the number of relations");
        m = PresentedModule(g, GradedMatrixHom(GradedFreeModule(r, *relshifts), g, reldegree, rel));
      } else {
        auto shifts = infer_source_shifts(g, rel, reldegree);
        m = PresentedModule(g, GradedMatrixHom(GradedFreeModule(r, shifts), g, reldegree, rel));
      }
    }
    declare(name, where);
    doc_.modules.emplace(name, *m);
  }

  void hom_statement(SourceLocation where) {
    ring(where);
    std::string name = identifier(true, "name");
    expect(':');
    auto src_at = loc();
    std::string src = identifier(true, "module");
    const auto& sm = lookup(doc_.modules, src, src_at, "module");
    expect('-');
    expect('>');
    auto tgt_at = loc();
    std::string tgt = identifier(true, "module");
    const auto& tm = lookup(doc_.modules, tgt, tgt_at, "module");
    expect('{');
    std::optional<Matrix> lift;
    long degree = 0;
    while (!accept('}')) {
      auto item = loc();
      if (accept_word("lift")) lift = matrix_literal(sm.generators().rank());
      else if (accept_word("degree")) degree = integer();
      else fail(item, "expected lift or degree, found " + describe_here());
      end_item();
    }
    if (!lift) fail(where, "hom needs 'lift'");
    if (lift->rows() == 0) *lift = Matrix(*doc_.ring, tm.generators().rank(), sm.generators().rank());
    GradedMatrixHom l(sm.generators(), tm.generators(), degree, *lift);
    declare(name, where);
    doc_.homs.emplace(name, HomEntry{src, tgt, ModuleHom(sm, tm, l)});
  }

  void resolution_statement(SourceLocation where) {
    const RingSpec& r = ring(where);
    std::string name = identifier(true, "name");
    expect(':');
    auto mod_at = loc();
    std::string mod = identifier(true, "module");
    const auto& m = lookup(doc_.modules, mod, mod_at, "module");
    expect('{');
    std::vector<GradedFreeModule> stages;
    std::vector<GradedMatrixHom> boundaries;
    std::optional<GradedMatrixHom> aug;
    while (!accept('}')) {
      auto item = loc();
      expect_word("stage");
      GradedFreeModule p(r, shift_list());
      if (stages.empty()) {
        if (accept_word("augment")) {
          Matrix a = matrix_literal(p.rank());
          if (a.rows() == 0) a = Matrix(r, m.generators().rank(), p.rank());
          aug = GradedMatrixHom(p, m.generators(), 0, a);
        }
      } else {
        Matrix d = matrix_literal(p.rank());
        if (d.rows() == 0) d = Matrix(r, stages.back().rank(), p.rank());
        try {
          boundaries.push_back(GradedMatrixHom(p, stages.back(), 1, d));
        } catch (const Error& e) {
          fail(item, std::string(error_label(e)) + ": boundary " + std::to_string(stages.size()) + ": " + e.what());
        }
      }
      stages.push_back(p);
      end_item();
    }
    if (stages.empty()) fail(where, "resolution needs at least one stage");
    if (!aug) {
      if (stages[0] != m.generators()) fail(where, "stage 0 differs from the generators; give 'augment'");
      aug = GradedMatrixHom::identity(m.generators());
    }
    declare(name, where);
    doc_.resolutions.emplace(name, ResolutionEntry{mod, Resolution{m, stages, boundaries, *aug}});
  }

  void ses_statement(SourceLocation where) {
    ring(where);
    std::string name = identifier(true, "name");
    expect('{');
    std::optional<std::array<std::string, 3>> mods;
    std::optional<std::array<std::string, 2>> maps, endos;
    std::array<SourceLocation, 3> at{};
    while (!accept('}')) {
      auto item = loc();
      if (accept_word("modules")) {
        mods.emplace();
        for (int k = 0; k < 3; ++k) {
          skip_ws();
          at[k] = loc();
          (*mods)[k] = identifier(true, "module");
          lookup(doc_.modules, (*mods)[k], at[k], "module");
        }
      } else if (accept_word("maps") || accept_word("endos")) {
        bool is_maps = src_.substr(pos_ - 4, 4) == "maps";
        auto& slot = is_maps ? maps : endos;
        slot.emplace();
        for (int k = 0; k < 2; ++k) {
          skip_ws();
          auto a = loc();
          (*slot)[k] = identifier(true, "hom");
          lookup(doc_.homs, (*slot)[k], a, "hom");
        }
      } else {
        fail(item, "expected modules, maps or endos, found " + describe_here());
      }
      end_item();
    }
    if (!mods || !maps || !endos) fail(where, "ses needs modules, maps and endos");
    auto mod = [&](int k) { return doc_.modules.at((*mods)[k]); };
    auto hom = [&](const std::string& n) { return doc_.homs.at(n).hom; };
    SESWithEndos s{mod(0), mod(1), mod(2), hom((*maps)[0]), hom((*maps)[1]), hom((*endos)[0]), hom((*endos)[1])};
    declare(name, where);
    doc_.sequences.emplace(name, SesEntry{*mods, *maps, *endos, s});
  }

  OracleSpec oracle() {
    OracleSpec o;
    auto where = loc();
    if (accept_word("sphere2")) {
      o.kind = OracleKind::Sphere;
      o.params = {integer()};
    } else if (accept_word("circle")) {
      o.kind = OracleKind::Circle;
      o.params = {integer()};
    } else if (accept_word("torus")) {
      o.kind = OracleKind::Torus;
      expect('[');
      do {
        expect('[');
        std::vector<long> row;
        do row.push_back(integer());
        while (accept(','));
        expect(']');
        o.matrix.push_back(row);
      } while (accept(','));
      expect(']');
      if (o.matrix.size() != 2 || o.matrix[0].size() != 2 || o.matrix[1].size() != 2)
        fail(where, "torus oracle needs a 2x2 integer matrix");
    } else if (accept_word("cpn")) {
      o.kind = OracleKind::Projective;
      long n = integer();
      long q = integer();
      if (n < 0 || q < 0) fail(where, "cpn oracle needs n >= 0 and q >= 0");
      o.params = {n, q};
    } else if (accept_word("rank-sum")) {
      o.kind = OracleKind::RankSum;
    } else if (accept_word("hand")) {
      o.kind = OracleKind::Hand;
      auto at = loc();
      o.hand_value = quoted();
      try {
        parse_element(ring(at), o.hand_value);
      } catch (const ParseError& e) {
        fail(at, std::string("bad hand value: ") + e.what());
      }
    } else {
      fail(where, "expected oracle kind (sphere2, circle, torus, cpn, rank-sum, hand), found " + describe_here());
    }
    return o;
  }

  void case_statement(SourceLocation where) {
    const RingSpec& r = ring(where);
    std::string name = identifier(true, "name");
    expect('{');
    std::string even, odd, endo_even, endo_odd, provenance;
    std::optional<OracleSpec> orc;
    while (!accept('}')) {
      auto item = loc();
      auto ref = [&](const char* kind) {
        skip_ws();
        auto a = loc();
        std::string n = identifier(true, kind);
        if (std::string(kind) == "module") lookup(doc_.modules, n, a, kind);
        else lookup(doc_.homs, n, a, kind);
        return n;
      };
      if (accept_word("even")) even = ref("module");
      else if (accept_word("odd")) odd = ref("module");
      else if (accept_word("endo_even")) endo_even = ref("hom");
      else if (accept_word("endo_odd")) endo_odd = ref("hom");
      else if (accept_word("oracle")) orc = oracle();
      else if (accept_word("provenance")) provenance = quoted();
      else fail(item, "expected even, odd, endo_even, endo_odd, oracle or provenance, found " + describe_here());
      end_item();
    }
    if (even.empty() || odd.empty() || endo_even.empty() || endo_odd.empty() || !orc)
      fail(where, "case needs even, odd, endo_even, endo_odd and oracle");
    if (provenance.empty()) fail(where, "case needs a provenance note");
    const auto& fe = doc_.homs.at(endo_even).hom;
    const auto& fo = doc_.homs.at(endo_odd).hom;
    if (doc_.homs.at(endo_even).source != even || doc_.homs.at(endo_even).target != even)
      fail(where, "endo_even is not an endomorphism of '" + even + "'");
    if (doc_.homs.at(endo_odd).source != odd || doc_.homs.at(endo_odd).target != odd)
      fail(where, "endo_odd is not an endomorphism of '" + odd + "'");
    if (!r.degrees_equal(fe.degree(), 0) || !r.degrees_equal(fo.degree(), 0))
      fail(where, "case endomorphisms must have degree 0");
    if (!hom_well_defined(fe).ok) fail(where, "endo_even is not well defined");
    if (!hom_well_defined(fo).ok) fail(where, "endo_odd is not well defined");
    ExampleCase c{name, r, doc_.modules.at(even), doc_.modules.at(odd), fe, fo, *orc, provenance};
    declare(name, where);
    doc_.cases.emplace(name, CaseEntry{even, odd, endo_even, endo_odd, std::move(c)});
  }
};

// -- printing --------------------------------------------------------------------

std::string shifts_text(const std::vector<long>& s) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << s[i];
  os << "]";
  return os.str();
}

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class M>
const typename M::mapped_type& unique_or_named(const M& m, const std::string& name, const char* kind) {
  if (name.empty()) {
    if (m.size() != 1)
      throw InvalidArgument(std::string("expected exactly one ") + kind + " in the input, found " +
                            std::to_string(m.size()));
    return m.begin()->second;
  }
  auto it = m.find(name);
  if (it == m.end()) throw InvalidArgument(std::string("no ") + kind + " named '" + name + "'");
  return it->second;
}

}  // namespace

std::string oracle_to_string(const OracleSpec& o) {
  switch (o.kind) {
    case OracleKind::Sphere: return "sphere2 " + std::to_string(o.params.at(0));
    case OracleKind::Circle: return "circle " + std::to_string(o.params.at(0));
    case OracleKind::Torus: {
      std::ostringstream os;
      os << "torus [[" << o.matrix[0][0] << ", " << o.matrix[0][1] << "], [" << o.matrix[1][0] << ", "
         << o.matrix[1][1] << "]]";
      return os.str();
    }
    case OracleKind::Projective: return "cpn " + std::to_string(o.params.at(0)) + " " + std::to_string(o.params.at(1));
    case OracleKind::RankSum: return "rank-sum";
    case OracleKind::Hand: return "hand " + quote(o.hand_value);
  }
  return "";
}

const GradedMatrixHom& Document::map(const std::string& name) const { return unique_or_named(maps, name, "map"); }
const GradedFreeModule& Document::free_module(const std::string& name) const {
  return unique_or_named(free_modules, name, "free module");
}
const PresentedModule& Document::module(const std::string& name) const {
  return unique_or_named(modules, name, "module");
}
const ModuleHom& Document::hom(const std::string& name) const { return unique_or_named(homs, name, "hom").hom; }
const Resolution& Document::resolution(const std::string& name) const {
  return unique_or_named(resolutions, name, "resolution").resolution;
}
const SESWithEndos& Document::sequence(const std::string& name) const {
  return unique_or_named(sequences, name, "ses").ses;
}

Document parse_document(std::string_view text, const std::string& source_name) {
  return Parser(text, source_name).document();
}

Document parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str(), path.string());
}

Document parse_files(const std::vector<std::filesystem::path>& paths) {
  std::vector<std::string> texts;
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    texts.push_back(buf.str());
  }
  Parser p("", "");
  for (std::size_t i = 0; i < paths.size(); ++i) {
    p.reset(texts[i], paths[i].string());
    p.run();
  }
  return p.take();
}

RingElement parse_element(const RingSpec& ring, std::string_view text) {
  return Parser(text, "<element>").element_only(ring);
}

RingSpec parse_ring(std::string_view text) { return Parser(text, "<ring>").ring_only(); }

std::string print_document(const Document& doc) {
  std::ostringstream os;
  if (doc.ring) os << "ring " << doc.ring->to_string() << "\n";
  for (const auto& name : doc.order) {
    if (auto it = doc.free_modules.find(name); it != doc.free_modules.end()) {
      os << "free " << name << " " << shifts_text(it->second.shifts()) << "\n";
    } else if (auto it = doc.maps.find(name); it != doc.maps.end()) {
      const auto& f = it->second;
      os << "map " << name << " : " << shifts_text(f.source().shifts()) << " -> " << shifts_text(f.target().shifts())
         << " degree " << f.degree() << " " << matrix_text(f.matrix()) << "\n";
    } else if (auto it = doc.modules.find(name); it != doc.modules.end()) {
      const auto& m = it->second;
      os << "module " << name << " { gens " << shifts_text(m.generators().shifts());
      if (m.relations().source().rank() > 0) {
        os << "; rels " << matrix_text(m.relations().matrix()) << "; relshifts "
           << shifts_text(m.relations().source().shifts());
        if (m.relations().degree() != 1) os << "; reldegree " << m.relations().degree();
      }
      os << " }\n";
    } else if (auto it = doc.homs.find(name); it != doc.homs.end()) {
      const auto& h = it->second;
      os << "hom " << name << " : " << h.source << " -> " << h.target << " { lift " << matrix_text(h.hom.lift().matrix());
      if (h.hom.degree() != 0) os << "; degree " << h.hom.degree();
      os << " }\n";
    } else if (auto it = doc.resolutions.find(name); it != doc.resolutions.end()) {
      const auto& r = it->second.resolution;
      os << "resolution " << name << " : " << it->second.module << " {\n";
      os << "  stage " << shifts_text(r.modules[0].shifts());
      bool identity_aug = r.augmentation.source() == r.augmentation.target() &&
                          r.augmentation.matrix() == Matrix::identity(r.module.ring(), r.modules[0].rank());
      if (!identity_aug) os << " augment " << matrix_text(r.augmentation.matrix());
      os << "\n";
      for (std::size_t j = 1; j < r.modules.size(); ++j)
        os << "  stage " << shifts_text(r.modules[j].shifts()) << " " << matrix_text(r.boundaries[j - 1].matrix())
           << "\n";
      os << "}\n";
    } else if (auto it = doc.sequences.find(name); it != doc.sequences.end()) {
      const auto& s = it->second;
      os << "ses " << name << " { modules " << s.modules[0] << " " << s.modules[1] << " " << s.modules[2]
         << "; maps " << s.maps[0] << " " << s.maps[1] << "; endos " << s.endos[0] << " " << s.endos[1] << " }\n";
    } else if (auto it = doc.cases.find(name); it != doc.cases.end()) {
      const auto& c = it->second;
      os << "case " << name << " {\n  even " << c.even << "\n  odd " << c.odd << "\n  endo_even " << c.endo_even
         << "\n  endo_odd " << c.endo_odd << "\n  oracle " << oracle_to_string(c.value.oracle) << "\n  provenance "
         << quote(c.value.provenance) << "\n}\n";
    }
  }
  return os.str();
}

const char* grammar_text() {
  return R"(hstrace input format

Whitespace and newlines separate tokens; '#' starts a comment running to the
end of the line. Items inside braces are separated by ';' or newlines.

file        := ring-decl statement*
ring-decl   := 'ring' ring [ 'grading' ('Z' | 'Z2') ]
ring        := 'Z'                                  integers
             | 'Z' '[' var-item (',' var-item)* ']'
var-item    := NAME [ ':' INT ]                     generator with even degree (default 0)
             | NAME '^-' [ '1' ]                    declares NAME invertible
                                                    (all generators or none)
statement   := free | map | module | hom | resolution | ses | case

free        := 'free' ID shifts
map         := 'map' ID ':' fmod '->' fmod [ 'degree' INT ] matrix
fmod        := ID | shifts
module      := 'module' ID '{' 'gens' shifts
                              [ 'rels' matrix ]           columns are relations
                              [ 'relshifts' shifts ]      inferred when absent
                              [ 'reldegree' INT ] '}'     odd, default 1
hom         := 'hom' ID ':' ID '->' ID '{' 'lift' matrix [ 'degree' INT ] '}'
resolution  := 'resolution' ID ':' ID '{' stage0 stage* '}'
stage0      := 'stage' shifts [ 'augment' matrix ]        identity when absent
stage       := 'stage' shifts matrix                      boundary of degree 1 into the previous stage
ses         := 'ses' ID '{' 'modules' ID ID ID  'maps' ID ID  'endos' ID ID '}'
case        := 'case' ID '{' 'even' ID  'odd' ID  'endo_even' ID  'endo_odd' ID
                             'oracle' oracle  'provenance' STRING '}'
oracle      := 'sphere2' INT            degree-d self-map of S^2
             | 'circle' INT             x -> d x on the circle
             | 'torus' '[[' INT ',' INT '],[' INT ',' INT ']]'
             | 'cpn' INT INT            n and q for z_i -> z_i^q on CP^n
             | 'rank-sum'               alternating rank sum; endos must be identities
             | 'hand' STRING            a ring element computed by hand

shifts      := '[' [ INT (',' INT)* ] ']'
matrix      := '[' [ row (',' row)* ] ']'               rows of the matrix
row         := '[' [ expr (',' expr)* ] ']'
expr        := [ '+' | '-' ] term ( ('+' | '-') term )*
term        := factor ( '*' factor )*
factor      := atom [ '^' INT ]                         negative powers of units only
atom        := INT | NAME | '(' expr ')'
ID          := letter or '_', then letters, digits, '_' and inner '-'
STRING      := '"' ... '"' with backslash escapes

Entry (i, j) of a map F[n] -> F[m] of degree d has degree m_i - n_j + d.
Matrix columns are images of source generators.
)";
}

}  // namespace hst
