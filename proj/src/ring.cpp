#include "hstrace/ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hstrace/errors.hpp"

namespace hst {

int degrevlex_compare(const Monomial& a, const Monomial& b) {
  long da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// RingSpec

RingSpec::RingSpec() : data_(integers().data_) {}

RingSpec RingSpec::make(RingKind kind, std::vector<std::string> names, std::vector<long> degrees,
                        Grading grading) {
  if (names.size() != degrees.size())
    throw InvalidArgument("ring: var_names and var_degrees differ in length");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw InvalidArgument("ring: empty variable name");
    if (!seen.insert(n).second) throw InvalidArgument("ring: duplicate variable name '" + n + "'");
  }
  for (auto d : degrees) {
    if (d % 2 != 0) throw InvalidArgument("ring: generator degrees must be even");
  }
  return RingSpec(std::make_shared<const Data>(Data{kind, grading, std::move(names), std::move(degrees)}));
}

RingSpec RingSpec::integers(Grading grading) {
  static const auto z = std::make_shared<const Data>(Data{RingKind::Integers, Grading::Z, {}, {}});
  static const auto z2 = std::make_shared<const Data>(Data{RingKind::Integers, Grading::Z2, {}, {}});
  return RingSpec(grading == Grading::Z ? z : z2);
}

RingSpec RingSpec::polynomial(std::vector<std::string> names, std::vector<long> degrees, Grading grading) {
  if (names.empty()) return integers(grading);
  return make(RingKind::Polynomial, std::move(names), std::move(degrees), grading);
}

RingSpec RingSpec::laurent(std::vector<std::string> names, std::vector<long> degrees, Grading grading) {
  if (names.empty()) return integers(grading);
  return make(RingKind::Laurent, std::move(names), std::move(degrees), grading);
}

long RingSpec::reduce(long degree) const {
  if (grading() == Grading::Z) return degree;
  long r = degree % 2;
  return r < 0 ? r + 2 : r;
}

long RingSpec::monomial_degree(const Monomial& m) const {
  long d = 0;
  const auto& degs = var_degrees();
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * degs[i];
  return d;
}

std::string RingSpec::to_string() const {
  std::ostringstream os;
  os << "Z";
  if (num_vars() > 0) {
    os << "[";
    for (std::size_t i = 0; i < num_vars(); ++i) {
      if (i) os << ",";
      os << var_names()[i];
      if (var_degrees()[i] != 0) os << ":" << var_degrees()[i];
      if (vars_invertible()) os << "," << var_names()[i] << "^-";
    }
    os << "]";
  }
  if (grading() == Grading::Z2) os << " grading Z2";
  return os.str();
}

bool operator==(const RingSpec& a, const RingSpec& b) {
  if (a.data_ == b.data_) return true;
  return a.kind() == b.kind() && a.grading() == b.grading() && a.var_names() == b.var_names() &&
         a.var_degrees() == b.var_degrees();
}

std::ostream& operator<<(std::ostream& os, const RingSpec& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// RingElement

RingElement::RingElement() : ring_(RingSpec::integers()) {}

RingElement::RingElement(RingSpec ring) : ring_(std::move(ring)) {}

RingElement RingElement::constant(const RingSpec& ring, const Integer& value) {
  RingElement r(ring);
  if (value != 0) r.terms_.push_back(Term{Monomial(ring.num_vars(), 0), value});
  return r;
}

RingElement RingElement::variable(const RingSpec& ring, std::size_t index) {
  if (index >= ring.num_vars()) throw InvalidArgument("variable index out of range");
  Monomial m(ring.num_vars(), 0);
  m[index] = 1;
  return monomial(ring, std::move(m));
}

RingElement RingElement::monomial(const RingSpec& ring, Monomial exponents, const Integer& coeff) {
  std::vector<Term> t;
  t.push_back(Term{std::move(exponents), coeff});
  return from_terms(ring, std::move(t));
}

RingElement RingElement::from_terms(const RingSpec& ring, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.exponents.size() != ring.num_vars())
      throw InvalidArgument("exponent vector length does not match ring " + ring.to_string());
    if (!ring.vars_invertible()) {
      for (auto e : t.exponents)
        if (e < 0) throw InvalidArgument("negative exponent in non-Laurent ring " + ring.to_string());
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return degrevlex_compare(a.exponents, b.exponents) > 0; });
  RingElement r(ring);
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().exponents == t.exponents) {
      r.terms_.back().coeff += t.coeff;
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    } else if (t.coeff != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

bool RingElement::is_one() const {
  auto c = constant_value();
  return c && *c == 1;
}

std::optional<Integer> RingElement::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() != 1) return std::nullopt;
  for (auto e : terms_[0].exponents)
    if (e != 0) return std::nullopt;
  return terms_[0].coeff;
}

Degree RingElement::degree() const {
  if (terms_.empty()) return Degree::any();
  long d0 = ring_.reduce(ring_.monomial_degree(terms_[0].exponents));
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (ring_.reduce(ring_.monomial_degree(terms_[i].exponents)) != d0) return Degree::inhomogeneous();
  }
  return Degree::of(d0);
}

bool RingElement::is_unit() const {
  if (terms_.size() != 1) return false;
  const auto& t = terms_[0];
  if (t.coeff != 1 && t.coeff != -1) return false;
  if (ring_.vars_invertible()) return true;
  for (auto e : t.exponents)
    if (e != 0) return false;
  return true;
}

std::optional<RingElement> RingElement::inverse() const {
  if (!is_unit()) return std::nullopt;
  Monomial m = terms_[0].exponents;
  for (auto& e : m) e = -e;
  return monomial(ring_, std::move(m), terms_[0].coeff);
}

RingElement RingElement::pow(long exponent) const {
  if (exponent < 0) {
    auto inv = inverse();
    if (!inv) throw InvalidArgument("negative power of a non-unit: " + to_string());
    return inv->pow(-exponent);
  }
  RingElement result = one(ring_);
  RingElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

void RingElement::check_ring(const RingElement& other, const char* op) const {
  if (ring_ != other.ring_)
    throw RingMismatch(std::string("ring mismatch in ") + op + ": " + ring_.to_string() + " vs " +
                       other.ring_.to_string());
}

void RingElement::add_scaled(const RingElement& other, int sign) {
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < other.terms_.size()) {
    int c;
    if (i == terms_.size()) c = -1;
    else if (j == other.terms_.size()) c = 1;
    else c = degrevlex_compare(terms_[i].exponents, other.terms_[j].exponents);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(other.terms_[j]);
      if (sign < 0) out.back().coeff = -out.back().coeff;
      ++j;
    } else {
      Integer s = sign > 0 ? Integer(terms_[i].coeff + other.terms_[j].coeff)
                           : Integer(terms_[i].coeff - other.terms_[j].coeff);
      if (s != 0) out.push_back(Term{std::move(terms_[i].exponents), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  check_ring(other, "add");
  add_scaled(other, 1);
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  check_ring(other, "sub");
  add_scaled(other, -1);
  return *this;
}

RingElement& RingElement::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

RingElement operator*(const RingElement& a, const RingElement& b) {
  a.check_ring(b, "mul");
  if (a.is_zero() || b.is_zero()) return RingElement(a.ring_);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  const std::size_t n = a.ring_.num_vars();
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      Monomial m(n);
      for (std::size_t k = 0; k < n; ++k) m[k] = ta.exponents[k] + tb.exponents[k];
      prod.push_back(Term{std::move(m), ta.coeff * tb.coeff});
    }
  }
  return RingElement::from_terms(a.ring_, std::move(prod));
}

RingElement& RingElement::operator*=(const RingElement& other) {
  *this = *this * other;
  return *this;
}

bool operator==(const RingElement& a, const RingElement& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string RingElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Integer c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool has_var = false;
    for (auto e : t.exponents)
      if (e != 0) has_var = true;
    bool wrote = false;
    if (!has_var || c != 1) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      auto e = t.exponents[k];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << ring_.var_names()[k];
      if (e != 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// RingMap

RingMap::RingMap(RingSpec source, RingSpec target, std::vector<RingElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.num_vars())
    throw InvalidArgument("ring map: need one image per source generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& img = images_[i];
    if (img.ring() != target_) throw RingMismatch("ring map: image of generator not in target ring");
    auto deg = img.degree();
    if (deg.is_inhomogeneous())
      throw NotHomogeneous("ring map: image of " + source_.var_names()[i] + " is inhomogeneous");
    if (deg.is_homogeneous()) {
      long want = source_.var_degrees()[i];
      bool ok = (source_.grading() == Grading::Z2 || target_.grading() == Grading::Z2)
                    ? ((want - deg.value()) % 2 == 0)
                    : target_.reduce(want) == deg.value();
      if (!ok)
        throw NotHomogeneous("ring map: image of " + source_.var_names()[i] + " does not have degree " +
                             std::to_string(want));
    }
    if (source_.vars_invertible() && !img.is_unit())
      throw InvalidArgument("ring map: image of invertible generator " + source_.var_names()[i] +
                            " is not a unit in " + target_.to_string());
  }
}

RingMap RingMap::identity(const RingSpec& ring) {
  std::vector<RingElement> imgs;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) imgs.push_back(RingElement::variable(ring, i));
  return RingMap(ring, ring, std::move(imgs));
}

RingElement RingMap::operator()(const RingElement& a) const {
  if (a.ring() != source_) throw RingMismatch("ring map applied to element of " + a.ring().to_string());
  RingElement result(target_);
  for (const auto& t : a.terms()) {
    RingElement term = RingElement::constant(target_, t.coeff);
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      auto e = t.exponents[k];
      if (e == 0) continue;
      if (e < 0 && !images_[k].is_unit())
        throw InvalidArgument("ring map: negative exponent of " + source_.var_names()[k] +
                              " but its image is not invertible");
      term *= images_[k].pow(e);
    }
    result += term;
  }
  return result;
}

}  // namespace hst
