#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hst {

using Integer = mpz_class;
using Exponent = std::int32_t;
using Monomial = std::vector<Exponent>;

enum class RingKind { Integers, Polynomial, Laurent };
enum class Grading { Z, Z2 };

// Degree-reverse-lexicographic comparison: total degree first, ties broken at
// the last differing variable where the smaller exponent wins. Returns -1/0/1.
int degrevlex_compare(const Monomial& a, const Monomial& b);

struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return degrevlex_compare(a, b) > 0; }
};

/// Description of one of the supported coefficient rings: Z, Z[x_1..x_n] or
/// Z[t_1^{+-1}..t_n^{+-1}], all generators in even degree.
///
/// Cheap to copy; the variable tables are shared.
class RingSpec {
public:
  RingSpec();

  static RingSpec integers(Grading grading = Grading::Z);
  static RingSpec polynomial(std::vector<std::string> names, std::vector<long> degrees,
                             Grading grading = Grading::Z);
  static RingSpec laurent(std::vector<std::string> names, std::vector<long> degrees,
                          Grading grading = Grading::Z);

  RingKind kind() const { return data_->kind; }
  Grading grading() const { return data_->grading; }
  std::size_t num_vars() const { return data_->names.size(); }
  const std::vector<std::string>& var_names() const { return data_->names; }
  const std::vector<long>& var_degrees() const { return data_->degrees; }
  bool vars_invertible() const { return data_->kind == RingKind::Laurent; }

  /// Representative of a degree in the grading group (reduced mod 2 under Z2).
  long reduce(long degree) const;
  bool degrees_equal(long a, long b) const { return reduce(a) == reduce(b); }
  /// Grading degree of a monomial, unreduced.
  long monomial_degree(const Monomial& m) const;

  std::string to_string() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);
  friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

private:
  struct Data {
    RingKind kind;
    Grading grading;
    std::vector<std::string> names;
    std::vector<long> degrees;
  };
  explicit RingSpec(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static RingSpec make(RingKind kind, std::vector<std::string> names, std::vector<long> degrees,
                       Grading grading);
  std::shared_ptr<const Data> data_;
};

/// Result of a homogeneous-degree query.
class Degree {
public:
  enum class Kind { Any, Homogeneous, Inhomogeneous };

  static Degree any() { return Degree(Kind::Any, 0); }
  static Degree of(long value) { return Degree(Kind::Homogeneous, value); }
  static Degree inhomogeneous() { return Degree(Kind::Inhomogeneous, 0); }

  Kind kind() const { return kind_; }
  bool is_any() const { return kind_ == Kind::Any; }
  bool is_homogeneous() const { return kind_ == Kind::Homogeneous; }
  bool is_inhomogeneous() const { return kind_ == Kind::Inhomogeneous; }
  long value() const { return value_; }

  friend bool operator==(const Degree&, const Degree&) = default;

private:
  Degree(Kind kind, long value) : kind_(kind), value_(value) {}
  Kind kind_;
  long value_;
};

struct Term {
  Monomial exponents;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.exponents == b.exponents && a.coeff == b.coeff;
  }
};

/// An element of a RingSpec in canonical form: terms sorted by decreasing
/// degrevlex order, no zero coefficients.
class RingElement {
public:
  RingElement();  // zero of Z
  explicit RingElement(RingSpec ring);  // zero of ring

  static RingElement zero(const RingSpec& ring) { return RingElement(ring); }
  static RingElement one(const RingSpec& ring) { return constant(ring, 1); }
  static RingElement constant(const RingSpec& ring, const Integer& value);
  static RingElement variable(const RingSpec& ring, std::size_t index);
  static RingElement monomial(const RingSpec& ring, Monomial exponents, const Integer& coeff = 1);
  /// Canonicalizes arbitrary (possibly repeated, unsorted, zero) terms.
  static RingElement from_terms(const RingSpec& ring, std::vector<Term> terms);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Value of a constant element; nullopt if some variable occurs.
  std::optional<Integer> constant_value() const;
  const Term& leading_term() const { return terms_.front(); }

  Degree degree() const;

  /// Units are +-1 and, in Laurent rings, +-monomials.
  bool is_unit() const;
  std::optional<RingElement> inverse() const;
  /// Negative exponents require a unit.
  RingElement pow(long exponent) const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);
  RingElement& operator*=(const Integer& scalar);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const RingElement& a, const RingElement& b);
  friend RingElement operator*(RingElement a, const Integer& s) { return a *= s; }
  friend RingElement operator*(const Integer& s, RingElement a) { return a *= s; }

  friend bool operator==(const RingElement& a, const RingElement& b);
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

  std::string to_string() const;

private:
  void check_ring(const RingElement& other, const char* op) const;
  void add_scaled(const RingElement& other, int sign);

  RingSpec ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const RingElement& a);
std::ostream& operator<<(std::ostream& os, const RingSpec& r);

/// Degree-preserving ring homomorphism determined by generator images.
class RingMap {
public:
  RingMap(RingSpec source, RingSpec target, std::vector<RingElement> images);

  static RingMap identity(const RingSpec& ring);

  const RingSpec& source() const { return source_; }
  const RingSpec& target() const { return target_; }
  const std::vector<RingElement>& images() const { return images_; }

  RingElement operator()(const RingElement& a) const;

private:
  RingSpec source_;
  RingSpec target_;
  std::vector<RingElement> images_;
};

inline RingElement apply_ring_map(const RingMap& phi, const RingElement& a) { return phi(a); }

}  // namespace hst
