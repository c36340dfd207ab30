#pragma once

#include <cstdint>
#include <vector>

#include "hstrace/ring.hpp"

// Strong Groebner bases for submodules of Z[x_1..x_n]^rank.
//
// Terms are ordered position-over-term: a lower component index is larger,
// and within a component monomials compare by degrevlex. A vector is stored
// with its terms in decreasing order, so front() is the leading term.
namespace hst::gb {

struct ModTerm {
  std::uint32_t comp;
  Monomial mono;
  Integer coeff;
};

using ModVec = std::vector<ModTerm>;

/// -1/0/1 on (component, monomial); coefficients are ignored.
int pot_compare(const ModTerm& a, const ModTerm& b);

/// Canonicalizes unsorted terms (merging duplicates, dropping zeros).
ModVec make_vector(std::vector<ModTerm> terms);

/// a + c * mono * b
ModVec add_multiple(const ModVec& a, const Integer& c, const Monomial& mono, const ModVec& b);

/// Reduced strong Groebner basis over the integers.
class GroebnerBasis {
public:
  GroebnerBasis(std::size_t nvars, std::vector<ModVec> generators);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<ModVec>& elements() const { return basis_; }

  /// Strong reduction of every term whose component is below `limit`;
  /// terms at or above `limit` are carried along unreduced.
  ModVec reduce(ModVec v, std::uint32_t limit) const;
  /// Reduction of every term, by exact quotients where possible and otherwise
  /// to the remainder modulo a smaller leading coefficient.
  ModVec full_reduce(ModVec v) const;
  /// Reduction of the leading term only, as long as possible.
  ModVec top_reduce(ModVec v) const;

  std::size_t pairs_processed() const { return pairs_processed_; }

private:
  const ModVec* find_reducer(const ModTerm& t) const;
  void insert(ModVec v, std::vector<std::pair<std::size_t, std::size_t>>& pairs);
  void interreduce();

  std::size_t nvars_;
  std::vector<ModVec> basis_;
  std::vector<bool> active_;
  std::size_t pairs_processed_ = 0;
};

}  // namespace hst::gb
