#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hstrace/matrix.hpp"
#include "hstrace/submodule.hpp"

namespace hst {

/// A finitely presented graded module coker(relations: P1 -> P0).
///
/// Relations must have odd degree; the columns are the relations.
class PresentedModule {
public:
  PresentedModule(GradedFreeModule generators, GradedMatrixHom relations);

  static PresentedModule free(const GradedFreeModule& generators);
  /// Relation source shifts are inferred so that the relation map has degree 1.
  static PresentedModule from_relations(const GradedFreeModule& generators, const Matrix& relations);

  const RingSpec& ring() const { return generators_.ring(); }
  const GradedFreeModule& generators() const { return generators_; }
  const GradedMatrixHom& relations() const { return relations_; }
  const Submodule& relation_module() const { return *relation_module_; }

  std::string to_string() const;

private:
  GradedFreeModule generators_;
  GradedMatrixHom relations_;
  std::shared_ptr<const Submodule> relation_module_;
};

/// A module map given by a lift on generators. Well-definedness is not
/// enforced on construction; see hom_well_defined.
class ModuleHom {
public:
  ModuleHom(PresentedModule source, PresentedModule target, GradedMatrixHom lift);

  static ModuleHom identity(const PresentedModule& m);
  static ModuleHom zero(const PresentedModule& source, const PresentedModule& target, long degree);

  const PresentedModule& source() const { return source_; }
  const PresentedModule& target() const { return target_; }
  const GradedMatrixHom& lift() const { return lift_; }
  long degree() const { return lift_.degree(); }

private:
  PresentedModule source_;
  PresentedModule target_;
  GradedMatrixHom lift_;
};

/// g after f at module level.
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);

/// lift * source_relations = target_relations * certificate when ok.
struct WellDefinedness {
  bool ok = false;
  std::optional<Matrix> certificate;
};
WellDefinedness hom_well_defined(const ModuleHom& f);

/// Equal as module maps: the difference of the lifts lands in the target relations.
bool equal_as_module_maps(const ModuleHom& f, const ModuleHom& g);

/// Generators of {x in f.source() : f x in im relations}, as a degree-1 hom
/// into f.source().
GradedMatrixHom kernel_modulo(const GradedMatrixHom& f, const GradedMatrixHom& relations);

/// P_l -> ... -> P_1 -> P_0 -> M with degree-one boundaries.
///
/// boundaries[j - 1] is d_j : P_j -> P_{j-1}. The augmentation maps P_0 onto
/// the generators of the presented module (the identity for resolutions
/// built by resolve()).
struct Resolution {
  PresentedModule module;
  std::vector<GradedFreeModule> modules;
  std::vector<GradedMatrixHom> boundaries;
  GradedMatrixHom augmentation;

  std::size_t length() const { return modules.empty() ? 0 : modules.size() - 1; }
};

constexpr int kDefaultMaxLength = 32;

/// Iterated syzygies starting from the presentation. Throws LengthExceeded
/// when the kernel has not vanished after max_length stages.
Resolution resolve(const PresentedModule& m, int max_length = kDefaultMaxLength);

struct ResolutionCheck {
  bool ok = true;
  std::string failure;
};
/// d o d = 0, odd boundary degrees, and exactness by two-sided membership at every stage.
ResolutionCheck verify_resolution(const Resolution& r);

/// Chain map f_0..f_l over the resolution with d_j f_j = f_{j-1} d_j and
/// aug f_0 = lift(f) aug modulo relations. Throws InternalError if a lifting
/// equation has no solution.
std::vector<GradedMatrixHom> lift_endomorphism(const ModuleHom& f, const Resolution& r);

/// Exact check of the chain-map equations.
bool is_chain_lift(const ModuleHom& f, const Resolution& r, const std::vector<GradedMatrixHom>& chain);

}  // namespace hst
