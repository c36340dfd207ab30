#include "hstrace/module.hpp"

#include <sstream>

#include "hstrace/errors.hpp"

namespace hst {

// ---------------------------------------------------------------------------
// PresentedModule

PresentedModule::PresentedModule(GradedFreeModule generators, GradedMatrixHom relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  if (relations_.target() != generators_)
    throw ShapeMismatch("presentation: relations do not land in the generators");
  if (generators_.ring().reduce(relations_.degree()) % 2 == 0 || relations_.degree() % 2 == 0)
    throw InvalidArgument("presentation: relation map must have odd degree, got " +
                          std::to_string(relations_.degree()));
  relation_module_ = std::make_shared<const Submodule>(relations_);
}

PresentedModule PresentedModule::free(const GradedFreeModule& generators) {
  return PresentedModule(generators,
                         GradedMatrixHom::zero(GradedFreeModule(generators.ring(), {}), generators, 1));
}

PresentedModule PresentedModule::from_relations(const GradedFreeModule& generators, const Matrix& relations) {
  if (relations.rows() != generators.rank())
    throw ShapeMismatch("presentation: relation matrix has " + std::to_string(relations.rows()) +
                        " rows for " + std::to_string(generators.rank()) + " generators");
  Matrix rel = relations.cols() == 0 ? Matrix(generators.ring(), generators.rank(), 0) : relations;
  GradedFreeModule src(generators.ring(), infer_source_shifts(generators, rel, 1));
  return PresentedModule(generators, GradedMatrixHom(src, generators, 1, rel));
}

std::string PresentedModule::to_string() const {
  std::ostringstream os;
  os << "{ gens " << generators_.to_string() << "; rels " << relations_.matrix().to_string() << " }";
  return os.str();
}

// ---------------------------------------------------------------------------
// ModuleHom

ModuleHom::ModuleHom(PresentedModule source, PresentedModule target, GradedMatrixHom lift)
    : source_(std::move(source)), target_(std::move(target)), lift_(std::move(lift)) {
  if (lift_.source() != source_.generators() || lift_.target() != target_.generators())
    throw ShapeMismatch("module hom: lift does not map generators to generators");
}

ModuleHom ModuleHom::identity(const PresentedModule& m) {
  return ModuleHom(m, m, GradedMatrixHom::identity(m.generators()));
}

ModuleHom ModuleHom::zero(const PresentedModule& source, const PresentedModule& target, long degree) {
  return ModuleHom(source, target, GradedMatrixHom::zero(source.generators(), target.generators(), degree));
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  return ModuleHom(f.source(), g.target(), compose(g.lift(), f.lift()));
}

WellDefinedness hom_well_defined(const ModuleHom& f) {
  Matrix images = f.lift().matrix() * f.source().relations().matrix();
  WellDefinedness out;
  const auto& target_rel = f.target().relation_module();
  Matrix cert(f.source().ring(), f.target().relations().source().rank(), images.cols());
  for (std::size_t j = 0; j < images.cols(); ++j) {
    auto nf = target_rel.normal_form(images.column(j));
    if (!nf.is_member()) return out;
    cert.set_column(j, nf.certificate);
  }
  out.ok = true;
  out.certificate = std::move(cert);
  return out;
}

bool equal_as_module_maps(const ModuleHom& f, const ModuleHom& g) {
  if (f.source().generators() != g.source().generators() || f.target().generators() != g.target().generators())
    return false;
  Matrix diff = f.lift().matrix() - g.lift().matrix();
  return f.target().relation_module().contains_columns(diff);
}

GradedMatrixHom kernel_modulo(const GradedMatrixHom& f, const GradedMatrixHom& relations) {
  auto combined = hconcat(f, relations);
  auto syz = syzygies(combined);
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < f.source().rank(); ++i) rows.push_back(i);
  GradedMatrixHom projected(syz.source(), f.source(), 1, syz.matrix().select_rows(rows));
  return prune_columns(projected);
}

// ---------------------------------------------------------------------------
// Resolutions

Resolution resolve(const PresentedModule& m, int max_length) {
  Resolution r{m, {m.generators()}, {}, GradedMatrixHom::identity(m.generators())};
  // zero relations contribute nothing
  const auto& rel = m.relations();
  std::vector<std::size_t> nonzero;
  for (std::size_t j = 0; j < rel.source().rank(); ++j)
    if (!rel.matrix().column_is_zero(j)) nonzero.push_back(j);
  if (nonzero.empty()) return r;
  if (max_length < 1) throw LengthExceeded(max_length);
  std::vector<long> shifts;
  for (auto j : nonzero) shifts.push_back(rel.source().shift(j));
  GradedMatrixHom d1 = with_degree(
      GradedMatrixHom(GradedFreeModule(m.ring(), shifts), rel.target(), rel.degree(), rel.matrix().select_columns(nonzero)),
      1);
  r.modules.push_back(d1.source());
  r.boundaries.push_back(std::move(d1));
  for (;;) {
    auto next = syzygies(r.boundaries.back());
    if (next.source().rank() == 0) break;
    if (static_cast<int>(r.boundaries.size()) >= max_length) throw LengthExceeded(max_length);
    r.modules.push_back(next.source());
    r.boundaries.push_back(std::move(next));
  }
  return r;
}

ResolutionCheck verify_resolution(const Resolution& r) {
  ResolutionCheck out;
  auto fail = [&](std::string why) {
    out.ok = false;
    out.failure = std::move(why);
    return out;
  };
  if (r.modules.empty()) return fail("no modules");
  if (r.boundaries.size() + 1 != r.modules.size()) return fail("boundary count does not match module count");
  const auto& m = r.module;
  if (r.augmentation.source() != r.modules[0] || r.augmentation.target() != m.generators())
    return fail("augmentation does not map P_0 to the generators");
  if (!m.ring().degrees_equal(r.augmentation.degree(), 0)) return fail("augmentation must have degree 0");
  for (std::size_t j = 0; j < r.boundaries.size(); ++j) {
    const auto& d = r.boundaries[j];
    if (d.source() != r.modules[j + 1] || d.target() != r.modules[j])
      return fail("d_" + std::to_string(j + 1) + " has the wrong source or target");
    if (d.degree() % 2 == 0) return fail("d_" + std::to_string(j + 1) + " has even degree");
  }
  // surjective onto M
  auto onto = hconcat(r.augmentation, m.relations());
  Submodule onto_image(onto);
  if (!onto_image.contains_columns(Matrix::identity(m.ring(), m.generators().rank())))
    return fail("augmentation is not surjective");
  // exactness at P_0: ker(P_0 -> M) = im d_1
  auto ker0 = kernel_modulo(r.augmentation, m.relations());
  if (r.boundaries.empty()) {
    if (!ker0.matrix().is_zero() && ker0.source().rank() > 0) return fail("P_0 -> M is not injective");
  } else {
    const auto& d1 = r.boundaries[0];
    if (!m.relation_module().contains_columns(r.augmentation.matrix() * d1.matrix()))
      return fail("augmentation o d_1 is not zero in M");
    if (!Submodule(d1).contains_columns(ker0.matrix())) return fail("not exact at P_0");
  }
  for (std::size_t j = 0; j < r.boundaries.size(); ++j) {
    const auto& d = r.boundaries[j];
    auto ker = syzygies(d);
    if (j + 1 < r.boundaries.size()) {
      const auto& next = r.boundaries[j + 1];
      if (!(d.matrix() * next.matrix()).is_zero())
        return fail("d_" + std::to_string(j + 1) + " o d_" + std::to_string(j + 2) + " != 0");
      if (!Submodule(next).contains_columns(ker.matrix()))
        return fail("not exact at P_" + std::to_string(j + 1));
    } else if (ker.source().rank() > 0) {
      return fail("last boundary d_" + std::to_string(j + 1) + " is not injective");
    }
  }
  return out;
}

std::vector<GradedMatrixHom> lift_endomorphism(const ModuleHom& f, const Resolution& r) {
  if (f.source().generators() != r.module.generators() || f.target().generators() != r.module.generators())
    throw ShapeMismatch("lift_endomorphism: map is not an endomorphism of the resolved module");
  std::vector<GradedMatrixHom> chain;
  const long deg = f.degree();
  const auto& ring = r.module.ring();

  bool identity_aug = r.augmentation.source() == r.augmentation.target() &&
                      r.augmentation.matrix() == Matrix::identity(ring, r.modules[0].rank());
  if (identity_aug) {
    chain.push_back(GradedMatrixHom(r.modules[0], r.modules[0], deg, f.lift().matrix()));
  } else {
    // aug * f_0 = lift * aug modulo relations
    Matrix rhs = f.lift().matrix() * r.augmentation.matrix();
    Submodule image(hconcat(r.augmentation, r.module.relations()));
    Matrix x = image.solve(rhs);
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < r.modules[0].rank(); ++i) rows.push_back(i);
    chain.push_back(GradedMatrixHom(r.modules[0], r.modules[0], deg, x.select_rows(rows)));
  }
  for (std::size_t j = 1; j < r.modules.size(); ++j) {
    const auto& d = r.boundaries[j - 1];
    Matrix rhs = chain.back().matrix() * d.matrix();
    Matrix x;
    try {
      x = Submodule(d).solve(rhs);
    } catch (const InternalError& e) {
      throw InternalError("lift_endomorphism: stage " + std::to_string(j) + ": " + e.what());
    }
    chain.push_back(GradedMatrixHom(r.modules[j], r.modules[j], deg, std::move(x)));
  }
  return chain;
}

bool is_chain_lift(const ModuleHom& f, const Resolution& r, const std::vector<GradedMatrixHom>& chain) {
  if (chain.size() != r.modules.size()) return false;
  Matrix top = r.augmentation.matrix() * chain[0].matrix() - f.lift().matrix() * r.augmentation.matrix();
  if (!r.module.relation_module().contains_columns(top)) return false;
  for (std::size_t j = 1; j < chain.size(); ++j) {
    const auto& d = r.boundaries[j - 1].matrix();
    if (d * chain[j].matrix() != chain[j - 1].matrix() * d) return false;
  }
  return true;
}

}  // namespace hst
