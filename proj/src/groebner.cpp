#include "hstrace/groebner.hpp"

#include <algorithm>
#include <queue>

namespace hst::gb {

int pot_compare(const ModTerm& a, const ModTerm& b) {
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return degrevlex_compare(a.mono, b.mono);
}

ModVec make_vector(std::vector<ModTerm> terms) {
  std::sort(terms.begin(), terms.end(), [](const ModTerm& a, const ModTerm& b) { return pot_compare(a, b) > 0; });
  ModVec out;
  for (auto& t : terms) {
    if (!out.empty() && pot_compare(out.back(), t) == 0) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

ModVec add_multiple(const ModVec& a, const Integer& c, const Monomial& mono, const ModVec& b) {
  ModVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  ModTerm scratch;
  auto shifted = [&](const ModTerm& t) {
    scratch.comp = t.comp;
    scratch.mono = t.mono;
    for (std::size_t k = 0; k < mono.size(); ++k) scratch.mono[k] += mono[k];
    scratch.coeff = c * t.coeff;
    return scratch;
  };
  bool have = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have) {
      shifted(b[j]);
      have = true;
    }
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (!have) cmp = 1;
    else cmp = pot_compare(a[i], scratch);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(scratch));
      have = false;
      ++j;
    } else {
      Integer s = a[i].coeff + scratch.coeff;
      if (s != 0) out.push_back(ModTerm{a[i].comp, a[i].mono, std::move(s)});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial q(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) q[k] = b[k] - a[k];
  return q;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial l(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) l[k] = std::max(a[k], b[k]);
  return l;
}

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

bool strongly_divides(const ModTerm& g, const ModTerm& t) {
  return g.comp == t.comp && divides(g.mono, t.mono) &&
         mpz_divisible_p(t.coeff.get_mpz_t(), g.coeff.get_mpz_t()) != 0;
}

void normalize_sign(ModVec& v) {
  if (!v.empty() && v.front().coeff < 0)
    for (auto& t : v) t.coeff = -t.coeff;
}

struct Pair {
  long degree;
  std::size_t i, j;
  bool operator>(const Pair& o) const {
    if (degree != o.degree) return degree > o.degree;
    if (j != o.j) return j > o.j;
    return i > o.i;
  }
};

long total_degree(const Monomial& m) {
  long d = 0;
  for (auto e : m) d += e;
  return d;
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t nvars, std::vector<ModVec> generators) : nvars_(nvars) {
  std::vector<std::pair<std::size_t, std::size_t>> fresh;
  std::priority_queue<Pair, std::vector<Pair>, std::greater<Pair>> queue;
  auto flush = [&] {
    for (auto [i, j] : fresh)
      queue.push(Pair{total_degree(lcm(basis_[i].front().mono, basis_[j].front().mono)), i, j});
    fresh.clear();
  };
  for (auto& g : generators) {
    insert(std::move(g), fresh);
    flush();
  }
  while (!queue.empty()) {
    Pair p = queue.top();
    queue.pop();
    if (!active_[p.i] || !active_[p.j]) continue;
    ++pairs_processed_;
    const ModVec& f = basis_[p.i];
    const ModVec& g = basis_[p.j];
    const ModTerm& lf = f.front();
    const ModTerm& lg = g.front();
    Monomial l = lcm(lf.mono, lg.mono);
    Monomial mf = quotient(l, lf.mono), mg = quotient(l, lg.mono);
    Integer d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), lf.coeff.get_mpz_t(), lg.coeff.get_mpz_t());
    // S-vector: (lg/d) mf f - (lf/d) mg g
    Integer cf = lg.coeff / d, cg = lf.coeff / d;
    ModVec spoly = add_multiple(add_multiple({}, cf, mf, f), -cg, mg, g);
    // G-vector: s mf f + t mg g, leading coefficient d; redundant when one coefficient divides the other
    bool need_gpoly = !mpz_divisible_p(lg.coeff.get_mpz_t(), lf.coeff.get_mpz_t()) &&
                      !mpz_divisible_p(lf.coeff.get_mpz_t(), lg.coeff.get_mpz_t());
    ModVec gpoly;
    if (need_gpoly) gpoly = add_multiple(add_multiple({}, s, mf, f), t, mg, g);
    insert(std::move(spoly), fresh);
    flush();
    if (need_gpoly) {
      insert(std::move(gpoly), fresh);
      flush();
    }
  }
  interreduce();
}

const ModVec* GroebnerBasis::find_reducer(const ModTerm& t) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (active_[i] && strongly_divides(basis_[i].front(), t)) return &basis_[i];
  return nullptr;
}

ModVec GroebnerBasis::top_reduce(ModVec v) const {
  while (!v.empty()) {
    const ModVec* g = find_reducer(v.front());
    if (!g) break;
    Integer q = v.front().coeff / g->front().coeff;
    Monomial m = quotient(v.front().mono, g->front().mono);
    v = add_multiple(v, -q, m, *g);
  }
  return v;
}

ModVec GroebnerBasis::full_reduce(ModVec v) const {
  ModVec done;
  while (!v.empty()) {
    const ModTerm& t = v.front();
    // an exact quotient removes the term; otherwise the smallest leading
    // coefficient leaves the remainder of the coefficient
    const ModVec* best = nullptr;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      if (!active_[i]) continue;
      const ModTerm& l = basis_[i].front();
      if (l.comp != t.comp || !divides(l.mono, t.mono)) continue;
      if (mpz_divisible_p(t.coeff.get_mpz_t(), l.coeff.get_mpz_t())) {
        best = &basis_[i];
        break;
      }
      if (cmpabs(l.coeff, t.coeff) < 0 && (!best || cmpabs(l.coeff, best->front().coeff) < 0)) best = &basis_[i];
    }
    if (best) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), t.coeff.get_mpz_t(), best->front().coeff.get_mpz_t());
      Monomial m = quotient(t.mono, best->front().mono);
      v = add_multiple(v, -q, m, *best);
    } else {
      done.push_back(std::move(v.front()));
      v.erase(v.begin());
    }
  }
  return done;
}

ModVec GroebnerBasis::reduce(ModVec v, std::uint32_t limit) const {
  ModVec done;
  while (!v.empty()) {
    const ModTerm& t = v.front();
    if (t.comp >= limit) {
      done.insert(done.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
      break;
    }
    if (const ModVec* g = find_reducer(t)) {
      Integer q = t.coeff / g->front().coeff;
      Monomial m = quotient(t.mono, g->front().mono);
      v = add_multiple(v, -q, m, *g);
    } else {
      done.push_back(std::move(v.front()));
      v.erase(v.begin());
    }
  }
  return done;
}

// An element whose leading term becomes strongly divisible by the new one is
// retired and its reduction inserted instead; the module is unchanged and the
// pairs of the retired element are skipped.
void GroebnerBasis::insert(ModVec v, std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<ModVec> pending{std::move(v)};
  while (!pending.empty()) {
    ModVec w = full_reduce(std::move(pending.back()));
    pending.pop_back();
    if (w.empty()) continue;
    normalize_sign(w);
    std::size_t idx = basis_.size();
    for (std::size_t i = 0; i < idx; ++i) {
      if (!active_[i] || basis_[i].front().comp != w.front().comp) continue;
      if (strongly_divides(w.front(), basis_[i].front())) {
        active_[i] = false;
        pending.push_back(basis_[i]);
      } else {
        pairs.emplace_back(i, idx);
      }
    }
    basis_.push_back(std::move(w));
    active_.push_back(true);
  }
}

void GroebnerBasis::interreduce() {
  // drop elements whose leading term is strongly divisible by another's
  std::vector<bool> keep = active_;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    for (std::size_t j = 0; j < basis_.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const auto& li = basis_[i].front();
      const auto& lj = basis_[j].front();
      if (!strongly_divides(lj, li)) continue;
      bool equal = pot_compare(li, lj) == 0 && li.coeff == lj.coeff;
      if (!equal || j < i) keep[i] = false;
    }
  }
  std::vector<ModVec> kept;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (keep[i]) kept.push_back(std::move(basis_[i]));
  std::sort(kept.begin(), kept.end(),
            [](const ModVec& a, const ModVec& b) { return pot_compare(a.front(), b.front()) > 0; });
  basis_ = std::move(kept);
  active_.assign(basis_.size(), true);

  // tail reduction, each element against the others
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    ModVec lead{basis_[i].front()};
    ModVec tail(basis_[i].begin() + 1, basis_[i].end());
    ModVec reduced;
    while (!tail.empty()) {
      const ModTerm& t = tail.front();
      const ModVec* reducer = nullptr;
      for (std::size_t j = 0; j < basis_.size(); ++j)
        if (j != i && strongly_divides(basis_[j].front(), t)) {
          reducer = &basis_[j];
          break;
        }
      if (reducer) {
        Integer q = t.coeff / reducer->front().coeff;
        Monomial m = quotient(t.mono, reducer->front().mono);
        tail = add_multiple(tail, -q, m, *reducer);
      } else {
        reduced.push_back(std::move(tail.front()));
        tail.erase(tail.begin());
      }
    }
    lead.insert(lead.end(), std::make_move_iterator(reduced.begin()), std::make_move_iterator(reduced.end()));
    basis_[i] = std::move(lead);
  }
}

}  // namespace hst::gb
