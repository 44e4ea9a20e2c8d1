#include "masseylab/embedding.hpp"

#include <algorithm>

#include "masseylab/error.hpp"
#include "masseylab/layered_lift.hpp"

namespace masseylab {

void EmbeddingProblem::validate() const {
  if (!alpha.domain().same_table(b) || !alpha.codomain().same_table(a))
    fail(ErrorKind::ShapeMismatch, "alpha must map B to A");
  if (!phi.domain().same_table(g) || !phi.codomain().same_table(a)) fail(ErrorKind::ShapeMismatch, "phi must map G to A");
  if (!alpha.is_homomorphism()) fail(ErrorKind::NotAHomomorphism, "alpha is not a homomorphism");
  if (!phi.is_homomorphism()) fail(ErrorKind::NotAHomomorphism, "phi is not a homomorphism");
  if (!alpha.is_surjective()) fail(ErrorKind::BadParameter, "alpha is not surjective");
}

std::string to_string(SolveVerdict v) {
  switch (v) {
    case SolveVerdict::Solved: return "solved";
    case SolveVerdict::NoSolution: return "no-solution";
    case SolveVerdict::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

SolveResult solve(const EmbeddingProblem& e, SearchBudget* budget) {
  SearchBudget local;
  SearchBudget* b = budget ? budget : &local;
  const auto before = b->used;
  HomConstraint c;
  c.alpha = e.alpha;
  c.target = e.phi;
  SolveResult out;
  auto status = enumerate_homs(
      e.g, e.b, c,
      [&](const GroupHom& h) {
        out.solution = h;
        return false;
      },
      b);
  out.nodes = b->used - before;
  if (out.solution)
    out.verdict = SolveVerdict::Solved;
  else
    out.verdict = status == SearchStatus::BudgetExceeded ? SolveVerdict::BudgetExceeded : SolveVerdict::NoSolution;
  return out;
}

namespace {

PositionSet dwyer_killed(std::uint32_t m, std::uint32_t p, DwyerTarget target) {
  switch (target) {
    case DwyerTarget::Full: return {};
    case DwyerTarget::ModZ: return NamedSubgroup(m, p, SubgroupKind::Z).support();
    case DwyerTarget::ModP: return NamedSubgroup(m, p, SubgroupKind::P).support();
  }
  return {};
}

}  // namespace

EmbeddingProblem build_dwyer_problem(const MasseyQuery& q, DwyerTarget target) {
  q.validate();
  const std::uint32_t n = q.n(), m = n + 1;
  const UniTriGroup& b = materialized_quotient(m, q.p, dwyer_killed(m, q.p, target));
  const FiniteGroup& bt = b.table();
  FiniteGroup a = build_elementary_abelian(q.p, n);
  GroupHom alpha = superdiagonal_hom(b, a);
  std::vector<Elem> img;
  for (const auto& v : negated_character(q.group, q.classes)) img.push_back(encode_vector(v, q.p));
  GroupHom phi(q.group, a, std::move(img));
  return EmbeddingProblem{q.group, a, bt, std::move(alpha), std::move(phi)};
}

DwyerSolution solve_dwyer(const MasseyQuery& q, DwyerTarget target, SearchBudget* budget) {
  q.validate();
  const std::uint32_t m = q.n() + 1;
  LayeredLifter lifter(q.group, UniTriGroup(m, q.p, dwyer_killed(m, q.p, target)),
                       negated_superdiagonals(q.group, q.classes));
  SearchBudget local;
  SearchBudget* b = budget ? budget : &local;
  const auto before = b->used;
  SearchStatus status;
  auto found = lifter.first(&status, b);
  DwyerSolution out;
  out.nodes = b->used - before;
  if (found) {
    out.verdict = SolveVerdict::Solved;
    out.images = std::move(*found);
  } else {
    out.verdict = status == SearchStatus::BudgetExceeded ? SolveVerdict::BudgetExceeded : SolveVerdict::NoSolution;
  }
  return out;
}

RealReport is_real(const EmbeddingProblem& e) {
  RealReport out;
  const auto inv_b = involutions(e.b);
  for (Elem t : involutions(e.g)) {
    const Elem target = e.phi(t);
    if (target == 0) continue;
    auto it = std::find_if(inv_b.begin(), inv_b.end(), [&](Elem b) { return e.alpha(b) == target; });
    if (it == inv_b.end()) {
      out.real = false;
      out.witness = t;
      return out;
    }
    out.lifts.emplace_back(t, *it);
  }
  return out;
}

DwyerRealReport is_real_dwyer(const MasseyQuery& q, SearchBudget* budget) {
  q.validate();
  DwyerRealReport out;
  const FiniteGroup z2 = build_cyclic(2);
  const std::uint32_t m = q.n() + 1;
  const auto chars = negated_character(q.group, q.classes);
  for (Elem t : involutions(q.group)) {
    const FpVector& v = chars[t];
    if (std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; })) continue;
    LayeredLifter lifter(z2, UniTriGroup(m, q.p), {v});
    SearchStatus status;
    auto found = lifter.first(&status, budget);
    if (status == SearchStatus::BudgetExceeded) fail(ErrorKind::BudgetExceeded, "budget spent while testing realness");
    if (!found) {
      out.real = false;
      out.witness = t;
      return out;
    }
    out.lifts.emplace_back(t, (*found)[1]);
  }
  return out;
}

CentralData central_data(const EmbeddingProblem& e, std::optional<Elem> generator) {
  CentralData d;
  d.kernel = e.alpha.kernel();
  for (Elem z : d.kernel)
    for (Elem s : e.b.generators())
      if (e.b.mul(z, s) != e.b.mul(s, z))
        fail(ErrorKind::NotCentral, "kernel element " + std::to_string(z) + " does not commute with " + std::to_string(s));
  const std::size_t order = d.kernel.size();
  if (order < 2 || !is_prime(std::uint32_t(order)))
    fail(ErrorKind::KernelNotOrderP, "kernel has order " + std::to_string(order));
  d.p = std::uint32_t(order);
  d.generator = generator.value_or(d.kernel[1]);
  if (d.generator == 0 || std::find(d.kernel.begin(), d.kernel.end(), d.generator) == d.kernel.end())
    fail(ErrorKind::NotInKernel, "identification generator is not a nontrivial kernel element");
  d.coordinate.assign(e.b.order(), -1);
  Elem z = 0;
  for (std::uint32_t v = 0; v < d.p; ++v) {
    d.coordinate[z] = int(v);
    d.kernel_by_value.push_back(z);
    z = e.b.mul(z, d.generator);
  }
  return d;
}

Cochain obstruction_cocycle(const EmbeddingProblem& e, const CentralData& c, LiftPolicy policy) {
  // fibre representatives of alpha
  std::vector<Elem> rep(e.a.order(), kUnset);
  for (Elem b = 0; b < e.b.order(); ++b) {
    Elem a = e.alpha(b);
    if (rep[a] == kUnset || policy == LiftPolicy::Largest) rep[a] = b;
  }
  rep[0] = 0;
  const auto& g = e.g;
  std::vector<Elem> hat(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    hat[x] = rep[e.phi(x)];
    if (hat[x] == kUnset) fail(ErrorKind::LiftImpossible, "alpha misses phi(" + std::to_string(x) + ")");
  }
  Cochain out(g, c.p, 2);
  std::vector<Elem> args(2);
  for (Elem x = 1; x < g.order(); ++x) {
    for (Elem y = 1; y < g.order(); ++y) {
      Elem v = e.b.mul(e.b.mul(hat[g.mul(x, y)], e.b.inv(hat[y])), e.b.inv(hat[x]));
      if (c.coordinate[v] < 0) fail(ErrorKind::NotACocycle, "lift defect left the kernel");
      args = {x, y};
      out.set(args, Residue(c.coordinate[v]));
    }
  }
  return out;
}

CohomologyClass obstruction(const EmbeddingProblem& e, const CentralData& c, const Cohomology& h, LiftPolicy policy) {
  if (h.modulus() != c.p) fail(ErrorKind::ShapeMismatch, "cohomology modulus differs from the kernel order");
  return h.class_of(obstruction_cocycle(e, c, policy));
}

// --- fibre quotients -------------------------------------------------------------------

Cochain rho_obstruction_cocycle(const FiniteGroup& g, const FiberQuotient& top, std::span<const FiberElem> psi,
                                LiftPolicy policy) {
  if (psi.size() != g.order()) fail(ErrorKind::ShapeMismatch, "one image per element expected");
  const std::uint32_t p = top.modulus();
  std::vector<FiberElem> hat;
  hat.reserve(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Residue corner = (x == 0 || policy == LiftPolicy::Smallest) ? 0 : Residue(p - 1);
    hat.push_back(top.section(psi[x], corner));
  }
  Cochain out(g, p, 2);
  std::vector<Elem> args(2);
  for (Elem x = 1; x < g.order(); ++x) {
    for (Elem y = 1; y < g.order(); ++y) {
      FiberElem v = top.mul(top.mul(hat[g.mul(x, y)], top.inverse(hat[y])), top.inverse(hat[x]));
      args = {x, y};
      out.set(args, top.iota(v));
    }
  }
  return out;
}

std::vector<FiberElem> twist(const FiberQuotient& quotient, std::span<const FiberElem> psi, const Cochain& chi) {
  if (chi.degree() != 1 || chi.modulus() != quotient.modulus() || chi.group().order() != psi.size())
    fail(ErrorKind::TargetMismatch, "chi must be a homomorphism G -> Z/p matching psi");
  std::vector<FiberElem> out;
  out.reserve(psi.size());
  for (Elem x = 0; x < psi.size(); ++x) {
    if (!quotient.is_valid(psi[x])) fail(ErrorKind::TargetMismatch, "psi does not land in the given quotient");
    out.push_back(quotient.mul(psi[x], quotient.kernel_element(chi.at(x))));
  }
  return out;
}

std::vector<FiberElem> fiber_images(const GroupHom& psi, const FiberQuotient& q) {
  if (!psi.codomain().same_table(q.table())) fail(ErrorKind::TargetMismatch, "homomorphism does not land in Q_{k,m}");
  std::vector<FiberElem> out;
  for (Elem x = 0; x < psi.domain().order(); ++x) out.push_back(q.decode(psi(x)));
  return out;
}

bool is_fiber_hom(const FiniteGroup& g, const FiberQuotient& q, std::span<const FiberElem> images) {
  if (images.size() != g.order()) return false;
  for (const auto& e : images)
    if (!q.is_valid(e)) return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (images[g.mul(x, y)] != q.mul(images[x], images[y])) return false;
  return true;
}

std::vector<Cochain> extract_classes(const FiniteGroup& g, const FiberQuotient& q, std::span<const FiberElem> psi) {
  const std::uint32_t p = q.modulus(), n = q.m() - 1;
  std::vector<FpVector> vals(n, FpVector(g.order() - 1));
  for (Elem x = 1; x < g.order(); ++x) {
    auto v = q.phi(psi[x]);
    for (std::uint32_t i = 0; i < n; ++i) vals[i][x - 1] = Residue((p - v[i]) % p);
  }
  std::vector<Cochain> out;
  for (auto& v : vals) out.emplace_back(g, p, 1, std::move(v));
  return out;
}

TwistingCheck verify_twisting(const FiniteGroup& g, std::uint32_t k, std::uint32_t m, std::span<const FiberElem> psi,
                              const Cochain& chi, const Cohomology& h) {
  const std::uint32_t p = h.modulus();
  FiberQuotient lower(k + 1, m, p), top(k, m, p);
  if (!is_fiber_hom(g, lower, psi)) fail(ErrorKind::NotAHomomorphism, "psi is not a homomorphism into Q_{k+1,m}");
  if (!is_cocycle(chi)) fail(ErrorKind::NotAHomomorphism, "chi is not a homomorphism");
  auto twisted = twist(lower, psi, chi);
  auto a = extract_classes(g, lower, psi);
  TwistingCheck out;
  out.lhs = h.normal_form(rho_obstruction_cocycle(g, top, twisted));
  out.rhs = h.normal_form(rho_obstruction_cocycle(g, top, psi) + cup(a[k - 1], chi));
  out.holds = out.lhs == out.rhs;
  return out;
}

}  // namespace masseylab
