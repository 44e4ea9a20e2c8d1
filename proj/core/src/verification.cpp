#include "masseylab/verification.hpp"

#include <algorithm>

#include "masseylab/error.hpp"
#include "masseylab/layered_lift.hpp"

namespace masseylab {

bool has_adjacent_ones(std::span<const Residue> pattern) {
  for (std::size_t i = 0; i + 1 < pattern.size(); ++i)
    if (pattern[i] && pattern[i + 1]) return true;
  return false;
}

UniTriMatrix block_lift(std::span<const Residue> pattern) {
  if (pattern.empty()) fail(ErrorKind::BadParameter, "sign pattern must be nonempty");
  for (Residue r : pattern)
    if (r > 1) fail(ErrorKind::BadParameter, "sign pattern entries are 0 or 1");
  for (std::size_t i = 0; i + 1 < pattern.size(); ++i)
    if (pattern[i] && pattern[i + 1])
      fail(ErrorKind::AdjacentOnes, "pattern has ones at positions " + std::to_string(i + 1) + " and " +
                                        std::to_string(i + 2));
  const auto n = std::uint32_t(pattern.size());
  UniTriMatrix a(n + 1, 2);
  for (std::uint32_t i = 1; i <= n; ++i) a.set(i, i + 1, pattern[i - 1]);
  return a;
}

bool CaseAudit::none_of_order_two() const {
  return std::all_of(orders.begin(), orders.end(), [](std::uint32_t o) { return o > 2; });
}

CaseAudit case_by_case_audit(const FpVector& target) {
  if (target.size() != 2) fail(ErrorKind::ShapeMismatch, "phi_3 has two coordinates");
  CaseAudit out;
  out.target = target;
  const auto& u3 = materialized_quotient(3, 2);
  for (Elem x = 0; x < u3.table().order(); ++x) {
    UniTriMatrix u = u3.decode(x);
    if (phi_map(u) == target) out.preimages.push_back(u);
  }
  std::sort(out.preimages.begin(), out.preimages.end());
  for (const auto& u : out.preimages) out.orders.push_back(u.order());
  return out;
}

std::vector<UniTriMatrix> splice_lifts(std::span<const UniTriMatrix> left, std::span<const UniTriMatrix> right) {
  if (left.size() != right.size()) fail(ErrorKind::SizeMismatch, "lifts are defined on different groups");
  std::vector<UniTriMatrix> out;
  for (std::size_t x = 0; x < left.size(); ++x) {
    if (x > 0 && (left[x].size() != left[0].size() || right[x].size() != right[0].size()))
      fail(ErrorKind::SizeMismatch, "images of one lift differ in size");
    out.push_back(block_diagonal_sum(left[x], right[x]));
  }
  return out;
}

bool is_matrix_hom(const FiniteGroup& g, std::span<const UniTriMatrix> images) {
  if (images.size() != g.order()) return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (images[g.mul(x, y)] != images[x] * images[y]) return false;
  return true;
}

bool solves_dwyer(const MasseyQuery& q, std::span<const UniTriMatrix> images) {
  if (images.size() != q.group.order() || images[0].size() != q.n() + 1) return false;
  if (!is_matrix_hom(q.group, images)) return false;
  const auto want = negated_character(q.group, q.classes);
  for (Elem x = 0; x < q.group.order(); ++x)
    if (phi_map(images[x]) != want[x]) return false;
  return true;
}

// --- easy vanishing --------------------------------------------------------------------

bool EasyVanishingReport::all_obstructions_zero() const {
  for (const auto& t : tuples)
    for (const auto& s : t.steps)
      if (!s.class_zero) return false;
  return true;
}

bool EasyVanishingReport::all_verified() const {
  return std::all_of(tuples.begin(), tuples.end(), [](const TupleDrill& t) { return t.verified; });
}

TupleDrill drill_tuple(const MasseyQuery& q, const Cohomology& h) {
  q.validate();
  const auto& g = q.group;
  const std::uint32_t n = q.n(), m = n + 1, p = q.p;
  TupleDrill out;
  for (const auto& a : q.classes) out.coords.push_back(h.h1_coordinates(a));

  const CentralSeries cs = central_series_ker_phi(n, p);
  const std::size_t len = cs.length();
  // start in U/Ker(phi) = (Z/p)^n
  std::vector<UniTriMatrix> img;
  for (const auto& v : negated_character(g, q.classes)) {
    UniTriMatrix u(m, p);
    for (std::uint32_t i = 1; i <= n; ++i) u.set(i, i + 1, v[i - 1]);
    img.push_back(std::move(u));
  }
  std::vector<Elem> args(2);
  for (std::size_t t = len; t-- > 0;) {
    const UniTriGroup lower = cs.quotient(t);
    const auto [pi, pj] = cs.positions[t];
    Cochain c(g, p, 2);
    for (Elem x = 1; x < g.order(); ++x) {
      for (Elem y = 1; y < g.order(); ++y) {
        UniTriMatrix d = lower.mul(lower.mul(img[g.mul(x, y)], lower.inverse(img[y])), lower.inverse(img[x]));
        UniTriMatrix rest = d;
        rest.set(pi, pj, 0);
        if (!rest.is_identity()) fail(ErrorKind::NotACocycle, "lift defect left the central step kernel");
        args = {x, y};
        c.set(args, d.at(pi, pj));
      }
    }
    DrillStep step{pi, pj, c.is_zero(), h.is_coboundary(c)};
    out.steps.push_back(step);
    if (!step.class_zero) return out;  // cannot happen when H^2 = 0
    Cochain b = *h.coboundary_preimage(c);
    for (Elem x = 1; x < g.order(); ++x) {
      UniTriMatrix e(m, p);
      e.set(pi, pj, b.at(x));
      img[x] = lower.mul(img[x], e);
    }
  }
  out.solution = std::move(img);
  out.verified = solves_dwyer(q, out.solution);
  return out;
}

EasyVanishingReport easy_vanishing_drill(const FiniteGroup& g, std::uint32_t p, std::uint32_t n) {
  Cohomology h(g, p);
  EasyVanishingReport out;
  out.h2_dim = h.h2_dim();
  if (out.h2_dim != 0)
    fail(ErrorKind::NotApplicable, "H^2(G, Z/p) has dimension " + std::to_string(out.h2_dim) + ", not 0");
  out.series_length = central_series_ker_phi(n, p).length();
  const auto els = h.h1_elements();
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= els.size();
  for (std::size_t t = 0; t < total; ++t) {
    MasseyQuery q{g, p, std::vector<Cochain>(n, Cochain(g, p, 1))};
    std::size_t v = t;
    for (std::uint32_t i = n; i-- > 0;) {
      q.classes[i] = els[v % els.size()];
      v /= els.size();
    }
    out.tuples.push_back(drill_tuple(q, h));
  }
  return out;
}

// --- descending induction ---------------------------------------------------------------

namespace {

std::optional<std::vector<UniTriMatrix>> blind_u3(const FiniteGroup& g, const Cochain& a, const Cochain& b,
                                                  SearchStatus* status, SearchBudget* budget) {
  std::vector<Cochain> pair{a, b};
  LayeredLifter lifter(g, UniTriGroup(3, a.modulus()), negated_superdiagonals(g, pair));
  return lifter.first(status, budget);
}

void descend_into(const MasseyQuery& q, const Cohomology& h, SearchBudget* budget, DescentReport& rep) {
  const auto& g = q.group;
  const std::uint32_t n = q.n(), m = n + 1, p = q.p;
  SearchStatus status = SearchStatus::Complete;
  if (n == 2) {
    auto sol = blind_u3(g, q.classes[0], q.classes[1], &status, budget);
    if (!sol) {
      rep.status = status == SearchStatus::BudgetExceeded ? DescentStatus::BudgetExceeded : DescentStatus::Stuck;
      rep.stuck_n = 2;
      rep.stuck_k = 1;
      return;
    }
    rep.status = DescentStatus::Solved;
    rep.solution = std::move(*sol);
    return;
  }
  MasseyQuery head{g, p, std::vector<Cochain>(q.classes.begin(), q.classes.end() - 1)};
  descend_into(head, h, budget, rep);
  if (rep.status != DescentStatus::Solved) return;
  auto right = blind_u3(g, q.classes[n - 2], q.classes[n - 1], &status, budget);
  if (!right) {
    rep.status = status == SearchStatus::BudgetExceeded ? DescentStatus::BudgetExceeded : DescentStatus::Stuck;
    rep.stuck_n = n;
    rep.stuck_k = n - 1;
    return;
  }
  // base: psi_left x psi_right lands in Q_{n-1,n+1}
  std::vector<FiberElem> psi;
  for (Elem x = 0; x < g.order(); ++x) psi.push_back({rep.solution[x], (*right)[x]});
  const auto elements = h.h1_elements();
  for (std::uint32_t k = n - 1; k >= 2; --k) {
    FiberQuotient here(k, m, p), below(k - 1, m, p);
    DescentStep step;
    step.n = n;
    step.k = k;
    Cochain o = rho_obstruction_cocycle(g, below, psi);
    step.obstruction = h.normal_form(o);
    const Cochain& a = q.classes[k - 2];
    const Cochain* chi = nullptr;
    for (const auto& c : elements) {
      if (h.is_coboundary(o + cup(a, c))) {
        chi = &c;
        break;
      }
    }
    if (!chi) {
      rep.steps.push_back(std::move(step));
      rep.status = DescentStatus::Stuck;
      rep.stuck_n = n;
      rep.stuck_k = k;
      return;
    }
    step.chi = h.h1_coordinates(*chi);
    rep.steps.push_back(std::move(step));
    auto twisted = twist(here, psi, *chi);
    Cochain o2 = rho_obstruction_cocycle(g, below, twisted);
    auto b = h.coboundary_preimage(o2);
    if (!b) fail(ErrorKind::NotACocycle, "twisted obstruction is not a coboundary");
    std::vector<FiberElem> next;
    for (Elem x = 0; x < g.order(); ++x)
      next.push_back(below.mul(below.section(twisted[x], 0), below.kernel_element(b->at(x))));
    if (!is_fiber_hom(g, below, next)) fail(ErrorKind::NotAHomomorphism, "corrected lift is not a homomorphism");
    psi = std::move(next);
  }
  // Q_{1,n+1}: the second block is the whole matrix
  rep.solution.clear();
  for (const auto& e : psi) rep.solution.push_back(e.right);
  rep.status = DescentStatus::Solved;
}

}  // namespace

DescentReport descend(const MasseyQuery& q, const Cohomology& h, SearchBudget* budget) {
  q.validate();
  DescentReport rep;
  descend_into(q, h, budget, rep);
  if (rep.status == DescentStatus::Solved) rep.verified = solves_dwyer(q, rep.solution);
  return rep;
}

DescentReport demushkin_descent(const MasseyQuery& q, SearchBudget* budget) {
  q.validate();
  Cohomology h(q.group, q.p);
  for (std::size_t i = 0; i < q.classes.size(); ++i)
    if (q.classes[i].is_zero())
      fail(ErrorKind::HypothesisViolated, "a_" + std::to_string(i + 1) + " = 0; splice lifts instead");
  for (std::size_t i = 0; i + 1 < q.classes.size(); ++i)
    if (!h.is_coboundary(cup(q.classes[i], q.classes[i + 1])))
      fail(ErrorKind::HypothesisViolated,
           "a_" + std::to_string(i + 1) + " u a_" + std::to_string(i + 2) + " is not zero in H^2");
  auto check = demushkin_check(q.group, q.p);
  if (!check.verdict)
    fail(ErrorKind::FormDegenerate, "cup form is not a nondegenerate pairing into a 1-dimensional H^2");
  return descend(q, h, budget);
}

}  // namespace masseylab
