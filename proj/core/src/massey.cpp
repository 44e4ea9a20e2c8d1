#include "masseylab/massey.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "masseylab/error.hpp"
#include "masseylab/layered_lift.hpp"

namespace masseylab {

// --- DefiningSystem -----------------------------------------------------------------

DefiningSystem::DefiningSystem(FiniteGroup g, std::uint32_t p, std::uint32_t n)
    : group_(std::move(g)), p_(p), n_(n) {
  if (n < 2) fail(ErrorKind::BadParameter, "defining systems need n >= 2");
  const std::size_t count = std::size_t(n + 1) * n / 2 - 1;
  entries_.assign(count, Cochain(group_, p, 1));
}

std::size_t DefiningSystem::index(std::uint32_t i, std::uint32_t j) const {
  if (i < 1 || j > n_ + 1 || i >= j || (i == 1 && j == n_ + 1))
    fail(ErrorKind::IndexOutOfRange, "a_(" + std::to_string(i) + "," + std::to_string(j) + ") is not in the system");
  // packed upper-triangular index of an (n+1)x(n+1) array; the corner is last
  return UniTriMatrix::packed_index(n_ + 1, i, j) - (i == 1 ? 0 : 1);
}

void DefiningSystem::set(std::uint32_t i, std::uint32_t j, Cochain c) {
  if (c.degree() != 1 || c.modulus() != p_ || c.group().order() != group_.order())
    fail(ErrorKind::ShapeMismatch, "entries are 1-cochains on the system's group");
  entries_[index(i, j)] = std::move(c);
}

std::vector<Cochain> DefiningSystem::classes() const {
  std::vector<Cochain> out;
  for (std::uint32_t i = 1; i <= n_; ++i) out.push_back(entry(i, i + 1));
  return out;
}

std::optional<DefiningWitness> defining_system_failure(const DefiningSystem& ds) {
  const auto& g = ds.group();
  const std::uint32_t n = ds.n(), p = ds.modulus();
  for (std::uint32_t d = 1; d <= n; ++d) {
    for (std::uint32_t i = 1; i + d <= n + 1; ++i) {
      const std::uint32_t j = i + d;
      if (i == 1 && j == n + 1) continue;
      const Cochain& a = ds.entry(i, j);
      for (Elem x = 1; x < g.order(); ++x) {
        for (Elem y = 1; y < g.order(); ++y) {
          long lhs = long(a.at(y)) - a.at(g.mul(x, y)) + a.at(x);
          long rhs = 0;
          for (std::uint32_t k = i + 1; k < j; ++k) rhs += long(ds.entry(i, k).at(x)) * ds.entry(k, j).at(y);
          if (((lhs - rhs) % long(p) + p) % p != 0) return DefiningWitness{i, j, x, y};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_defining_system(const DefiningSystem& ds) { return !defining_system_failure(ds).has_value(); }

DefiningSystem defining_system_from_images(const FiniteGroup& g, std::span<const UniTriMatrix> images,
                                           SignConvention sign) {
  if (images.size() != g.order() || images.empty()) fail(ErrorKind::ShapeMismatch, "one image per element expected");
  const std::uint32_t m = images[0].size(), p = images[0].modulus();
  if (m < 3) fail(ErrorKind::BadParameter, "defining systems need U_m with m >= 3");
  if (!images[0].is_identity()) fail(ErrorKind::NotAHomomorphism, "identity must map to the identity");
  DefiningSystem ds(g, p, m - 1);
  for (std::uint32_t i = 1; i < m; ++i) {
    for (std::uint32_t j = i + 1; j <= m; ++j) {
      if (i == 1 && j == m) continue;
      FpVector v(g.order() - 1);
      for (Elem x = 1; x < g.order(); ++x) {
        Residue e = images[x].at(i, j);
        v[x - 1] = sign == SignConvention::Negative ? Residue((p - e) % p) : e;
      }
      ds.set(i, j, Cochain(g, p, 1, std::move(v)));
    }
  }
  return ds;
}

DefiningSystem defining_system_from_hom(const GroupHom& psi, const UniTriGroup& target, SignConvention sign) {
  if (!psi.codomain().same_table(target.table()))
    fail(ErrorKind::TargetMismatch, "homomorphism does not land in the given matrix group");
  if (!psi.is_homomorphism()) fail(ErrorKind::NotAHomomorphism, "psi violates the homomorphism law");
  std::vector<UniTriMatrix> images;
  for (Elem x = 0; x < psi.domain().order(); ++x) images.push_back(target.decode(psi(x)));
  return defining_system_from_images(psi.domain(), images, sign);
}

Cochain massey_cocycle(const DefiningSystem& ds) {
  if (auto w = defining_system_failure(ds))
    fail(ErrorKind::NotADefiningSystem, "equation for a_(" + std::to_string(w->i) + "," + std::to_string(w->j) +
                                            ") fails at (" + std::to_string(w->x) + ", " + std::to_string(w->y) + ")");
  const std::uint32_t n = ds.n();
  Cochain sum(ds.group(), ds.modulus(), 2);
  for (std::uint32_t k = 2; k <= n; ++k) sum = sum + cup(ds.entry(1, k), ds.entry(k, n + 1));
  return sum;
}

CohomologyClass massey_value(const DefiningSystem& ds, const Cohomology& h) {
  return h.class_of(massey_cocycle(ds));
}

// --- queries ---------------------------------------------------------------------------

void MasseyQuery::validate() const {
  if (classes.size() < 2) fail(ErrorKind::BadParameter, "Massey products need n >= 2");
  for (const auto& a : classes) {
    if (a.degree() != 1 || a.modulus() != p || a.group().order() != group.order())
      fail(ErrorKind::ShapeMismatch, "classes must be 1-cochains on the query group");
    if (!is_cocycle(a)) fail(ErrorKind::NotAHomomorphism, "a class is not a homomorphism G -> Z/p");
  }
}

bool MasseySet::vanishes() const {
  return std::any_of(values.begin(), values.end(), [](const CohomologyClass& c) { return c.is_zero(); });
}

namespace {

void insert_value(std::map<FpVector, CohomologyClass>& acc, CohomologyClass c) {
  acc.try_emplace(c.key(), std::move(c));
}

MasseySet finish(std::map<FpVector, CohomologyClass>&& acc, SearchStatus status, std::uint64_t nodes) {
  MasseySet out;
  out.status = status;
  out.nodes = nodes;
  for (auto& [key, c] : acc) out.values.push_back(std::move(c));
  return out;
}

MasseySet exhaustive_set(const MasseyQuery& q, const Cohomology& h, SearchBudget* budget) {
  const auto& g = q.group;
  const std::uint32_t p = q.p, n = q.n();
  if (g.order() > 8 || n > 4)
    fail(ErrorKind::SizeLimit, "exhaustive-cochain search needs |G| <= 8 and n <= 4");
  // every 1-cochain, grouped by its coboundary
  const std::size_t dim = g.order() - 1;
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= p;
  std::map<FpVector, std::vector<Cochain>> by_boundary;
  for (std::size_t t = 0; t < total; ++t) {
    FpVector v(dim);
    std::size_t r = t;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = Residue(r % p);
      r /= p;
    }
    Cochain c(g, p, 1, std::move(v));
    by_boundary[coboundary(c).values()].push_back(std::move(c));
  }

  std::vector<std::pair<std::uint32_t, std::uint32_t>> order;
  for (std::uint32_t d = 2; d <= n; ++d)
    for (std::uint32_t i = 1; i + d <= n + 1; ++i)
      if (!(i == 1 && i + d == n + 1)) order.emplace_back(i, i + d);

  DefiningSystem ds(g, p, n);
  for (std::uint32_t i = 1; i <= n; ++i) ds.set(i, i + 1, q.classes[i - 1]);

  std::map<FpVector, CohomologyClass> acc;
  bool out_of_budget = false;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> dfs = [&](std::size_t level) {
    if (out_of_budget) return;
    ++nodes;
    if (budget && !budget->charge()) {
      out_of_budget = true;
      return;
    }
    if (level == order.size()) {
      insert_value(acc, massey_value(ds, h));
      return;
    }
    auto [i, j] = order[level];
    Cochain rhs(g, p, 2);
    for (std::uint32_t k = i + 1; k < j; ++k) rhs = rhs + cup(ds.entry(i, k), ds.entry(k, j));
    auto it = by_boundary.find(rhs.values());
    if (it == by_boundary.end()) return;
    for (const auto& c : it->second) {
      ds.set(i, j, c);
      dfs(level + 1);
      if (out_of_budget) return;
    }
  };
  dfs(0);
  return finish(std::move(acc), out_of_budget ? SearchStatus::BudgetExceeded : SearchStatus::Complete, nodes);
}

MasseySet hom_lift_set(const MasseyQuery& q, const Cohomology& h, SearchBudget* budget) {
  const std::uint32_t m = q.n() + 1;
  UniTriGroup target(m, q.p, NamedSubgroup(m, q.p, SubgroupKind::Z).support());
  LayeredLifter lifter(q.group, target, negated_superdiagonals(q.group, q.classes));
  std::map<FpVector, CohomologyClass> acc;
  SearchBudget local;
  SearchBudget* b = budget ? budget : &local;
  const auto before = b->used;
  auto status = lifter.enumerate(
      [&](std::span<const UniTriMatrix> img) {
        insert_value(acc, massey_value(defining_system_from_images(q.group, img), h));
        return true;
      },
      b);
  return finish(std::move(acc), status, b->used - before);
}

}  // namespace

MasseySet massey_product_set(const MasseyQuery& q, const Cohomology& h, MasseyStrategy strategy,
                             SearchBudget* budget) {
  q.validate();
  return strategy == MasseyStrategy::ExhaustiveCochain ? exhaustive_set(q, h, budget) : hom_lift_set(q, h, budget);
}

ConsecutiveCups consecutive_cups_zero(const MasseyQuery& q, const Cohomology& h, SearchBudget* budget) {
  q.validate();
  ConsecutiveCups out;
  out.direct = true;
  for (std::size_t i = 0; i + 1 < q.classes.size(); ++i)
    out.direct = out.direct && h.is_coboundary(cup(q.classes[i], q.classes[i + 1]));
  const std::uint32_t m = q.n() + 1;
  UniTriGroup target(m, q.p, NamedSubgroup(m, q.p, SubgroupKind::P).support());
  LayeredLifter lifter(q.group, target, negated_superdiagonals(q.group, q.classes));
  out.lift = lifter.first(&out.lift_status, budget).has_value();
  return out;
}

}  // namespace masseylab
