#include "masseylab/layered_lift.hpp"

#include <deque>

#include "masseylab/error.hpp"

namespace masseylab {

LayeredLifter::LayeredLifter(FiniteGroup g, UniTriGroup target, std::vector<FpVector> superdiagonal)
    : group_(std::move(g)), target_(std::move(target)) {
  const std::uint32_t m = target_.size(), p = target_.modulus();
  if (superdiagonal.size() != group_.generators().size())
    fail(ErrorKind::ShapeMismatch, "one superdiagonal per generator expected");
  for (const auto& v : superdiagonal) {
    if (v.size() + 1 != m) fail(ErrorKind::ShapeMismatch, "superdiagonal length must be m-1");
    UniTriMatrix u(m, p);
    for (std::uint32_t i = 1; i < m; ++i) u.set(i, i + 1, v[i - 1]);
    base_.push_back(target_.normalize(std::move(u)));
  }
  for (std::uint32_t d = 2; d < m; ++d)
    for (std::uint32_t i = 1; i + d <= m; ++i)
      if (!target_.is_killed(i, i + d)) positions_.emplace_back(i, i + d);
  for (std::size_t l = 0; l <= positions_.size(); ++l) {
    PositionSet killed = target_.killed();
    if (killed.empty()) killed.assign(UniTriMatrix::packed_size(m), 0);
    for (std::size_t t = l; t < positions_.size(); ++t)
      killed[UniTriMatrix::packed_index(m, positions_[t].first, positions_[t].second)] = 1;
    levels_.emplace_back(m, p, std::move(killed));
  }
}

std::optional<std::vector<UniTriMatrix>> LayeredLifter::closure(const std::vector<UniTriMatrix>& gens,
                                                                std::size_t level) const {
  const auto& q = levels_[level];
  const std::size_t n = group_.order();
  std::vector<UniTriMatrix> img(n);
  std::vector<char> seen(n, 0);
  img[0] = q.identity();
  seen[0] = 1;
  std::deque<Elem> queue{0};
  const auto g = group_.generators();
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t s = 0; s < g.size(); ++s) {
      Elem y = group_.mul(x, g[s]);
      UniTriMatrix u = q.mul(img[x], gens[s]);
      if (!seen[y]) {
        seen[y] = 1;
        img[y] = std::move(u);
        queue.push_back(y);
      } else if (img[y] != u) {
        return std::nullopt;
      }
    }
  }
  return img;
}

SearchStatus LayeredLifter::enumerate(const std::function<bool(std::span<const UniTriMatrix>)>& visit,
                                      SearchBudget* budget) const {
  const std::size_t r = base_.size();
  const std::uint32_t p = target_.modulus();
  std::size_t combos = 1;
  for (std::size_t s = 0; s < r; ++s) combos *= p;

  std::vector<UniTriMatrix> gens = base_;
  bool stopped = false, out_of_budget = false;
  std::function<void(std::size_t, std::vector<UniTriMatrix>&&)> dfs = [&](std::size_t level,
                                                                         std::vector<UniTriMatrix>&& images) {
    if (level == positions_.size()) {
      if (!visit(images)) stopped = true;
      return;
    }
    auto [i, j] = positions_[level];
    for (std::size_t c = 0; c < combos && !stopped && !out_of_budget; ++c) {
      if (budget && !budget->charge()) {
        out_of_budget = true;
        return;
      }
      std::size_t v = c;
      for (std::size_t s = r; s-- > 0;) {
        gens[s].set(i, j, Residue(v % p));
        v /= p;
      }
      if (auto img = closure(gens, level + 1)) dfs(level + 1, std::move(*img));
    }
    for (std::size_t s = 0; s < r; ++s) gens[s].set(i, j, 0);
  };
  auto start = closure(gens, 0);
  if (start) dfs(0, std::move(*start));
  if (out_of_budget) return SearchStatus::BudgetExceeded;
  return stopped ? SearchStatus::Stopped : SearchStatus::Complete;
}

std::optional<std::vector<UniTriMatrix>> LayeredLifter::first(SearchStatus* status, SearchBudget* budget) const {
  std::optional<std::vector<UniTriMatrix>> found;
  auto st = enumerate(
      [&](std::span<const UniTriMatrix> img) {
        found.emplace(img.begin(), img.end());
        return false;
      },
      budget);
  if (status) *status = st;
  return found;
}

std::vector<FpVector> negated_superdiagonals(const FiniteGroup& g, std::span<const Cochain> classes) {
  std::vector<FpVector> out;
  for (Elem s : g.generators()) {
    FpVector v;
    for (const auto& a : classes) v.push_back(Residue((a.modulus() - a.at(s)) % a.modulus()));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FpVector> negated_character(const FiniteGroup& g, std::span<const Cochain> classes) {
  std::vector<FpVector> out;
  for (Elem x = 0; x < g.order(); ++x) {
    FpVector v;
    for (const auto& a : classes) v.push_back(Residue((a.modulus() - a.at(x)) % a.modulus()));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace masseylab
