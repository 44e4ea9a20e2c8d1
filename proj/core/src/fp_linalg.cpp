#include "masseylab/fp_linalg.hpp"

#include <algorithm>

#include "masseylab/error.hpp"

namespace masseylab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), inverse_(p, 0) {
  if (!is_prime(p) || p > 251) fail(ErrorKind::BadParameter, "modulus " + std::to_string(p) + " is not a small prime");
  for (std::uint32_t a = 1; a < p; ++a)
    for (std::uint32_t b = 1; b < p; ++b)
      if ((a * b) % p == 1) inverse_[a] = Residue(b);
}

void PrimeField::axpy(Residue c, std::span<const Residue> x, std::span<Residue> y) const {
  if (c == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) y[i] = Residue((y[i] + unsigned(c) * x[i]) % p_);
}

EchelonBasis::EchelonBasis(std::uint32_t p, std::size_t dim, bool track) : field_(p), dim_(dim), track_(track) {}

FpVector EchelonBasis::reduce(std::span<const Residue> v) const {
  if (v.size() != dim_) fail(ErrorKind::ShapeMismatch, "vector length " + std::to_string(v.size()));
  FpVector r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = r[pivots_[i]];
    if (c) field_.axpy(field_.neg(c), rows_[i], r);
  }
  return r;
}

bool EchelonBasis::contains(std::span<const Residue> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Residue x) { return x == 0; });
}

bool EchelonBasis::insert(std::span<const Residue> v) {
  if (v.size() != dim_) fail(ErrorKind::ShapeMismatch, "vector length " + std::to_string(v.size()));
  FpVector r(v.begin(), v.end());
  FpVector combo;
  if (track_) {
    for (auto& c : combos_) c.resize(inserted_ + 1, 0);
    for (auto& rel : relations_) rel.resize(inserted_ + 1, 0);
    combo.assign(inserted_ + 1, 0);
    combo[inserted_] = 1;
  }
  ++inserted_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = r[pivots_[i]];
    if (!c) continue;
    Residue m = field_.neg(c);
    field_.axpy(m, rows_[i], r);
    if (track_) field_.axpy(m, combos_[i], combo);
  }
  auto it = std::find_if(r.begin(), r.end(), [](Residue x) { return x != 0; });
  if (it == r.end()) {
    if (track_) relations_.push_back(std::move(combo));
    return false;
  }
  const std::size_t pivot = std::size_t(it - r.begin());
  Residue scale = field_.inv(*it);
  for (auto& x : r) x = field_.mul(x, scale);
  if (track_)
    for (auto& x : combo) x = field_.mul(x, scale);
  // keep reduced form: clear the new pivot column from existing rows
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = rows_[i][pivot];
    if (!c) continue;
    Residue m = field_.neg(c);
    field_.axpy(m, r, rows_[i]);
    if (track_) field_.axpy(m, combo, combos_[i]);
  }
  auto pos = std::size_t(std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin());
  pivots_.insert(pivots_.begin() + std::ptrdiff_t(pos), pivot);
  rows_.insert(rows_.begin() + std::ptrdiff_t(pos), std::move(r));
  if (track_) combos_.insert(combos_.begin() + std::ptrdiff_t(pos), std::move(combo));
  return true;
}

std::optional<FpVector> EchelonBasis::solve(std::span<const Residue> v) const {
  if (!track_) fail(ErrorKind::BadParameter, "solve() needs a tracking basis");
  if (v.size() != dim_) fail(ErrorKind::ShapeMismatch, "vector length " + std::to_string(v.size()));
  FpVector r(v.begin(), v.end());
  FpVector coeffs(inserted_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Residue c = r[pivots_[i]];
    if (!c) continue;
    field_.axpy(field_.neg(c), rows_[i], r);
    FpVector combo = combos_[i];
    combo.resize(inserted_, 0);
    field_.axpy(c, combo, coeffs);
  }
  if (std::any_of(r.begin(), r.end(), [](Residue x) { return x != 0; })) return std::nullopt;
  return coeffs;
}

std::vector<FpVector> EchelonBasis::null_space() const {
  std::vector<char> is_pivot(dim_, 0);
  for (auto c : pivots_) is_pivot[c] = 1;
  std::vector<FpVector> out;
  for (std::size_t f = 0; f < dim_; ++f) {
    if (is_pivot[f]) continue;
    FpVector x(dim_, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) x[pivots_[i]] = field_.neg(rows_[i][f]);
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t rank_of(std::uint32_t p, std::size_t dim, const std::vector<FpVector>& vectors) {
  EchelonBasis basis(p, dim);
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

std::vector<FpVector> kernel_of(std::uint32_t p, std::size_t target_dim, const std::vector<FpVector>& images) {
  EchelonBasis basis(p, target_dim, true);
  for (const auto& v : images) basis.insert(v);
  auto rels = basis.relations();
  for (auto& r : rels) r.resize(images.size(), 0);
  return rels;
}

}  // namespace masseylab
