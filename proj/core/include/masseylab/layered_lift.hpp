#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "masseylab/cochain.hpp"
#include "masseylab/finite_group.hpp"
#include "masseylab/unitriangular.hpp"

namespace masseylab {

/// Homomorphisms G -> U_m(p)/N with a prescribed superdiagonal, found without
/// materializing the target. Generator images are filled one free position
/// at a time (ascending distance from the diagonal, then row). After each
/// position the partial images must already define a homomorphism into the
/// quotient that still kills every unfilled position; that quotient check
/// prunes the search and makes the leaves exactly the homomorphisms.
class LayeredLifter {
 public:
  /// `superdiagonal[s]` is the prescribed (e_12, ..., e_{m-1,m}) of the image
  /// of generator s.
  LayeredLifter(FiniteGroup g, UniTriGroup target, std::vector<FpVector> superdiagonal);

  const UniTriGroup& target() const { return target_; }

  /// Calls `visit` with the image of every element of G (normal forms).
  /// Values at each position are tried in ascending order, zero first.
  SearchStatus enumerate(const std::function<bool(std::span<const UniTriMatrix>)>& visit,
                         SearchBudget* budget = nullptr) const;

  std::optional<std::vector<UniTriMatrix>> first(SearchStatus* status = nullptr, SearchBudget* budget = nullptr) const;

 private:
  std::optional<std::vector<UniTriMatrix>> closure(const std::vector<UniTriMatrix>& gens, std::size_t level) const;

  FiniteGroup group_;
  UniTriGroup target_;
  std::vector<UniTriMatrix> base_;  // generator images with only the superdiagonal set
  std::vector<std::pair<std::uint32_t, std::uint32_t>> positions_;
  std::vector<UniTriGroup> levels_;  // levels_[l]: positions l.. still killed
};

/// Per-generator superdiagonal (-a_1(s), ..., -a_n(s)).
std::vector<FpVector> negated_superdiagonals(const FiniteGroup& g, std::span<const Cochain> classes);

/// Superdiagonal on every element: the map -a_1 x ... x -a_n as vectors.
std::vector<FpVector> negated_character(const FiniteGroup& g, std::span<const Cochain> classes);

}  // namespace masseylab
