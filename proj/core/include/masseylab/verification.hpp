#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "masseylab/cochain.hpp"
#include "masseylab/embedding.hpp"
#include "masseylab/massey.hpp"
#include "masseylab/unitriangular.hpp"

namespace masseylab {

/// (a_1(g), ..., a_n(g)) for G = Z/2, p = 2.
using SignPattern = std::vector<Residue>;

bool has_adjacent_ones(std::span<const Residue> pattern);

/// Identity plus e_{i,i+1} = 1 wherever the pattern has a 1: an involution in
/// U_{n+1}(2) over the pattern. Throws AdjacentOnes.
UniTriMatrix block_lift(std::span<const Residue> pattern);

struct CaseAudit {
  FpVector target;
  std::vector<UniTriMatrix> preimages;
  std::vector<std::uint32_t> orders;
  bool none_of_order_two() const;
};
/// All preimages of `target` under phi_3 in U_3(2) with their orders.
CaseAudit case_by_case_audit(const FpVector& target = {1, 1});

/// diag(left(g), right(g)): left in U_k(p), right in U_{n-k+1}(p).
std::vector<UniTriMatrix> splice_lifts(std::span<const UniTriMatrix> left, std::span<const UniTriMatrix> right);

/// images[xy] = images[x] images[y] for all pairs.
bool is_matrix_hom(const FiniteGroup& g, std::span<const UniTriMatrix> images);
/// Homomorphism whose superdiagonal is -a_1 x ... x -a_n.
bool solves_dwyer(const MasseyQuery& q, std::span<const UniTriMatrix> images);

// --- easy vanishing --------------------------------------------------------------------

struct DrillStep {
  std::uint32_t i = 0, j = 0;  // position added at this step
  bool cocycle_zero = false;   // the obstruction cocycle itself vanished
  bool class_zero = false;
};

struct TupleDrill {
  std::vector<FpVector> coords;  // H^1 coordinates of each a_i
  std::vector<DrillStep> steps;
  std::vector<UniTriMatrix> solution;
  bool verified = false;
};

struct EasyVanishingReport {
  std::size_t h2_dim = 0;
  std::size_t series_length = 0;
  std::vector<TupleDrill> tuples;
  bool all_obstructions_zero() const;
  bool all_verified() const;
};

/// Lifts -a_1 x ... x -a_n through the central series of Ker(phi_{n+1}) for
/// every tuple, one position at a time, correcting each set-theoretic lift by
/// a coboundary preimage. Throws NotApplicable unless H^2(G, Z/p) = 0.
EasyVanishingReport easy_vanishing_drill(const FiniteGroup& g, std::uint32_t p, std::uint32_t n);

/// Single-tuple version used by the drill.
TupleDrill drill_tuple(const MasseyQuery& q, const Cohomology& h);

// --- descending induction ---------------------------------------------------------------

struct DescentStep {
  std::uint32_t n = 0;  // length of the tuple being solved
  std::uint32_t k = 0;  // lifting Q_{k,n+1} -> Q_{k-1,n+1}
  FpVector obstruction;  // normal form of o(E(psi)) before twisting
  std::optional<FpVector> chi;  // H^1 coordinates of the correcting class
};

enum class DescentStatus { Solved, Stuck, BudgetExceeded };

struct DescentReport {
  DescentStatus status = DescentStatus::Stuck;
  std::uint32_t stuck_n = 0, stuck_k = 0;
  std::vector<DescentStep> steps;
  std::vector<UniTriMatrix> solution;  // one matrix per element, in U_{n+1}(p)
  bool verified = false;
};

/// Builds a solution of the Dwyer problem by descending through Q_{k,n+1}:
/// the base is the product of a solution for (a_1..a_{n-1}) and a U_3 lift of
/// (a_{n-1}, a_n); each step picks the least chi in H^1 (lexicographic
/// coordinates) with o + a_{k-1} u chi = 0, twists, and lifts. Reports Stuck
/// when no chi exists.
DescentReport descend(const MasseyQuery& q, const Cohomology& h, SearchBudget* budget = nullptr);

/// descend() restricted to its intended domain: G passes demushkin_check, all
/// a_i are nonzero and consecutive cups vanish. Throws HypothesisViolated or
/// FormDegenerate otherwise.
DescentReport demushkin_descent(const MasseyQuery& q, SearchBudget* budget = nullptr);

}  // namespace masseylab
