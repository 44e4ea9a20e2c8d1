#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "masseylab/cochain.hpp"
#include "masseylab/finite_group.hpp"
#include "masseylab/unitriangular.hpp"

namespace masseylab {

/// a_ij(g) = -e_ij(psi(g)) (Negative) or +e_ij(psi(g)) (Positive). Only the
/// negative convention yields defining systems when p is odd.
enum class SignConvention { Negative, Positive };

/// Triangular array a_ij of 1-cochains, 1 <= i < j <= n+1, without (1, n+1).
class DefiningSystem {
 public:
  DefiningSystem(FiniteGroup g, std::uint32_t p, std::uint32_t n);

  std::uint32_t n() const { return n_; }
  const FiniteGroup& group() const { return group_; }
  std::uint32_t modulus() const { return p_; }

  const Cochain& entry(std::uint32_t i, std::uint32_t j) const { return entries_[index(i, j)]; }
  void set(std::uint32_t i, std::uint32_t j, Cochain c);

  /// a_{1,2}, ..., a_{n,n+1}
  std::vector<Cochain> classes() const;

 private:
  std::size_t index(std::uint32_t i, std::uint32_t j) const;

  FiniteGroup group_;
  std::uint32_t p_;
  std::uint32_t n_;
  std::vector<Cochain> entries_;
};

/// First failing equation: position (i, j) and arguments (x, y).
struct DefiningWitness {
  std::uint32_t i = 0, j = 0;
  Elem x = 0, y = 0;
};

/// nullopt when every equation d(a_ij) = sum_k a_ik u a_kj holds.
std::optional<DefiningWitness> defining_system_failure(const DefiningSystem& ds);
bool is_defining_system(const DefiningSystem& ds);

/// Entries read off images in U_{n+1}(p) (or a quotient that keeps every
/// position but the corner). `images` holds one matrix per group element.
DefiningSystem defining_system_from_images(const FiniteGroup& g, std::span<const UniTriMatrix> images,
                                           SignConvention sign = SignConvention::Negative);
/// psi must land in the table of `target`.
DefiningSystem defining_system_from_hom(const GroupHom& psi, const UniTriGroup& target,
                                        SignConvention sign = SignConvention::Negative);

/// The cocycle sum_{k=2}^{n} a_{1k} u a_{k,n+1}; throws NotADefiningSystem.
Cochain massey_cocycle(const DefiningSystem& ds);
CohomologyClass massey_value(const DefiningSystem& ds, const Cohomology& h);

struct MasseyQuery {
  FiniteGroup group;
  std::uint32_t p = 2;
  std::vector<Cochain> classes;  // homomorphisms a_1..a_n

  std::uint32_t n() const { return std::uint32_t(classes.size()); }
  /// Throws unless every a_i is a homomorphism G -> Z/p and n >= 2.
  void validate() const;
};

enum class MasseyStrategy { ExhaustiveCochain, HomLift };

struct MasseySet {
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t nodes = 0;
  /// Distinct values, sorted by class key.
  std::vector<CohomologyClass> values;

  bool defined() const { return !values.empty(); }
  bool vanishes() const;
};

/// Exhaustive-cochain: every 1-cochain is tried for every entry (|G| <= 8,
/// n <= 4). Hom-lift: homomorphisms into U_{n+1}(p)/Z_{n+1}(p) over -a.
MasseySet massey_product_set(const MasseyQuery& q, const Cohomology& h, MasseyStrategy strategy,
                             SearchBudget* budget = nullptr);

struct ConsecutiveCups {
  bool direct = false;  // every a_i u a_{i+1} is a coboundary
  bool lift = false;    // a lift to U_{n+1}(p)/P_{n+1}(p) exists
  SearchStatus lift_status = SearchStatus::Complete;
  bool agree() const { return direct == lift; }
};

ConsecutiveCups consecutive_cups_zero(const MasseyQuery& q, const Cohomology& h, SearchBudget* budget = nullptr);

}  // namespace masseylab
