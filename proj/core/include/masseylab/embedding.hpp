#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "masseylab/cochain.hpp"
#include "masseylab/finite_group.hpp"
#include "masseylab/massey.hpp"
#include "masseylab/unitriangular.hpp"

namespace masseylab {

/// Find phi~ : G -> B with alpha . phi~ = phi, alpha : B -> A surjective.
struct EmbeddingProblem {
  FiniteGroup g;
  FiniteGroup a;
  FiniteGroup b;
  GroupHom alpha;
  GroupHom phi;

  /// Throws ShapeMismatch / NotAHomomorphism / BadParameter (alpha not onto).
  void validate() const;
};

enum class SolveVerdict { Solved, NoSolution, BudgetExceeded };
std::string to_string(SolveVerdict v);

struct SolveResult {
  SolveVerdict verdict = SolveVerdict::NoSolution;
  std::optional<GroupHom> solution;
  std::uint64_t nodes = 0;  // search nodes; the exhaustion certificate when unsolved
};

/// Fiber-constrained search. NoSolution only after a complete search.
SolveResult solve(const EmbeddingProblem& e, SearchBudget* budget = nullptr);

/// Which quotient of U_{n+1}(p) the Dwyer problem lifts into.
enum class DwyerTarget { Full, ModZ, ModP };

/// B = U_{n+1}(p) (or U/Z, U/P), A = (Z/p)^n, alpha = superdiagonal map,
/// phi = -a_1 x ... x -a_n. Needs a materializable B.
EmbeddingProblem build_dwyer_problem(const MasseyQuery& q, DwyerTarget target = DwyerTarget::Full);

/// The same problem solved with the layered lifter; works past the
/// materialization bound. The solution is a matrix per element of G.
struct DwyerSolution {
  SolveVerdict verdict = SolveVerdict::NoSolution;
  std::vector<UniTriMatrix> images;
  std::uint64_t nodes = 0;
};
DwyerSolution solve_dwyer(const MasseyQuery& q, DwyerTarget target = DwyerTarget::Full, SearchBudget* budget = nullptr);

struct RealReport {
  bool real = true;
  /// Involution t with phi(t) != 1 and no involution over phi(t).
  std::optional<Elem> witness;
  /// For each checked involution t, an involution of B over phi(t) (if any).
  std::vector<std::pair<Elem, Elem>> lifts;
};
RealReport is_real(const EmbeddingProblem& e);

/// is_real for the Dwyer problem without materializing U_{n+1}(p): an
/// involution over -a(t) is a homomorphism Z/2 -> U_{n+1}(p) with that
/// superdiagonal.
struct DwyerRealReport {
  bool real = true;
  std::optional<Elem> witness;
  std::vector<std::pair<Elem, UniTriMatrix>> lifts;
};
DwyerRealReport is_real_dwyer(const MasseyQuery& q, SearchBudget* budget = nullptr);

/// Kernel of a central problem identified with Z/p.
struct CentralData {
  std::uint32_t p = 0;
  std::vector<Elem> kernel;
  Elem generator = 0;  // maps to 1
  /// coordinate[b] for kernel elements, -1 elsewhere
  std::vector<int> coordinate;
  Elem element(Residue v) const { return kernel_by_value[v]; }
  std::vector<Elem> kernel_by_value;
};

/// Throws NotCentral / KernelNotOrderP. The generator is the smallest index
/// unless `generator` is supplied.
CentralData central_data(const EmbeddingProblem& e, std::optional<Elem> generator = std::nullopt);

/// Set-theoretic lift policy: smallest or largest index in each alpha-fiber
/// (the identity always lifts to the identity).
enum class LiftPolicy { Smallest, Largest };

/// c(x,y) = iota(phi^(xy) phi^(y)^-1 phi^(x)^-1)
Cochain obstruction_cocycle(const EmbeddingProblem& e, const CentralData& c, LiftPolicy policy = LiftPolicy::Smallest);
CohomologyClass obstruction(const EmbeddingProblem& e, const CentralData& c, const Cohomology& h,
                            LiftPolicy policy = LiftPolicy::Smallest);

// --- rho-tower problems on fibre quotients, computed on pairs -----------------------

/// E(psi): lift psi : G -> Q_{k+1,m} along rho_{k,m} : Q_{k,m} -> Q_{k+1,m}.
/// `top` is Q_{k,m}; `psi` has one image per element. The lift of x uses the
/// section with corner `corner(x)` (0 for the identity).
Cochain rho_obstruction_cocycle(const FiniteGroup& g, const FiberQuotient& top, std::span<const FiberElem> psi,
                                LiftPolicy policy = LiftPolicy::Smallest);

/// Pointwise product psi * chi with chi valued in Ker(rho_{k+1,m}) through
/// kernel_element; `quotient` is Q_{k+1,m}.
std::vector<FiberElem> twist(const FiberQuotient& quotient, std::span<const FiberElem> psi, const Cochain& chi);

/// Images of a homomorphism from a table-valued map.
std::vector<FiberElem> fiber_images(const GroupHom& psi, const FiberQuotient& q);
bool is_fiber_hom(const FiniteGroup& g, const FiberQuotient& q, std::span<const FiberElem> images);

/// a_i = -(superdiagonal entry i) of psi, i = 1..m-1.
std::vector<Cochain> extract_classes(const FiniteGroup& g, const FiberQuotient& q, std::span<const FiberElem> psi);

struct TwistingCheck {
  FpVector lhs;  // normal form of o(E(psi chi))
  FpVector rhs;  // normal form of o(E(psi)) + a_k u chi
  bool holds = false;
};
/// psi : G -> Q_{k+1,m}, chi : G -> Z/p; compares both sides in H^2.
TwistingCheck verify_twisting(const FiniteGroup& g, std::uint32_t k, std::uint32_t m, std::span<const FiberElem> psi,
                              const Cochain& chi, const Cohomology& h);

}  // namespace masseylab
