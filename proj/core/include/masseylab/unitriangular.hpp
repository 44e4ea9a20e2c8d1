#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "masseylab/finite_group.hpp"
#include "masseylab/fp_linalg.hpp"

namespace masseylab {

/// An n x n unitriangular matrix over Z/p. Only the strictly upper entries
/// are stored, row-major: (i, j) with 1 <= i < j <= n sits at
/// (i-1)(2n-i)/2 + (j-i-1).
class UniTriMatrix {
 public:
  UniTriMatrix() = default;
  UniTriMatrix(std::uint32_t n, std::uint32_t p);  // identity
  UniTriMatrix(std::uint32_t n, std::uint32_t p, FpVector packed);

  static std::size_t packed_size(std::uint32_t n) { return std::size_t(n) * (n ? n - 1 : 0) / 2; }
  static std::size_t packed_index(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
    return std::size_t(i - 1) * (2 * n - i) / 2 + (j - i - 1);
  }

  std::uint32_t size() const { return n_; }
  std::uint32_t modulus() const { return p_; }
  std::span<const Residue> packed() const { return entries_; }

  /// e_ij with 1-based indices, including the implicit diagonal and zeros.
  Residue entry(std::uint32_t i, std::uint32_t j) const;
  /// Unchecked strictly-upper access.
  Residue at(std::uint32_t i, std::uint32_t j) const { return entries_[packed_index(n_, i, j)]; }
  void set(std::uint32_t i, std::uint32_t j, Residue v);

  UniTriMatrix operator*(const UniTriMatrix& rhs) const;
  UniTriMatrix inverse() const;
  bool is_identity() const;
  std::uint32_t order() const;

  friend bool operator==(const UniTriMatrix&, const UniTriMatrix&) = default;
  friend auto operator<=>(const UniTriMatrix&, const UniTriMatrix&) = default;

 private:
  std::uint32_t n_ = 1;
  std::uint32_t p_ = 2;
  FpVector entries_;
};

/// Superdiagonal (e_12, e_23, ..., e_{n-1,n}).
FpVector phi_map(const UniTriMatrix& u);
UniTriMatrix block_upper_left(const UniTriMatrix& u, std::uint32_t a);
UniTriMatrix block_lower_right(const UniTriMatrix& u, std::uint32_t a);
/// Block diagonal matrix diag(left, right) of size size(left) + size(right).
UniTriMatrix block_diagonal_sum(const UniTriMatrix& left, const UniTriMatrix& right);

/// `n p / r1 / r2 / ...`; rows are full rows of residues.
UniTriMatrix parse_matrix_literal(std::string_view text);
std::string format_matrix_literal(const UniTriMatrix& u);

/// Set of strictly-upper positions of an m x m matrix, indexed like the
/// packed storage.
using PositionSet = std::vector<char>;

/// True when the set is closed upward within columns and rightward within
/// rows; exactly the position sets whose matrices form a normal subgroup.
bool is_normal_pattern(std::uint32_t m, const PositionSet& positions);

/// U_m(p) modulo the normal subgroup of matrices supported on `killed`.
/// Elements are kept in normal form (killed entries zero). With an empty
/// killed set this is U_m(p) itself.
class UniTriGroup {
 public:
  UniTriGroup(std::uint32_t m, std::uint32_t p, PositionSet killed = {});

  std::uint32_t size() const { return m_; }
  std::uint32_t modulus() const { return p_; }
  const PositionSet& killed() const { return killed_; }
  bool is_killed(std::uint32_t i, std::uint32_t j) const { return killed_[UniTriMatrix::packed_index(m_, i, j)] != 0; }
  std::size_t free_positions() const { return free_.size(); }
  /// p^(free positions) when it fits in 64 bits.
  std::uint64_t order() const;
  bool materializable() const { return order() <= kMaxTableOrder; }

  UniTriMatrix identity() const { return UniTriMatrix(m_, p_); }
  UniTriMatrix normalize(UniTriMatrix u) const;
  UniTriMatrix mul(const UniTriMatrix& a, const UniTriMatrix& b) const { return normalize(a * b); }
  UniTriMatrix inverse(const UniTriMatrix& a) const { return normalize(a.inverse()); }

  /// Dense table, built on first request; throws SizeLimit beyond 4096.
  const FiniteGroup& table() const;
  Elem encode(const UniTriMatrix& u) const;
  UniTriMatrix decode(Elem x) const;

 private:
  std::uint32_t m_;
  std::uint32_t p_;
  PositionSet killed_;
  std::vector<std::size_t> free_;
  mutable std::optional<FiniteGroup> table_;
};

UniTriGroup unitri_group(std::uint32_t n, std::uint32_t p);
/// Process-wide shared quotient with its table already built (thread-safe).
const UniTriGroup& materialized_quotient(std::uint32_t m, std::uint32_t p, const PositionSet& killed = {});
PositionSet positions_at_distance_at_least(std::uint32_t m, std::uint32_t d);
PositionSet corner_position(std::uint32_t m);

// --- named subgroups --------------------------------------------------------------

enum class SubgroupKind { Z, P, M };

/// Z_m(p), P_m(p) or M_{k,m}(p) inside U_m(p), by their entry conditions.
class NamedSubgroup {
 public:
  NamedSubgroup(std::uint32_t m, std::uint32_t p, SubgroupKind kind, std::uint32_t k = 0);

  bool contains(const UniTriMatrix& u) const;
  SubgroupKind kind() const { return kind_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t size() const { return m_; }
  /// Positions where members may be nonzero.
  PositionSet support() const;
  /// All members, for materializable parents.
  std::vector<UniTriMatrix> elements() const;
  std::string name() const;

 private:
  std::uint32_t m_;
  std::uint32_t p_;
  SubgroupKind kind_;
  std::uint32_t k_;
};

NamedSubgroup named_subgroup(const UniTriGroup& parent, SubgroupKind kind, std::uint32_t k = 0);

/// Every matrix of U_m(p) supported on `support`; requires a small count.
std::vector<UniTriMatrix> pattern_elements(std::uint32_t m, std::uint32_t p, const PositionSet& support);

// --- fibre product quotients --------------------------------------------------------

/// Element of Q_{k,m}: A in U_{m-1}(p), B in U_{m+1-k}(p) with the lower
/// right (m-k) block of A equal to the upper left (m-k) block of B.
struct FiberElem {
  UniTriMatrix left;
  UniTriMatrix right;
  friend bool operator==(const FiberElem&, const FiberElem&) = default;
  friend auto operator<=>(const FiberElem&, const FiberElem&) = default;
};

/// Q_{k,m} = U_m(p) / M_{k,m} realised as a fibre product.
class FiberQuotient {
 public:
  FiberQuotient(std::uint32_t k, std::uint32_t m, std::uint32_t p);

  std::uint32_t k() const { return k_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t modulus() const { return p_; }
  std::uint64_t order() const;

  FiberElem identity() const;
  FiberElem mul(const FiberElem& a, const FiberElem& b) const;
  FiberElem inverse(const FiberElem& a) const;
  bool is_valid(const FiberElem& a) const;

  /// The quotient map U_m(p) -> Q_{k,m}.
  FiberElem project(const UniTriMatrix& u) const;
  /// Induced superdiagonal map to (Z/p)^(m-1).
  FpVector phi(const FiberElem& a) const;
  /// rho_{k,m} : Q_{k,m} -> Q_{k+1,m}; requires k <= m-2.
  FiberElem rho(const FiberElem& a) const;
  /// iota_{k,m}: Ker(rho_{k,m}) -> Z/p, B -> e_{1,m+1-k}(B). Throws NotInKernel.
  Residue iota(const FiberElem& a) const;
  /// The kernel element of rho_{k,m} with iota value v.
  FiberElem kernel_element(Residue v) const;
  /// Element of Q_{k,m} over x in Q_{k+1,m} whose free corner entry is `corner`.
  FiberElem section(const FiberElem& x, Residue corner) const;

  /// Dense table (pairs enumerated in lexicographic order of packed entries).
  const FiniteGroup& table() const;
  Elem encode(const FiberElem& a) const;
  FiberElem decode(Elem x) const;

 private:
  std::uint32_t k_;
  std::uint32_t m_;
  std::uint32_t p_;
  mutable std::optional<FiniteGroup> table_;
  mutable std::vector<FiberElem> elements_;
};

FiberQuotient fiber_quotient(std::uint32_t k, std::uint32_t m, std::uint32_t p);
/// Process-wide shared Q_{k,m} with its table already built (thread-safe).
const FiberQuotient& materialized_fiber_quotient(std::uint32_t k, std::uint32_t m, std::uint32_t p);

/// Map Q_{k,m} -> Q_{k-j,m-j} induced by taking the lower right (m-j) block:
/// (A, B) -> (lower_right(A, m-1-j), B). With j = k-1 this is the left
/// vertical map of the twisting square; on Q_{k+1,n+1} it is lambda.
FiberElem shift_map(const FiberQuotient& from, const FiberQuotient& to, const FiberElem& a);

// --- filtrations and Remark-type quotients ----------------------------------------------

/// Chain {1} = N_0 < N_1 < ... < N_L = Ker(phi_{n+1}) of patterns in
/// U_{n+1}(p); each step adds one position, higher distances first.
struct CentralSeries {
  std::uint32_t n = 0;
  std::uint32_t p = 0;
  /// positions in the order they are added (N_t = first t of them)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> positions;
  std::size_t length() const { return positions.size(); }
  PositionSet subgroup(std::size_t t) const;
  /// U_{n+1}(p) / N_t
  UniTriGroup quotient(std::size_t t) const;
};

CentralSeries central_series_ker_phi(std::uint32_t n, std::uint32_t p);

/// Induced superdiagonal map from a quotient whose superdiagonal survives.
GroupHom superdiagonal_hom(const UniTriGroup& q, const FiniteGroup& elementary);
/// Normal-form projection between nested quotients.
GroupHom projection_hom(const UniTriGroup& from, const UniTriGroup& to);

struct QuotientTarget {
  UniTriGroup quotient;
  FiniteGroup abelian;  // (Z/p)^n
  GroupHom induced;     // zeta or kappa
};

/// U_{n+1}(p)/Z_{n+1}(p) with zeta and U_{n+1}(p)/P_{n+1}(p) with kappa.
std::pair<QuotientTarget, QuotientTarget> zeta_kappa_targets(std::uint32_t n, std::uint32_t p);

/// Encode/decode (Z/p)^n vectors as indices of build_elementary_abelian.
Elem encode_vector(std::span<const Residue> v, std::uint32_t p);
FpVector decode_vector(Elem x, std::uint32_t p, std::uint32_t n);

}  // namespace masseylab
