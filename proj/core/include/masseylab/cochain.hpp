#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "masseylab/finite_group.hpp"
#include "masseylab/fp_linalg.hpp"

namespace masseylab {

/// Normalized inhomogeneous cochain G^d -> Z/p with trivial coefficients.
/// Values are stored for tuples of non-identity elements only; any tuple
/// containing the identity evaluates to 0.
class Cochain {
 public:
  Cochain(FiniteGroup g, std::uint32_t p, std::uint32_t degree);
  Cochain(FiniteGroup g, std::uint32_t p, std::uint32_t degree, FpVector values);

  /// Degree-1 cochain from a value per group element (index 0 must map to 0).
  static Cochain from_values(FiniteGroup g, std::uint32_t p, std::span<const Residue> per_element);

  const FiniteGroup& group() const { return group_; }
  std::uint32_t modulus() const { return p_; }
  std::uint32_t degree() const { return degree_; }
  const FpVector& values() const { return values_; }

  Residue operator()(std::span<const Elem> args) const;
  Residue operator()(std::initializer_list<Elem> args) const {
    return (*this)(std::span<const Elem>(args.begin(), args.size()));
  }
  Residue at(Elem x) const { return x == 0 ? 0 : values_[x - 1]; }
  Residue at(Elem x, Elem y) const {
    return (x == 0 || y == 0) ? 0 : values_[std::size_t(x - 1) * (group_.order() - 1) + (y - 1)];
  }
  void set(std::span<const Elem> args, Residue v);

  bool is_zero() const;
  Cochain operator+(const Cochain& rhs) const;
  Cochain operator-(const Cochain& rhs) const;
  Cochain operator-() const;
  Cochain scaled(Residue c) const;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.p_ == b.p_ && a.values_ == b.values_;
  }

  /// (|G|-1)^d
  static std::size_t dimension(std::size_t group_order, std::uint32_t degree);

 private:
  void check_compatible(const Cochain& rhs) const;

  FiniteGroup group_;
  std::uint32_t p_;
  std::uint32_t degree_;
  FpVector values_;
};

/// (df)(g1..g_{d+1}) = f(g2..) + sum_i (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{d+1} f(g1..g_d)
Cochain coboundary(const Cochain& f);
/// (a u b)(g1..g_{r+s}) = a(g1..g_r) b(g_{r+1}..g_{r+s})
Cochain cup(const Cochain& a, const Cochain& b);
bool is_cocycle(const Cochain& f);

/// `degree d` then one `g1 ... gd : value` line per non-identity tuple.
void dump_cochain(std::ostream& out, const Cochain& f);
Cochain parse_cochain_dump(std::istream& in, const FiniteGroup& g, std::uint32_t p);

/// A cocycle together with its canonical normal form modulo coboundaries.
class CohomologyClass {
 public:
  CohomologyClass(Cochain representative, FpVector normal_form)
      : rep_(std::move(representative)), key_(std::move(normal_form)) {}

  const Cochain& representative() const { return rep_; }
  std::uint32_t degree() const { return rep_.degree(); }
  /// Equal for two cocycles iff they differ by a coboundary.
  const FpVector& key() const { return key_; }
  bool is_zero() const;

  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) { return a.key_ == b.key_; }

 private:
  Cochain rep_;
  FpVector key_;
};

/// Cohomology of a finite group with Z/p coefficients in degrees 1 and 2.
/// H^1 and coboundary data are computed eagerly; Z^2 lazily.
class Cohomology {
 public:
  /// Largest group order for which H^2 is computed by dense linear algebra.
  static constexpr std::size_t kMaxH2Order = 32;

  Cohomology(FiniteGroup g, std::uint32_t p);
  ~Cohomology();
  Cohomology(Cohomology&&) noexcept;

  const FiniteGroup& group() const { return group_; }
  std::uint32_t modulus() const { return p_; }

  /// Basis of H^1 = Hom(G, Z/p), from the kernel of d on C^1.
  const std::vector<Cochain>& h1_basis() const { return h1_; }
  std::size_t h1_dim() const { return h1_.size(); }
  /// All of H^1, ordered lexicographically by basis coordinates.
  std::vector<Cochain> h1_elements() const;
  Cochain h1_element(std::span<const Residue> coords) const;
  FpVector h1_coordinates(const Cochain& a) const;

  std::size_t h2_dim() const;
  const std::vector<Cochain>& h2_basis() const;
  FpVector h2_coordinates(const Cochain& z) const;

  bool is_coboundary(const Cochain& z) const;
  /// b with db = z, or nullopt.
  std::optional<Cochain> coboundary_preimage(const Cochain& z) const;
  /// Throws NotACocycle.
  CohomologyClass class_of(const Cochain& z) const;
  FpVector normal_form(const Cochain& z) const;

 private:
  struct H2State;
  const H2State& h2_state() const;

  FiniteGroup group_;
  std::uint32_t p_;
  std::vector<Cochain> h1_;
  std::unique_ptr<EchelonBasis> h1_coords_;
  std::unique_ptr<EchelonBasis> b2_;
  std::unique_ptr<H2State> h2_;
};

/// Gram matrix of the cup pairing on the H^1 basis, valued in H^2 = Z/p.
struct CupForm {
  std::uint32_t p = 0;
  std::vector<FpVector> gram;
};

/// Throws NotApplicable unless dim H^2 = 1.
CupForm cup_form(const Cohomology& h);
bool is_nondegenerate(const CupForm& form);

struct DemushkinReport {
  std::size_t dim_h1 = 0;
  std::size_t dim_h2 = 0;
  bool nondegenerate = false;
  bool verdict = false;
  std::optional<CupForm> form;
};

DemushkinReport demushkin_check(const FiniteGroup& g, std::uint32_t p);

}  // namespace masseylab
