#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace masseylab {

using Residue = std::uint8_t;
using FpVector = std::vector<Residue>;

/// Arithmetic in Z/p for small primes (p <= 251).
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  Residue add(Residue a, Residue b) const { return Residue((a + b) % p_); }
  Residue sub(Residue a, Residue b) const { return Residue((a + p_ - b) % p_); }
  Residue mul(Residue a, Residue b) const { return Residue((unsigned(a) * b) % p_); }
  Residue neg(Residue a) const { return Residue((p_ - a) % p_); }
  Residue inv(Residue a) const { return inverse_[a]; }
  Residue reduce(long long v) const { return Residue(((v % long(p_)) + p_) % p_); }

  /// y += c * x
  void axpy(Residue c, std::span<const Residue> x, std::span<Residue> y) const;

 private:
  std::uint32_t p_;
  std::vector<Residue> inverse_;
};

bool is_prime(std::uint32_t n);

/// Row space in reduced row-echelon form, growing one vector at a time.
/// With tracking on, each stored row remembers which combination of the
/// inserted vectors produced it, so membership queries can be solved.
class EchelonBasis {
 public:
  EchelonBasis(std::uint32_t p, std::size_t dim, bool track = false);

  /// Inserts v; returns true if it enlarged the span. With tracking on, a
  /// dependent insertion records a relation among the inserted vectors.
  bool insert(std::span<const Residue> v);

  /// Canonical representative of v + span: zero in every pivot column.
  FpVector reduce(std::span<const Residue> v) const;
  bool contains(std::span<const Residue> v) const;

  /// Coefficients c (one per inserted vector) with sum c_i v_i = v, or
  /// nullopt when v is outside the span. Requires tracking.
  std::optional<FpVector> solve(std::span<const Residue> v) const;

  /// Vectors x with r . x = 0 for every stored row r (RREF free columns).
  std::vector<FpVector> null_space() const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t inserted() const { return inserted_; }
  const std::vector<FpVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Relations among inserted vectors found so far (tracking only); they
  /// span the kernel of the map e_i -> v_i.
  const std::vector<FpVector>& relations() const { return relations_; }
  const PrimeField& field() const { return field_; }

 private:
  PrimeField field_;
  std::size_t dim_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<FpVector> combos_;
  std::vector<FpVector> relations_;
};

/// Rank of the span of the given vectors.
std::size_t rank_of(std::uint32_t p, std::size_t dim, const std::vector<FpVector>& vectors);

/// Basis of {c : sum c_i images_i = 0}.
std::vector<FpVector> kernel_of(std::uint32_t p, std::size_t target_dim, const std::vector<FpVector>& images);

}  // namespace masseylab
