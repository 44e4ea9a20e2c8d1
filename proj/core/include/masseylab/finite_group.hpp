#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace masseylab {

using Elem = std::uint32_t;

/// Largest group we store as a dense multiplication table.
inline constexpr std::size_t kMaxTableOrder = 4096;
/// Largest group for which exhaustive axiom checks and cyclic fixtures are built.
inline constexpr std::size_t kMaxFullOrder = 64;

/// Node-count limit shared by every backtracking search.
struct SearchBudget {
  std::uint64_t limit = 50'000'000;
  std::uint64_t used = 0;

  /// Charges one node; returns false once the limit is spent.
  bool charge() { return ++used <= limit; }
  bool exhausted() const { return used > limit; }
};

/// A finite group given by its dense multiplication table. The identity is
/// always element 0. Copies share the immutable table.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();

  std::size_t order() const { return data_->order; }
  Elem mul(Elem a, Elem b) const { return data_->table[std::size_t(a) * data_->order + b]; }
  Elem inv(Elem a) const { return data_->inverse[a]; }
  static constexpr Elem identity() { return 0; }

  std::span<const Elem> generators() const { return data_->generators; }
  const std::string& label() const { return data_->label; }

  /// FNV-1a hash of the table; stable across runs and builds.
  std::uint64_t fingerprint() const { return data_->fingerprint; }
  bool same_table(const FiniteGroup& other) const;

  Elem power(Elem x, std::uint64_t k) const;
  Elem conjugate(Elem x, Elem by) const { return mul(mul(by, x), inv(by)); }

  /// Builds a group from a multiplication rule already known to satisfy the
  /// group axioms (identity at 0). Inverses are computed; when `generators`
  /// is empty a greedy generating set is chosen.
  static FiniteGroup from_rule(std::size_t order, const std::function<Elem(Elem, Elem)>& rule,
                               std::vector<Elem> generators, std::string label);

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<std::uint16_t> table{0};
    std::vector<Elem> inverse{0};
    std::vector<Elem> generators;
    std::string label = "1";
    std::uint64_t fingerprint = 0;
  };
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  static FiniteGroup finish(Data data);

  std::shared_ptr<const Data> data_;

  friend FiniteGroup build_from_table(const std::vector<std::vector<Elem>>&, const std::vector<Elem>&,
                                      std::string);
};

// --- construction -----------------------------------------------------------

/// Validates a user-supplied table. The identity is relocated to index 0 and
/// generator indices follow the relocation.
FiniteGroup build_from_table(const std::vector<std::vector<Elem>>& table,
                             const std::vector<Elem>& generators, std::string label = "table");

FiniteGroup build_cyclic(std::size_t n);
FiniteGroup build_direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Z/l^k x| Z/l^k, the second factor acting on the first by x -> p*x.
FiniteGroup build_semidirect_cyclic(std::uint32_t l, std::uint32_t k, std::uint32_t p);
FiniteGroup build_elementary_abelian(std::uint32_t p, std::uint32_t rank);
FiniteGroup build_symmetric3();
FiniteGroup build_dihedral(std::uint32_t n);
FiniteGroup build_quaternion8();

/// Parses the group spec text format: `order N`, `generators i j ...`, then
/// N rows of N indices.
FiniteGroup parse_group_spec(std::istream& in);
void write_group_spec(std::ostream& out, const FiniteGroup& g);

/// Greedy generating set: the first element (ascending) that enlarges the
/// subgroup generated so far.
std::vector<Elem> greedy_generators(const FiniteGroup& g);

// --- element queries ------------------------------------------------------------

std::uint32_t element_order(const FiniteGroup& g, Elem x);
std::vector<Elem> involutions(const FiniteGroup& g);
std::vector<Elem> centralizer(const FiniteGroup& g, Elem t);
std::vector<Elem> center(const FiniteGroup& g);
bool is_abelian(const FiniteGroup& g);
std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens);
/// Exhaustive associativity / identity / inverse check.
bool satisfies_group_axioms(const FiniteGroup& g);

// --- homomorphisms ---------------------------------------------------------------

class GroupHom {
 public:
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> images);

  /// Extends generator images to the whole domain; throws NotAHomomorphism
  /// when the images violate a relation.
  static GroupHom from_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                        std::span<const Elem> generator_images);
  static GroupHom trivial(const FiniteGroup& domain, const FiniteGroup& codomain);
  static GroupHom identity(const FiniteGroup& g);

  Elem operator()(Elem x) const { return images_[x]; }
  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  std::span<const Elem> images() const { return images_; }
  std::vector<Elem> generator_images() const;

  bool is_homomorphism() const;
  bool is_surjective() const;
  std::vector<Elem> kernel() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) { return a.images_ == b.images_; }

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Elem> images_;
};

GroupHom compose(const GroupHom& outer, const GroupHom& inner);

/// BFS extension of generator images; nullopt if inconsistent. Only the
/// first `gen_count` generators are used, so the result covers the subgroup
/// they generate (unreached entries are kUnset).
inline constexpr Elem kUnset = ~Elem{0};
std::optional<std::vector<Elem>> extend_generator_images(const FiniteGroup& domain,
                                                         const FiniteGroup& codomain,
                                                         std::span<const Elem> generator_images);

/// Optional restrictions on a homomorphism search.
struct HomConstraint {
  /// Per-generator fixed image (size 0 or |generators|).
  std::vector<std::optional<Elem>> fixed;
  /// Fiber constraint: alpha : H -> A surjective, target : G -> A; only maps
  /// psi with alpha . psi = target are produced.
  std::optional<GroupHom> alpha;
  std::optional<GroupHom> target;
};

enum class SearchStatus { Complete, Stopped, BudgetExceeded };

/// Backtracking over generator images in listed order, candidates ascending.
/// The callback returns false to stop early.
SearchStatus enumerate_homs(const FiniteGroup& g, const FiniteGroup& h, const HomConstraint& constraint,
                            const std::function<bool(const GroupHom&)>& visit, SearchBudget* budget = nullptr);

std::vector<GroupHom> all_homs(const FiniteGroup& g, const FiniteGroup& h, const HomConstraint& constraint = {});

}  // namespace masseylab
