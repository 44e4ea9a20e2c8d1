#pragma once

#include <random>
#include <string>
#include <vector>

#include "masseylab/cochain.hpp"
#include "masseylab/fixtures.hpp"
#include "masseylab/unitriangular.hpp"

namespace masseylab::testing {

// Small seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
  Residue residue(std::uint32_t p) { return Residue(below(p)); }

  FpVector vector(std::uint32_t p, std::size_t dim) {
    FpVector v(dim);
    for (auto& x : v) x = residue(p);
    return v;
  }

  Cochain cochain(const FiniteGroup& g, std::uint32_t p, std::uint32_t degree) {
    return Cochain(g, p, degree, vector(p, Cochain::dimension(g.order(), degree)));
  }

  UniTriMatrix matrix(std::uint32_t n, std::uint32_t p) { return UniTriMatrix(n, p, vector(p, UniTriMatrix::packed_size(n))); }

  std::string pick(const std::vector<std::string>& names) { return names[below(names.size())]; }

 private:
  std::mt19937_64 rng_;
};

inline const std::vector<std::string>& small_groups() {
  static const std::vector<std::string> names{"1", "Z2", "Z3", "Z4", "V4", "S3", "Z6", "D4", "Q8", "Z2xZ4"};
  return names;
}

}  // namespace masseylab::testing
