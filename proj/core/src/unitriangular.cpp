#include "masseylab/unitriangular.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "masseylab/error.hpp"

namespace masseylab {

// --- UniTriMatrix -------------------------------------------------------------------

UniTriMatrix::UniTriMatrix(std::uint32_t n, std::uint32_t p) : n_(n), p_(p), entries_(packed_size(n), 0) {
  if (n == 0) fail(ErrorKind::BadParameter, "matrix size must be positive");
}

UniTriMatrix::UniTriMatrix(std::uint32_t n, std::uint32_t p, FpVector packed) : n_(n), p_(p), entries_(std::move(packed)) {
  if (n == 0) fail(ErrorKind::BadParameter, "matrix size must be positive");
  if (entries_.size() != packed_size(n)) fail(ErrorKind::ShapeMismatch, "packed entry count");
  for (Residue r : entries_)
    if (r >= p) fail(ErrorKind::BadParameter, "residue " + std::to_string(r) + " out of range mod " + std::to_string(p));
}

Residue UniTriMatrix::entry(std::uint32_t i, std::uint32_t j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_)
    fail(ErrorKind::IndexOutOfRange, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") of a " +
                                         std::to_string(n_) + "x" + std::to_string(n_) + " matrix");
  if (i == j) return 1;
  if (i > j) return 0;
  return at(i, j);
}

void UniTriMatrix::set(std::uint32_t i, std::uint32_t j, Residue v) {
  if (i < 1 || j > n_ || i >= j) fail(ErrorKind::IndexOutOfRange, "only strictly upper entries can be set");
  entries_[packed_index(n_, i, j)] = Residue(v % p_);
}

UniTriMatrix UniTriMatrix::operator*(const UniTriMatrix& rhs) const {
  if (n_ != rhs.n_ || p_ != rhs.p_) fail(ErrorKind::SizeMismatch, "matrix product of mismatched shapes");
  UniTriMatrix out(n_, p_);
  for (std::uint32_t i = 1; i <= n_; ++i) {
    for (std::uint32_t j = i + 1; j <= n_; ++j) {
      unsigned s = at(i, j) + rhs.at(i, j);
      for (std::uint32_t k = i + 1; k < j; ++k) s += unsigned(at(i, k)) * rhs.at(k, j);
      out.entries_[packed_index(n_, i, j)] = Residue(s % p_);
    }
  }
  return out;
}

UniTriMatrix UniTriMatrix::inverse() const {
  // X = A^-1 from A X = I: x_ij = -a_ij - sum_k a_ik x_kj, by increasing j - i
  UniTriMatrix x(n_, p_);
  for (std::uint32_t d = 1; d < n_; ++d) {
    for (std::uint32_t i = 1; i + d <= n_; ++i) {
      const std::uint32_t j = i + d;
      unsigned s = at(i, j);
      for (std::uint32_t k = i + 1; k < j; ++k) s += unsigned(at(i, k)) * x.at(k, j);
      x.entries_[packed_index(n_, i, j)] = Residue((p_ - s % p_) % p_);
    }
  }
  return x;
}

bool UniTriMatrix::is_identity() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Residue r) { return r == 0; });
}

std::uint32_t UniTriMatrix::order() const {
  std::uint32_t k = 1;
  UniTriMatrix y = *this;
  while (!y.is_identity()) {
    y = y * *this;
    ++k;
  }
  return k;
}

FpVector phi_map(const UniTriMatrix& u) {
  FpVector out;
  for (std::uint32_t i = 1; i < u.size(); ++i) out.push_back(u.at(i, i + 1));
  return out;
}

UniTriMatrix block_upper_left(const UniTriMatrix& u, std::uint32_t a) {
  if (a < 1 || a > u.size()) fail(ErrorKind::IndexOutOfRange, "block size " + std::to_string(a));
  UniTriMatrix out(a, u.modulus());
  for (std::uint32_t i = 1; i <= a; ++i)
    for (std::uint32_t j = i + 1; j <= a; ++j) out.set(i, j, u.at(i, j));
  return out;
}

UniTriMatrix block_lower_right(const UniTriMatrix& u, std::uint32_t a) {
  if (a < 1 || a > u.size()) fail(ErrorKind::IndexOutOfRange, "block size " + std::to_string(a));
  const std::uint32_t off = u.size() - a;
  UniTriMatrix out(a, u.modulus());
  for (std::uint32_t i = 1; i <= a; ++i)
    for (std::uint32_t j = i + 1; j <= a; ++j) out.set(i, j, u.at(i + off, j + off));
  return out;
}

UniTriMatrix block_diagonal_sum(const UniTriMatrix& left, const UniTriMatrix& right) {
  if (left.modulus() != right.modulus()) fail(ErrorKind::SizeMismatch, "blocks over different moduli");
  const std::uint32_t a = left.size(), n = a + right.size();
  UniTriMatrix out(n, left.modulus());
  for (std::uint32_t i = 1; i <= a; ++i)
    for (std::uint32_t j = i + 1; j <= a; ++j) out.set(i, j, left.at(i, j));
  for (std::uint32_t i = 1; i <= right.size(); ++i)
    for (std::uint32_t j = i + 1; j <= right.size(); ++j) out.set(i + a, j + a, right.at(i, j));
  return out;
}

UniTriMatrix parse_matrix_literal(std::string_view text) {
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char c : text) {
      if (c == '/') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
  }
  auto numbers = [](const std::string& s, std::size_t part) {
    std::istringstream is(s);
    std::vector<long> out;
    std::string tok;
    while (is >> tok) {
      try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        out.push_back(v);
      } catch (const std::exception&) {
        fail(ErrorKind::ParseError, "segment " + std::to_string(part) + ": not an integer: '" + tok + "'");
      }
    }
    return out;
  };
  auto head = numbers(parts[0], 0);
  if (head.size() != 2 || head[0] < 1 || head[1] < 2)
    fail(ErrorKind::ParseError, "matrix literal must start with 'n p'");
  const auto n = std::uint32_t(head[0]);
  const auto p = std::uint32_t(head[1]);
  if (!is_prime(p) || p > 13) fail(ErrorKind::ParseError, "modulus must be a prime <= 13");
  if (parts.size() != n + 1)
    fail(ErrorKind::ParseError, "expected " + std::to_string(n) + " rows, found " + std::to_string(parts.size() - 1));
  UniTriMatrix u(n, p);
  for (std::uint32_t i = 1; i <= n; ++i) {
    auto row = numbers(parts[i], i);
    if (row.size() != n) fail(ErrorKind::ParseError, "row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::uint32_t j = 1; j <= n; ++j) {
      long v = row[j - 1];
      if (v < 0 || v >= long(p))
        fail(ErrorKind::ParseError, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") not a residue mod " + std::to_string(p));
      if (i == j && v != 1) fail(ErrorKind::ParseError, "diagonal entry (" + std::to_string(i) + "," + std::to_string(i) + ") must be 1");
      if (i > j && v != 0)
        fail(ErrorKind::ParseError, "entry (" + std::to_string(i) + "," + std::to_string(j) + ") below the diagonal must be 0");
      if (i < j) u.set(i, j, Residue(v));
    }
  }
  return u;
}

std::string format_matrix_literal(const UniTriMatrix& u) {
  std::ostringstream os;
  os << u.size() << ' ' << u.modulus();
  for (std::uint32_t i = 1; i <= u.size(); ++i) {
    os << " /";
    for (std::uint32_t j = 1; j <= u.size(); ++j) os << ' ' << int(u.entry(i, j));
  }
  return os.str();
}

// --- UniTriGroup --------------------------------------------------------------------

bool is_normal_pattern(std::uint32_t m, const PositionSet& positions) {
  if (positions.size() != UniTriMatrix::packed_size(m)) return false;
  for (std::uint32_t i = 1; i <= m; ++i) {
    for (std::uint32_t j = i + 1; j <= m; ++j) {
      if (!positions[UniTriMatrix::packed_index(m, i, j)]) continue;
      if (i > 1 && !positions[UniTriMatrix::packed_index(m, i - 1, j)]) return false;
      if (j < m && !positions[UniTriMatrix::packed_index(m, i, j + 1)]) return false;
    }
  }
  return true;
}

UniTriGroup::UniTriGroup(std::uint32_t m, std::uint32_t p, PositionSet killed) : m_(m), p_(p), killed_(std::move(killed)) {
  if (m < 1) fail(ErrorKind::BadParameter, "matrix size must be positive");
  if (!is_prime(p) || p > 13) fail(ErrorKind::BadParameter, "p must be a prime <= 13, got " + std::to_string(p));
  if (killed_.empty()) killed_.assign(UniTriMatrix::packed_size(m), 0);
  if (!is_normal_pattern(m, killed_)) fail(ErrorKind::BadParameter, "killed positions do not form a normal pattern subgroup");
  for (std::size_t t = 0; t < killed_.size(); ++t)
    if (!killed_[t]) free_.push_back(t);
}

std::uint64_t UniTriGroup::order() const {
  std::uint64_t o = 1;
  for (std::size_t i = 0; i < free_.size(); ++i) {
    if (o > (~std::uint64_t{0}) / p_) return ~std::uint64_t{0};
    o *= p_;
  }
  return o;
}

UniTriMatrix UniTriGroup::normalize(UniTriMatrix u) const {
  if (u.size() != m_ || u.modulus() != p_) fail(ErrorKind::SizeMismatch, "matrix does not belong to this group");
  FpVector e(u.packed().begin(), u.packed().end());
  for (std::size_t t = 0; t < e.size(); ++t)
    if (killed_[t]) e[t] = 0;
  return UniTriMatrix(m_, p_, std::move(e));
}

Elem UniTriGroup::encode(const UniTriMatrix& u) const {
  std::uint64_t idx = 0, w = 1;
  auto e = u.packed();
  for (std::size_t t : free_) {
    idx += e[t] * w;
    w *= p_;
  }
  return Elem(idx);
}

UniTriMatrix UniTriGroup::decode(Elem x) const {
  FpVector e(UniTriMatrix::packed_size(m_), 0);
  std::uint64_t v = x;
  for (std::size_t t : free_) {
    e[t] = Residue(v % p_);
    v /= p_;
  }
  return UniTriMatrix(m_, p_, std::move(e));
}

const FiniteGroup& UniTriGroup::table() const {
  if (!table_) {
    const auto n = order();
    if (n > kMaxTableOrder)
      fail(ErrorKind::SizeLimit, "U_" + std::to_string(m_) + "(" + std::to_string(p_) + ") quotient of order " +
                                     std::to_string(n) + " exceeds the materialization bound");
    std::vector<UniTriMatrix> elems;
    elems.reserve(n);
    for (Elem x = 0; x < n; ++x) elems.push_back(decode(x));
    // superdiagonal elementary matrices generate whenever they survive
    std::vector<Elem> gens;
    for (std::uint32_t i = 1; i < m_; ++i) {
      if (is_killed(i, i + 1)) continue;
      UniTriMatrix e(m_, p_);
      e.set(i, i + 1, 1);
      gens.push_back(encode(e));
    }
    bool superdiag_generates = true;
    for (std::uint32_t i = 1; i < m_; ++i) superdiag_generates = superdiag_generates && !is_killed(i, i + 1);
    if (!superdiag_generates) gens.clear();
    std::string label = "U" + std::to_string(m_) + "(" + std::to_string(p_) + ")";
    if (free_.size() != killed_.size()) label += "/N";
    table_ = FiniteGroup::from_rule(
        n, [&](Elem a, Elem b) { return encode(mul(elems[a], elems[b])); }, gens, label);
  }
  return *table_;
}

UniTriGroup unitri_group(std::uint32_t n, std::uint32_t p) { return UniTriGroup(n, p); }

const UniTriGroup& materialized_quotient(std::uint32_t m, std::uint32_t p, const PositionSet& killed) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, PositionSet>, std::unique_ptr<UniTriGroup>> cache;
  PositionSet key = killed;
  if (key.empty()) key.assign(UniTriMatrix::packed_size(m), 0);
  std::lock_guard lock(mu);
  auto& slot = cache[{m, p, key}];
  if (!slot) {
    auto q = std::make_unique<UniTriGroup>(m, p, key);
    q->table();
    slot = std::move(q);
  }
  return *slot;
}

PositionSet positions_at_distance_at_least(std::uint32_t m, std::uint32_t d) {
  PositionSet s(UniTriMatrix::packed_size(m), 0);
  for (std::uint32_t i = 1; i <= m; ++i)
    for (std::uint32_t j = i + 1; j <= m; ++j)
      if (j - i >= d) s[UniTriMatrix::packed_index(m, i, j)] = 1;
  return s;
}

PositionSet corner_position(std::uint32_t m) {
  PositionSet s(UniTriMatrix::packed_size(m), 0);
  if (m >= 2) s[UniTriMatrix::packed_index(m, 1, m)] = 1;
  return s;
}

// --- named subgroups --------------------------------------------------------------

NamedSubgroup::NamedSubgroup(std::uint32_t m, std::uint32_t p, SubgroupKind kind, std::uint32_t k)
    : m_(m), p_(p), kind_(kind), k_(k) {
  if (kind == SubgroupKind::M && (k < 1 || k + 1 > m))
    fail(ErrorKind::BadParameter, "M_{k,m} needs 1 <= k <= m-1, got k=" + std::to_string(k) + ", m=" + std::to_string(m));
}

bool NamedSubgroup::contains(const UniTriMatrix& u) const {
  if (u.size() != m_ || u.modulus() != p_) return false;
  for (std::uint32_t i = 1; i <= m_; ++i) {
    for (std::uint32_t j = i + 1; j <= m_; ++j) {
      if (!u.at(i, j)) continue;
      bool must_vanish = false;
      switch (kind_) {
        case SubgroupKind::Z:  // zero if 1<=i<j<=m-1 or 2<=i<j<=m
          must_vanish = j <= m_ - 1 || i >= 2;
          break;
        case SubgroupKind::P:  // zero if j = i+1, i+2
          must_vanish = j == i + 1 || j == i + 2;
          break;
        case SubgroupKind::M:  // zero if i<j<=m-1, or j=m and k<=i<=m-1
          must_vanish = j <= m_ - 1 || (j == m_ && i >= k_ && i <= m_ - 1);
          break;
      }
      if (must_vanish) return false;
    }
  }
  return true;
}

PositionSet NamedSubgroup::support() const {
  PositionSet s(UniTriMatrix::packed_size(m_), 0);
  for (std::uint32_t i = 1; i <= m_; ++i) {
    for (std::uint32_t j = i + 1; j <= m_; ++j) {
      UniTriMatrix u(m_, p_);
      u.set(i, j, 1);
      s[UniTriMatrix::packed_index(m_, i, j)] = contains(u) ? 1 : 0;
    }
  }
  return s;
}

std::vector<UniTriMatrix> NamedSubgroup::elements() const { return pattern_elements(m_, p_, support()); }

std::string NamedSubgroup::name() const {
  switch (kind_) {
    case SubgroupKind::Z: return "Z_" + std::to_string(m_) + "(" + std::to_string(p_) + ")";
    case SubgroupKind::P: return "P_" + std::to_string(m_) + "(" + std::to_string(p_) + ")";
    case SubgroupKind::M: return "M_{" + std::to_string(k_) + "," + std::to_string(m_) + "}(" + std::to_string(p_) + ")";
  }
  return "?";
}

NamedSubgroup named_subgroup(const UniTriGroup& parent, SubgroupKind kind, std::uint32_t k) {
  if (parent.free_positions() != UniTriMatrix::packed_size(parent.size()))
    fail(ErrorKind::BadParameter, "named subgroups live in the full group U_m(p)");
  return NamedSubgroup(parent.size(), parent.modulus(), kind, k);
}

std::vector<UniTriMatrix> pattern_elements(std::uint32_t m, std::uint32_t p, const PositionSet& support) {
  std::vector<std::size_t> slots;
  for (std::size_t t = 0; t < support.size(); ++t)
    if (support[t]) slots.push_back(t);
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    count *= p;
    if (count > (1u << 20)) fail(ErrorKind::SizeLimit, "pattern subgroup too large to list");
  }
  std::vector<UniTriMatrix> out;
  out.reserve(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    FpVector e(UniTriMatrix::packed_size(m), 0);
    std::uint64_t v = x;
    for (std::size_t t : slots) {
      e[t] = Residue(v % p);
      v /= p;
    }
    out.emplace_back(m, p, std::move(e));
  }
  return out;
}

// --- fibre quotients ----------------------------------------------------------------

FiberQuotient::FiberQuotient(std::uint32_t k, std::uint32_t m, std::uint32_t p) : k_(k), m_(m), p_(p) {
  if (m < 2 || k < 1 || k + 1 > m)
    fail(ErrorKind::BadParameter, "Q_{k,m} needs 1 <= k <= m-1, got k=" + std::to_string(k) + ", m=" + std::to_string(m));
  if (!is_prime(p) || p > 13) fail(ErrorKind::BadParameter, "p must be a prime <= 13");
}

std::uint64_t FiberQuotient::order() const {
  // |U_{m-1}| * p^(m-k): A is free, B adds its last column
  std::uint64_t o = 1;
  const std::size_t e = UniTriMatrix::packed_size(m_ - 1) + (m_ - k_);
  for (std::size_t i = 0; i < e; ++i) {
    if (o > (~std::uint64_t{0}) / p_) return ~std::uint64_t{0};
    o *= p_;
  }
  return o;
}

FiberElem FiberQuotient::identity() const { return {UniTriMatrix(m_ - 1, p_), UniTriMatrix(m_ + 1 - k_, p_)}; }

FiberElem FiberQuotient::mul(const FiberElem& a, const FiberElem& b) const {
  return {a.left * b.left, a.right * b.right};
}

FiberElem FiberQuotient::inverse(const FiberElem& a) const { return {a.left.inverse(), a.right.inverse()}; }

bool FiberQuotient::is_valid(const FiberElem& a) const {
  if (a.left.size() != m_ - 1 || a.right.size() != m_ + 1 - k_) return false;
  if (a.left.modulus() != p_ || a.right.modulus() != p_) return false;
  return block_lower_right(a.left, m_ - k_) == block_upper_left(a.right, m_ - k_);
}

FiberElem FiberQuotient::project(const UniTriMatrix& u) const {
  if (u.size() != m_ || u.modulus() != p_) fail(ErrorKind::SizeMismatch, "matrix is not in U_m(p)");
  return {block_upper_left(u, m_ - 1), block_lower_right(u, m_ + 1 - k_)};
}

FpVector FiberQuotient::phi(const FiberElem& a) const {
  FpVector out = phi_map(a.left);
  const std::uint32_t b = a.right.size();
  out.push_back(a.right.at(b - 1, b));
  return out;
}

FiberElem FiberQuotient::rho(const FiberElem& a) const {
  if (k_ + 2 > m_) fail(ErrorKind::BadParameter, "rho_{k,m} needs k <= m-2");
  return {a.left, block_lower_right(a.right, m_ - k_)};
}

Residue FiberQuotient::iota(const FiberElem& a) const {
  if (k_ + 2 > m_) fail(ErrorKind::BadParameter, "iota_{k,m} needs k <= m-2");
  const std::uint32_t b = m_ + 1 - k_;
  bool in_kernel = a.left.is_identity();
  for (std::uint32_t i = 1; i <= b && in_kernel; ++i)
    for (std::uint32_t j = i + 1; j <= b && in_kernel; ++j)
      if (!(i == 1 && j == b) && a.right.at(i, j)) in_kernel = false;
  if (!in_kernel) fail(ErrorKind::NotInKernel, "element is not in Ker(rho_{k,m})");
  return a.right.at(1, b);
}

FiberElem FiberQuotient::kernel_element(Residue v) const {
  if (k_ + 2 > m_) fail(ErrorKind::BadParameter, "Ker(rho_{k,m}) needs k <= m-2");
  auto e = identity();
  e.right.set(1, m_ + 1 - k_, v);
  return e;
}

FiberElem FiberQuotient::section(const FiberElem& x, Residue corner) const {
  if (k_ + 2 > m_) fail(ErrorKind::BadParameter, "section of rho_{k,m} needs k <= m-2");
  const std::uint32_t b = m_ + 1 - k_;
  if (x.left.size() != m_ - 1 || x.right.size() != b - 1) fail(ErrorKind::SizeMismatch, "element is not in Q_{k+1,m}");
  UniTriMatrix top = block_lower_right(x.left, b - 1);
  UniTriMatrix right(b, p_);
  for (std::uint32_t i = 1; i <= b; ++i) {
    for (std::uint32_t j = i + 1; j <= b; ++j) {
      if (j <= b - 1)
        right.set(i, j, top.at(i, j));
      else if (i >= 2)
        right.set(i, j, x.right.at(i - 1, j - 1));
      else
        right.set(i, j, corner);
    }
  }
  return {x.left, right};
}

const FiniteGroup& FiberQuotient::table() const {
  if (!table_) {
    const auto n = order();
    if (n > kMaxTableOrder)
      fail(ErrorKind::SizeLimit, "Q_{" + std::to_string(k_) + "," + std::to_string(m_) + "}(" + std::to_string(p_) +
                                     ") of order " + std::to_string(n) + " exceeds the materialization bound");
    elements_.clear();
    elements_.reserve(n);
    for (Elem x = 0; x < n; ++x) elements_.push_back(decode(x));
    std::vector<Elem> gens;
    for (std::uint32_t i = 1; i < m_; ++i) {
      UniTriMatrix e(m_, p_);
      e.set(i, i + 1, 1);
      gens.push_back(encode(project(e)));
    }
    table_ = FiniteGroup::from_rule(
        n, [&](Elem a, Elem b) { return encode(mul(elements_[a], elements_[b])); }, gens,
        "Q" + std::to_string(k_) + "," + std::to_string(m_) + "(" + std::to_string(p_) + ")");
  }
  return *table_;
}

Elem FiberQuotient::encode(const FiberElem& a) const {
  std::uint64_t idx = 0, w = 1;
  for (Residue r : a.left.packed()) {
    idx += r * w;
    w *= p_;
  }
  const std::uint32_t b = m_ + 1 - k_;
  for (std::uint32_t i = 1; i < b; ++i) {
    idx += a.right.at(i, b) * w;
    w *= p_;
  }
  return Elem(idx);
}

FiberElem FiberQuotient::decode(Elem x) const {
  std::uint64_t v = x;
  FpVector left(UniTriMatrix::packed_size(m_ - 1), 0);
  for (auto& r : left) {
    r = Residue(v % p_);
    v /= p_;
  }
  UniTriMatrix a(m_ - 1, p_, std::move(left));
  const std::uint32_t b = m_ + 1 - k_;
  UniTriMatrix top = block_lower_right(a, b - 1);
  UniTriMatrix right(b, p_);
  for (std::uint32_t i = 1; i < b; ++i)
    for (std::uint32_t j = i + 1; j < b; ++j) right.set(i, j, top.at(i, j));
  for (std::uint32_t i = 1; i < b; ++i) {
    right.set(i, b, Residue(v % p_));
    v /= p_;
  }
  return {std::move(a), std::move(right)};
}

FiberQuotient fiber_quotient(std::uint32_t k, std::uint32_t m, std::uint32_t p) { return FiberQuotient(k, m, p); }

const FiberQuotient& materialized_fiber_quotient(std::uint32_t k, std::uint32_t m, std::uint32_t p) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, std::unique_ptr<FiberQuotient>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{k, m, p}];
  if (!slot) {
    auto q = std::make_unique<FiberQuotient>(k, m, p);
    q->table();
    slot = std::move(q);
  }
  return *slot;
}

FiberElem shift_map(const FiberQuotient& from, const FiberQuotient& to, const FiberElem& a) {
  if (from.modulus() != to.modulus() || from.k() < to.k() || from.k() - to.k() != from.m() - to.m() || to.k() < 1)
    fail(ErrorKind::BadParameter, "shift_map needs Q_{k,m} -> Q_{k-j,m-j}");
  const std::uint32_t j = from.k() - to.k();
  return {block_lower_right(a.left, from.m() - 1 - j), a.right};
}

// --- filtrations ---------------------------------------------------------------------

PositionSet CentralSeries::subgroup(std::size_t t) const {
  const std::uint32_t m = n + 1;
  PositionSet s(UniTriMatrix::packed_size(m), 0);
  for (std::size_t i = 0; i < t && i < positions.size(); ++i)
    s[UniTriMatrix::packed_index(m, positions[i].first, positions[i].second)] = 1;
  return s;
}

UniTriGroup CentralSeries::quotient(std::size_t t) const { return UniTriGroup(n + 1, p, subgroup(t)); }

CentralSeries central_series_ker_phi(std::uint32_t n, std::uint32_t p) {
  if (n < 1) fail(ErrorKind::BadParameter, "n must be positive");
  CentralSeries cs;
  cs.n = n;
  cs.p = p;
  const std::uint32_t m = n + 1;
  for (std::uint32_t d = m - 1; d >= 2; --d)
    for (std::uint32_t i = 1; i + d <= m; ++i) cs.positions.emplace_back(i, i + d);
  return cs;
}

Elem encode_vector(std::span<const Residue> v, std::uint32_t p) {
  Elem idx = 0, w = 1;
  for (Residue r : v) {
    idx += r * w;
    w *= p;
  }
  return idx;
}

FpVector decode_vector(Elem x, std::uint32_t p, std::uint32_t n) {
  FpVector v(n);
  for (auto& r : v) {
    r = Residue(x % p);
    x /= p;
  }
  return v;
}

GroupHom superdiagonal_hom(const UniTriGroup& q, const FiniteGroup& elementary) {
  for (std::uint32_t i = 1; i < q.size(); ++i)
    if (q.is_killed(i, i + 1)) fail(ErrorKind::BadParameter, "superdiagonal is killed in this quotient");
  const auto& t = q.table();
  std::vector<Elem> img(t.order());
  for (Elem x = 0; x < t.order(); ++x) img[x] = encode_vector(phi_map(q.decode(x)), q.modulus());
  return GroupHom(t, elementary, std::move(img));
}

GroupHom projection_hom(const UniTriGroup& from, const UniTriGroup& to) {
  if (from.size() != to.size() || from.modulus() != to.modulus())
    fail(ErrorKind::SizeMismatch, "projection between different matrix groups");
  for (std::size_t t = 0; t < from.killed().size(); ++t)
    if (from.killed()[t] && !to.killed()[t]) fail(ErrorKind::BadParameter, "target quotient is finer than source");
  const auto& src = from.table();
  std::vector<Elem> img(src.order());
  for (Elem x = 0; x < src.order(); ++x) img[x] = to.encode(to.normalize(from.decode(x)));
  return GroupHom(src, to.table(), std::move(img));
}

std::pair<QuotientTarget, QuotientTarget> zeta_kappa_targets(std::uint32_t n, std::uint32_t p) {
  const std::uint32_t m = n + 1;
  UniTriGroup mod_z(m, p, NamedSubgroup(m, p, SubgroupKind::Z).support());
  UniTriGroup mod_p(m, p, NamedSubgroup(m, p, SubgroupKind::P).support());
  auto ab = build_elementary_abelian(p, n);
  auto zeta = superdiagonal_hom(mod_z, ab);
  auto kappa = superdiagonal_hom(mod_p, ab);
  return {QuotientTarget{mod_z, ab, zeta}, QuotientTarget{mod_p, ab, kappa}};
}

}  // namespace masseylab
