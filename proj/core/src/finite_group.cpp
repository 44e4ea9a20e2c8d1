#include "masseylab/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "masseylab/error.hpp"

namespace masseylab {

namespace {

std::uint64_t fnv1a(std::size_t order, const std::vector<std::uint16_t>& table) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(order);
  for (auto v : table) mix(v);
  return h;
}

std::string witness(std::initializer_list<Elem> xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (Elem x : xs) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

FiniteGroup::FiniteGroup() : data_(std::make_shared<const Data>()) {}

bool FiniteGroup::same_table(const FiniteGroup& other) const {
  return data_ == other.data_ || (order() == other.order() && data_->table == other.data_->table);
}

Elem FiniteGroup::power(Elem x, std::uint64_t k) const {
  Elem result = identity();
  Elem base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

FiniteGroup FiniteGroup::finish(Data data) {
  data.fingerprint = fnv1a(data.order, data.table);
  return FiniteGroup(std::make_shared<const Data>(std::move(data)));
}

FiniteGroup FiniteGroup::from_rule(std::size_t order, const std::function<Elem(Elem, Elem)>& rule,
                                   std::vector<Elem> generators, std::string label) {
  if (order == 0 || order > kMaxTableOrder)
    fail(ErrorKind::SizeLimit, "group order " + std::to_string(order) + " exceeds table limit");
  Data data;
  data.order = order;
  data.table.assign(order * order, 0);
  data.inverse.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      Elem c = rule(Elem(a), Elem(b));
      data.table[a * order + b] = static_cast<std::uint16_t>(c);
      if (c == 0) data.inverse[a] = Elem(b);
    }
  }
  data.label = std::move(label);
  auto group = finish(std::move(data));
  if (generators.empty()) generators = greedy_generators(group);
  auto copy = *group.data_;
  std::erase(generators, Elem{0});
  copy.generators = std::move(generators);
  return FiniteGroup(std::make_shared<const Data>(std::move(copy)));
}

// --- construction -----------------------------------------------------------

FiniteGroup build_from_table(const std::vector<std::vector<Elem>>& table, const std::vector<Elem>& generators,
                             std::string label) {
  const std::size_t n = table.size();
  if (n == 0) fail(ErrorKind::ParseError, "empty table");
  if (n > kMaxTableOrder) fail(ErrorKind::SizeLimit, "table order " + std::to_string(n));
  for (std::size_t r = 0; r < n; ++r) {
    if (table[r].size() != n)
      fail(ErrorKind::ParseError, "row " + std::to_string(r) + " has " + std::to_string(table[r].size()) +
                                      " entries, expected " + std::to_string(n));
    for (Elem v : table[r])
      if (v >= n) fail(ErrorKind::IndexOutOfRange, "entry " + std::to_string(v) + " in row " + std::to_string(r));
  }
  for (Elem g : generators)
    if (g >= n) fail(ErrorKind::IndexOutOfRange, "generator " + std::to_string(g));

  std::optional<Elem> e;
  for (Elem x = 0; x < n && !e; ++x) {
    bool ok = true;
    for (Elem y = 0; y < n && ok; ++y) ok = table[x][y] == y && table[y][x] == y;
    if (ok) e = x;
  }
  if (!e) fail(ErrorKind::NoIdentity, "no two-sided identity element");

  // relabel so that the identity is 0
  std::vector<Elem> relabel(n);
  std::iota(relabel.begin(), relabel.end(), Elem{0});
  std::swap(relabel[0], relabel[*e]);

  FiniteGroup::Data data;
  data.order = n;
  data.table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      data.table[relabel[a] * n + relabel[b]] = static_cast<std::uint16_t>(relabel[table[a][b]]);
  auto at = [&](Elem a, Elem b) { return Elem(data.table[std::size_t(a) * n + b]); };

  data.inverse.assign(n, 0);
  for (Elem x = 0; x < n; ++x) {
    std::optional<Elem> inv;
    for (Elem y = 0; y < n && !inv; ++y)
      if (at(x, y) == 0 && at(y, x) == 0) inv = y;
    if (!inv) fail(ErrorKind::NoInverse, "element " + std::to_string(relabel[x]) + " has no two-sided inverse");
    data.inverse[x] = *inv;
  }

  for (Elem g : generators)
    if (relabel[g] != 0) data.generators.push_back(relabel[g]);

  // closure of the generators
  {
    std::vector<char> seen(n, 0);
    std::deque<Elem> queue{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (Elem s : data.generators) {
        Elem y = at(x, s);
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          queue.push_back(y);
        }
      }
    }
    if (count != n) {
      Elem missing = 0;
      while (seen[missing]) ++missing;
      fail(ErrorKind::GeneratorsDontGenerate,
           "generated subgroup has order " + std::to_string(count) + "; element " +
               std::to_string(relabel[missing]) + " not reached");
    }
  }

  // Full scan for small tables; Light's test on generators otherwise.
  auto report = [&](Elem x, Elem y, Elem z) {
    fail(ErrorKind::NonAssociative, "triple " + witness({relabel[x], relabel[y], relabel[z]}));
  };
  if (n <= kMaxFullOrder) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) report(x, y, z);
  } else {
    for (Elem s : data.generators)
      for (Elem x = 0; x < n; ++x)
        for (Elem z = 0; z < n; ++z)
          if (at(at(x, s), z) != at(x, at(s, z))) report(x, s, z);
  }

  data.label = std::move(label);
  return FiniteGroup::finish(std::move(data));
}

FiniteGroup build_cyclic(std::size_t n) {
  if (n == 0 || n > kMaxFullOrder) fail(ErrorKind::SizeLimit, "cyclic order " + std::to_string(n));
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup::from_rule(
      n, [n](Elem a, Elem b) { return Elem((a + b) % n); }, gens, "Z" + std::to_string(n));
}

FiniteGroup build_direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order();
  if (ng * nh > kMaxTableOrder)
    fail(ErrorKind::SizeLimit, "direct product of order " + std::to_string(ng * nh));
  // element (x, y) has index x + ng * y
  std::vector<Elem> gens;
  for (Elem s : g.generators()) gens.push_back(s);
  for (Elem s : h.generators()) gens.push_back(Elem(ng) * s);
  return FiniteGroup::from_rule(
      ng * nh,
      [&](Elem a, Elem b) {
        Elem x = g.mul(a % ng, b % ng);
        Elem y = h.mul(a / ng, b / ng);
        return Elem(x + ng * y);
      },
      gens, g.label() + "x" + h.label());
}

FiniteGroup build_semidirect_cyclic(std::uint32_t l, std::uint32_t k, std::uint32_t p) {
  if (l < 2 || k < 1 || p < 2) fail(ErrorKind::BadParameter, "semidirect parameters must be l>=2, k>=1, p>=2");
  std::uint64_t modulus = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    modulus *= l;
    if (modulus * modulus > kMaxTableOrder) fail(ErrorKind::SizeLimit, "l^(2k) exceeds table limit");
  }
  const auto m = static_cast<std::uint32_t>(modulus);
  // multiplication by p must be an automorphism of Z/m whose order divides m
  std::vector<std::uint32_t> pw(m);
  pw[0] = 1 % m;
  for (std::uint32_t i = 1; i < m; ++i) pw[i] = static_cast<std::uint32_t>((std::uint64_t(pw[i - 1]) * p) % m);
  if (std::gcd(p, l) != 1 || (std::uint64_t(pw[m - 1]) * p) % m != 1 % m)
    fail(ErrorKind::BadParameter, "x -> " + std::to_string(p) + "x does not define an action of Z/" +
                                      std::to_string(m) + " on Z/" + std::to_string(m));
  std::vector<Elem> gens;
  gens.push_back(1);
  gens.push_back(m);
  auto label = "SD" + std::to_string(l) + "_" + std::to_string(k) + "_" + std::to_string(p);
  return FiniteGroup::from_rule(
      std::size_t(m) * m,
      [m, pw](Elem a, Elem b) {
        std::uint32_t x1 = a % m, y1 = a / m, x2 = b % m, y2 = b / m;
        std::uint32_t x = static_cast<std::uint32_t>((x1 + std::uint64_t(pw[y1]) * x2) % m);
        std::uint32_t y = (y1 + y2) % m;
        return Elem(x + m * y);
      },
      gens, label);
}

FiniteGroup build_elementary_abelian(std::uint32_t p, std::uint32_t rank) {
  std::size_t order = 1;
  for (std::uint32_t i = 0; i < rank; ++i) {
    order *= p;
    if (order > kMaxTableOrder) fail(ErrorKind::SizeLimit, "elementary abelian group too large");
  }
  std::vector<Elem> gens;
  for (std::size_t i = 0, w = 1; i < rank; ++i, w *= p) gens.push_back(Elem(w));
  return FiniteGroup::from_rule(
      order,
      [p, rank](Elem a, Elem b) {
        Elem out = 0, w = 1;
        for (std::uint32_t i = 0; i < rank; ++i, w *= p) {
          out += ((a / w % p + b / w % p) % p) * w;
        }
        return out;
      },
      gens, "(Z" + std::to_string(p) + ")^" + std::to_string(rank));
}

FiniteGroup build_dihedral(std::uint32_t n) {
  // r^i s^j  ->  i + n*j, with s r s = r^-1
  if (n < 2 || 2 * n > kMaxFullOrder) fail(ErrorKind::SizeLimit, "dihedral order");
  auto g = FiniteGroup::from_rule(
      2 * n,
      [n](Elem a, Elem b) {
        Elem i1 = a % n, j1 = a / n, i2 = b % n, j2 = b / n;
        Elem i = j1 ? (i1 + n - i2) % n : (i1 + i2) % n;
        return Elem(i + n * ((j1 + j2) % 2));
      },
      {1, n}, (n == 3 ? "S3" : "D" + std::to_string(n)));
  return g;
}

FiniteGroup build_symmetric3() { return build_dihedral(3); }

FiniteGroup build_quaternion8() {
  // elements i^a j^b (a in 0..3, b in 0..1), with j i = i^-1 j and j^2 = i^2
  return FiniteGroup::from_rule(
      8,
      [](Elem x, Elem y) {
        Elem a1 = x % 4, b1 = x / 4, a2 = y % 4, b2 = y / 4;
        Elem a = b1 ? (a1 + 4 - a2) % 4 : (a1 + a2) % 4;
        if (b1 && b2) a = (a + 2) % 4;
        return Elem(a + 4 * ((b1 + b2) % 2));
      },
      {1, 4}, "Q8");
}

// --- text format ---------------------------------------------------------------

FiniteGroup parse_group_spec(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto pos = line.find('#');
      if (pos != std::string::npos) line.erase(pos);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  auto err = [&](std::size_t col, const std::string& msg) {
    fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ", column " + std::to_string(col) + ": " + msg);
  };
  auto numbers_after = [&](std::string_view keyword) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != keyword) err(1, "expected '" + std::string(keyword) + "'");
    std::vector<Elem> out;
    std::string tok;
    while (ls >> tok) {
      try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        out.push_back(Elem(v));
      } catch (const std::exception&) {
        err(line.find(tok) + 1, "not a non-negative integer: '" + tok + "'");
      }
    }
    return out;
  };

  if (!next_line()) err(1, "missing 'order' line");
  auto order = numbers_after("order");
  if (order.size() != 1 || order[0] == 0) err(1, "'order' takes one positive integer");
  const std::size_t n = order[0];
  if (n > kMaxTableOrder) fail(ErrorKind::SizeLimit, "order " + std::to_string(n));
  if (!next_line()) err(1, "missing 'generators' line");
  auto gens = numbers_after("generators");

  std::vector<std::vector<Elem>> table;
  for (std::size_t r = 0; r < n; ++r) {
    if (!next_line()) err(1, "expected " + std::to_string(n) + " table rows, found " + std::to_string(r));
    std::istringstream ls(line);
    std::vector<Elem> row;
    std::string tok;
    std::size_t search_from = 0;
    while (ls >> tok) {
      std::size_t col = line.find(tok, search_from);
      search_from = col + tok.size();
      try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        if (std::size_t(v) >= n) err(col + 1, "entry " + tok + " out of range");
        row.push_back(Elem(v));
      } catch (const Error&) {
        throw;
      } catch (const std::exception&) {
        err(col + 1, "not a non-negative integer: '" + tok + "'");
      }
    }
    if (row.size() != n) err(1, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    table.push_back(std::move(row));
  }
  if (next_line()) err(1, "trailing content after table");
  return build_from_table(table, gens, "file");
}

void write_group_spec(std::ostream& out, const FiniteGroup& g) {
  out << "order " << g.order() << "\ngenerators";
  for (Elem s : g.generators()) out << ' ' << s;
  out << '\n';
  for (Elem a = 0; a < g.order(); ++a) {
    for (Elem b = 0; b < g.order(); ++b) out << (b ? " " : "") << g.mul(a, b);
    out << '\n';
  }
}

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::vector<char> in_sub(g.order(), 0);
  in_sub[0] = 1;
  std::size_t size = 1;
  for (Elem x = 1; x < g.order() && size < g.order(); ++x) {
    if (in_sub[x]) continue;
    gens.push_back(x);
    auto sub = generated_subgroup(g, gens);
    std::fill(in_sub.begin(), in_sub.end(), 0);
    for (Elem y : sub) in_sub[y] = 1;
    size = sub.size();
  }
  return gens;
}

// --- element queries ------------------------------------------------------------

std::uint32_t element_order(const FiniteGroup& g, Elem x) {
  if (x >= g.order()) fail(ErrorKind::IndexOutOfRange, "element " + std::to_string(x));
  std::uint32_t k = 1;
  for (Elem y = x; y != FiniteGroup::identity(); y = g.mul(y, x)) ++k;
  return k;
}

std::vector<Elem> involutions(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem x = 1; x < g.order(); ++x)
    if (g.mul(x, x) == 0) out.push_back(x);
  return out;
}

std::vector<Elem> centralizer(const FiniteGroup& g, Elem t) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (g.mul(x, t) == g.mul(t, x)) out.push_back(x);
  return out;
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem s : g.generators()) central = central && g.mul(x, s) == g.mul(s, x);
    if (central) out.push_back(x);
  }
  return out;
}

bool is_abelian(const FiniteGroup& g) {
  for (Elem a : g.generators())
    for (Elem b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<Elem> generated_subgroup(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      Elem y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies_group_axioms(const FiniteGroup& g) {
  const Elem n = Elem(g.order());
  for (Elem x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) return false;
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) return false;
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z))) return false;
  return generated_subgroup(g, g.generators()).size() == n;
}

// --- homomorphisms ---------------------------------------------------------------

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Elem> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.order()) fail(ErrorKind::ShapeMismatch, "image table length");
  for (Elem v : images_)
    if (v >= codomain_.order()) fail(ErrorKind::IndexOutOfRange, "image " + std::to_string(v));
}

std::optional<std::vector<Elem>> extend_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                                         std::span<const Elem> generator_images) {
  const auto gens = domain.generators();
  const std::size_t count = generator_images.size();
  std::vector<Elem> img(domain.order(), kUnset);
  img[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Elem x = queue[q];
    for (std::size_t i = 0; i < count; ++i) {
      Elem y = domain.mul(x, gens[i]);
      Elem v = codomain.mul(img[x], generator_images[i]);
      if (img[y] == kUnset) {
        img[y] = v;
        queue.push_back(y);
      } else if (img[y] != v) {
        return std::nullopt;
      }
    }
  }
  return img;
}

GroupHom GroupHom::from_generator_images(const FiniteGroup& domain, const FiniteGroup& codomain,
                                         std::span<const Elem> generator_images) {
  if (generator_images.size() != domain.generators().size())
    fail(ErrorKind::ShapeMismatch, "expected " + std::to_string(domain.generators().size()) + " generator images");
  for (Elem v : generator_images)
    if (v >= codomain.order()) fail(ErrorKind::IndexOutOfRange, "generator image " + std::to_string(v));
  auto img = extend_generator_images(domain, codomain, generator_images);
  if (!img) fail(ErrorKind::NotAHomomorphism, "generator images violate a relation of " + domain.label());
  return GroupHom(domain, codomain, std::move(*img));
}

GroupHom GroupHom::trivial(const FiniteGroup& domain, const FiniteGroup& codomain) {
  return GroupHom(domain, codomain, std::vector<Elem>(domain.order(), 0));
}

GroupHom GroupHom::identity(const FiniteGroup& g) {
  std::vector<Elem> img(g.order());
  std::iota(img.begin(), img.end(), Elem{0});
  return GroupHom(g, g, std::move(img));
}

std::vector<Elem> GroupHom::generator_images() const {
  std::vector<Elem> out;
  for (Elem s : domain_.generators()) out.push_back(images_[s]);
  return out;
}

bool GroupHom::is_homomorphism() const {
  for (Elem x = 0; x < domain_.order(); ++x)
    for (Elem y = 0; y < domain_.order(); ++y)
      if (images_[domain_.mul(x, y)] != codomain_.mul(images_[x], images_[y])) return false;
  return true;
}

bool GroupHom::is_surjective() const {
  std::vector<char> hit(codomain_.order(), 0);
  for (Elem v : images_) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < domain_.order(); ++x)
    if (images_[x] == 0) out.push_back(x);
  return out;
}

GroupHom compose(const GroupHom& outer, const GroupHom& inner) {
  if (!inner.codomain().same_table(outer.domain()))
    fail(ErrorKind::TargetMismatch, "cannot compose: codomain of inner differs from domain of outer");
  std::vector<Elem> img(inner.domain().order());
  for (Elem x = 0; x < img.size(); ++x) img[x] = outer(inner(x));
  return GroupHom(inner.domain(), outer.codomain(), std::move(img));
}

SearchStatus enumerate_homs(const FiniteGroup& g, const FiniteGroup& h, const HomConstraint& constraint,
                            const std::function<bool(const GroupHom&)>& visit, SearchBudget* budget) {
  const auto gens = g.generators();
  const std::size_t k = gens.size();
  if (!constraint.fixed.empty() && constraint.fixed.size() != k)
    fail(ErrorKind::InconsistentConstraint, "fixed-image list must have one slot per generator");
  if (constraint.alpha.has_value() != constraint.target.has_value())
    fail(ErrorKind::InconsistentConstraint, "fiber constraint needs both alpha and target");

  // candidate lists per generator
  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (constraint.alpha) {
      const auto& alpha = *constraint.alpha;
      const auto& target = *constraint.target;
      if (!alpha.domain().same_table(h) || !target.domain().same_table(g) ||
          !alpha.codomain().same_table(target.codomain()))
        fail(ErrorKind::InconsistentConstraint, "fiber constraint maps do not match the search groups");
      Elem want = target(gens[i]);
      for (Elem y = 0; y < h.order(); ++y)
        if (alpha(y) == want) candidates[i].push_back(y);
    } else {
      candidates[i].resize(h.order());
      std::iota(candidates[i].begin(), candidates[i].end(), Elem{0});
    }
    if (!constraint.fixed.empty() && constraint.fixed[i]) {
      Elem v = *constraint.fixed[i];
      if (std::find(candidates[i].begin(), candidates[i].end(), v) == candidates[i].end())
        fail(ErrorKind::InconsistentConstraint,
             "fixed image " + std::to_string(v) + " of generator " + std::to_string(i) + " violates the constraint");
      candidates[i] = {v};
    }
  }

  std::vector<Elem> chosen(k, 0);
  bool stopped = false, out_of_budget = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t depth) {
    for (Elem c : candidates[depth]) {
      if (stopped || out_of_budget) return;
      if (budget && !budget->charge()) {
        out_of_budget = true;
        return;
      }
      chosen[depth] = c;
      // partial-relation pruning on the subgroup generated so far
      auto img = extend_generator_images(g, h, std::span<const Elem>(chosen.data(), depth + 1));
      if (!img) continue;
      if (depth + 1 == k) {
        if (!visit(GroupHom(g, h, std::move(*img)))) stopped = true;
      } else {
        dfs(depth + 1);
      }
    }
  };
  if (k == 0) {
    // trivial domain: the unique map, subject to the fiber constraint
    if (constraint.target && (*constraint.target)(0) != 0) return SearchStatus::Complete;
    if (!visit(GroupHom::trivial(g, h))) return SearchStatus::Stopped;
    return SearchStatus::Complete;
  }
  dfs(0);
  if (out_of_budget) return SearchStatus::BudgetExceeded;
  return stopped ? SearchStatus::Stopped : SearchStatus::Complete;
}

std::vector<GroupHom> all_homs(const FiniteGroup& g, const FiniteGroup& h, const HomConstraint& constraint) {
  std::vector<GroupHom> out;
  enumerate_homs(g, h, constraint, [&](const GroupHom& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

}  // namespace masseylab
