#include "masseylab/cochain.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "masseylab/error.hpp"

namespace masseylab {

namespace {

constexpr std::uint32_t kMaxDegree = 3;

// Iterates all d-tuples of non-identity elements in lexicographic order.
template <typename F>
void for_each_tuple(std::size_t order, std::uint32_t degree, F&& f) {
  std::vector<Elem> t(degree, 1);
  if (order <= 1 && degree > 0) return;
  std::size_t index = 0;
  while (true) {
    f(std::span<const Elem>(t), index++);
    std::int64_t pos = std::int64_t(degree) - 1;
    while (pos >= 0 && t[std::size_t(pos)] == order - 1) {
      t[std::size_t(pos)] = 1;
      --pos;
    }
    if (pos < 0) return;
    ++t[std::size_t(pos)];
  }
}

}  // namespace

// --- Cochain ------------------------------------------------------------------------

std::size_t Cochain::dimension(std::size_t group_order, std::uint32_t degree) {
  std::size_t d = 1;
  for (std::uint32_t i = 0; i < degree; ++i) d *= group_order - 1;
  return d;
}

Cochain::Cochain(FiniteGroup g, std::uint32_t p, std::uint32_t degree)
    : group_(std::move(g)), p_(p), degree_(degree) {
  if (degree > kMaxDegree) fail(ErrorKind::DegreeLimit, "cochains exist up to degree 3");
  values_.assign(dimension(group_.order(), degree), 0);
}

Cochain::Cochain(FiniteGroup g, std::uint32_t p, std::uint32_t degree, FpVector values)
    : group_(std::move(g)), p_(p), degree_(degree), values_(std::move(values)) {
  if (degree > kMaxDegree) fail(ErrorKind::DegreeLimit, "cochains exist up to degree 3");
  if (values_.size() != dimension(group_.order(), degree)) fail(ErrorKind::ShapeMismatch, "cochain value count");
  for (Residue r : values_)
    if (r >= p) fail(ErrorKind::BadParameter, "cochain value out of range");
}

Cochain Cochain::from_values(FiniteGroup g, std::uint32_t p, std::span<const Residue> per_element) {
  if (per_element.size() != g.order()) fail(ErrorKind::ShapeMismatch, "one value per element expected");
  if (per_element[0] != 0) fail(ErrorKind::BadParameter, "normalized cochains vanish on the identity");
  FpVector v(per_element.begin() + 1, per_element.end());
  return Cochain(std::move(g), p, 1, std::move(v));
}

Residue Cochain::operator()(std::span<const Elem> args) const {
  if (args.size() != degree_) fail(ErrorKind::ShapeMismatch, "wrong number of arguments");
  std::size_t idx = 0;
  const std::size_t base = group_.order() - 1;
  for (Elem x : args) {
    if (x == 0) return 0;
    idx = idx * base + (x - 1);
  }
  return values_[idx];
}

void Cochain::set(std::span<const Elem> args, Residue v) {
  if (args.size() != degree_) fail(ErrorKind::ShapeMismatch, "wrong number of arguments");
  std::size_t idx = 0;
  const std::size_t base = group_.order() - 1;
  for (Elem x : args) {
    if (x == 0) fail(ErrorKind::BadParameter, "normalized cochains are fixed at 0 on the identity");
    idx = idx * base + (x - 1);
  }
  values_[idx] = Residue(v % p_);
}

bool Cochain::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](Residue r) { return r == 0; });
}

void Cochain::check_compatible(const Cochain& rhs) const {
  if (degree_ != rhs.degree_ || p_ != rhs.p_ || group_.order() != rhs.group_.order())
    fail(ErrorKind::ShapeMismatch, "cochains of different shape");
}

Cochain Cochain::operator+(const Cochain& rhs) const {
  check_compatible(rhs);
  Cochain out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = Residue((values_[i] + rhs.values_[i]) % p_);
  return out;
}

Cochain Cochain::operator-(const Cochain& rhs) const {
  check_compatible(rhs);
  Cochain out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = Residue((values_[i] + p_ - rhs.values_[i]) % p_);
  return out;
}

Cochain Cochain::operator-() const { return scaled(Residue(p_ - 1)); }

Cochain Cochain::scaled(Residue c) const {
  Cochain out = *this;
  for (auto& v : out.values_) v = Residue((unsigned(v) * c) % p_);
  return out;
}

Cochain coboundary(const Cochain& f) {
  const std::uint32_t d = f.degree();
  if (d >= kMaxDegree) fail(ErrorKind::DegreeLimit, "coboundary is available up to degree 2");
  const auto& g = f.group();
  const std::uint32_t p = f.modulus();
  Cochain out(g, p, d + 1);
  FpVector vals(Cochain::dimension(g.order(), d + 1), 0);
  std::vector<Elem> sub(d);
  for_each_tuple(g.order(), d + 1, [&](std::span<const Elem> t, std::size_t idx) {
    long s = 0;
    std::copy(t.begin() + 1, t.end(), sub.begin());
    s += f(sub);
    for (std::uint32_t i = 0; i < d; ++i) {
      // merge positions i, i+1
      for (std::uint32_t a = 0, b = 0; a < d + 1; ++a) {
        if (a == i) {
          sub[b++] = g.mul(t[a], t[a + 1]);
          ++a;
        } else {
          sub[b++] = t[a];
        }
      }
      long v = f(sub);
      s += ((i + 1) % 2) ? -v : v;
    }
    std::copy(t.begin(), t.end() - 1, sub.begin());
    long last = f(sub);
    s += ((d + 1) % 2) ? -last : last;
    vals[idx] = Residue(((s % long(p)) + p) % p);
  });
  return Cochain(g, p, d + 1, std::move(vals));
}

Cochain cup(const Cochain& a, const Cochain& b) {
  if (a.modulus() != b.modulus() || a.group().order() != b.group().order())
    fail(ErrorKind::ShapeMismatch, "cup of cochains on different groups");
  const std::uint32_t r = a.degree(), s = b.degree();
  if (r + s > kMaxDegree) fail(ErrorKind::DegreeLimit, "cup products are available up to total degree 3");
  const auto& g = a.group();
  const std::uint32_t p = a.modulus();
  FpVector vals(Cochain::dimension(g.order(), r + s), 0);
  for_each_tuple(g.order(), r + s, [&](std::span<const Elem> t, std::size_t idx) {
    vals[idx] = Residue((unsigned(a(t.subspan(0, r))) * b(t.subspan(r))) % p);
  });
  return Cochain(g, p, r + s, std::move(vals));
}

bool is_cocycle(const Cochain& f) { return coboundary(f).is_zero(); }

void dump_cochain(std::ostream& out, const Cochain& f) {
  out << "degree " << f.degree() << '\n';
  for_each_tuple(f.group().order(), f.degree(), [&](std::span<const Elem> t, std::size_t idx) {
    for (std::size_t i = 0; i < t.size(); ++i) out << (i ? " " : "") << t[i];
    out << (t.empty() ? ": " : " : ") << int(f.values()[idx]) << '\n';
  });
}

Cochain parse_cochain_dump(std::istream& in, const FiniteGroup& g, std::uint32_t p) {
  std::string line;
  std::size_t lineno = 0;
  auto err = [&](const std::string& msg) {
    fail(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  if (!std::getline(in, line)) err("missing degree line");
  ++lineno;
  std::istringstream head(line);
  std::string word;
  std::uint32_t degree = 0;
  if (!(head >> word >> degree) || word != "degree") err("expected 'degree d'");
  Cochain f(g, p, degree);
  std::vector<Elem> args(degree);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) err("missing ':'");
    std::istringstream lhs(line.substr(0, colon)), rhs(line.substr(colon + 1));
    for (auto& a : args) {
      long v;
      if (!(lhs >> v) || v <= 0 || std::size_t(v) >= g.order()) err("bad tuple entry");
      a = Elem(v);
    }
    long value;
    if (!(rhs >> value) || value < 0 || value >= long(p)) err("bad value");
    f.set(args, Residue(value));
  }
  return f;
}

bool CohomologyClass::is_zero() const {
  return std::all_of(key_.begin(), key_.end(), [](Residue r) { return r == 0; });
}

// --- Cohomology ---------------------------------------------------------------------

struct Cohomology::H2State {
  std::once_flag once;
  std::vector<Cochain> basis;
  std::unique_ptr<EchelonBasis> combined;  // B^2 generators, then H^2 representatives
  std::size_t b2_generators = 0;
  std::vector<std::size_t> rep_slots;  // insertion index of each representative
};

Cohomology::Cohomology(FiniteGroup g, std::uint32_t p) : group_(std::move(g)), p_(p) {
  PrimeField field(p);  // validates p
  const std::size_t n = group_.order();
  const std::size_t c1 = Cochain::dimension(n, 1), c2 = Cochain::dimension(n, 2);

  // d on unit 1-cochains: images span B^2, the relations give Z^1 = H^1
  b2_ = std::make_unique<EchelonBasis>(p, c2, true);
  for (std::size_t x = 0; x < c1; ++x) {
    FpVector e(c1, 0);
    e[x] = 1;
    b2_->insert(coboundary(Cochain(group_, p, 1, std::move(e))).values());
  }
  auto rels = b2_->relations();
  EchelonBasis canonical(p, c1);
  for (auto& r : rels) {
    r.resize(c1, 0);
    canonical.insert(r);
  }
  h1_coords_ = std::make_unique<EchelonBasis>(p, c1, true);
  for (const auto& row : canonical.rows()) {
    h1_.emplace_back(group_, p, 1, row);
    h1_coords_->insert(row);
  }
  h2_ = std::make_unique<H2State>();
}

Cohomology::~Cohomology() = default;
Cohomology::Cohomology(Cohomology&&) noexcept = default;

std::vector<Cochain> Cohomology::h1_elements() const {
  std::vector<Cochain> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < h1_.size(); ++i) total *= p_;
  FpVector coords(h1_.size(), 0);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t v = t;
    for (std::size_t i = h1_.size(); i-- > 0;) {
      coords[i] = Residue(v % p_);
      v /= p_;
    }
    out.push_back(h1_element(coords));
  }
  return out;
}

Cochain Cohomology::h1_element(std::span<const Residue> coords) const {
  if (coords.size() != h1_.size()) fail(ErrorKind::ShapeMismatch, "H^1 coordinate count");
  Cochain out(group_, p_, 1);
  for (std::size_t i = 0; i < coords.size(); ++i) out = out + h1_[i].scaled(coords[i]);
  return out;
}

FpVector Cohomology::h1_coordinates(const Cochain& a) const {
  if (a.degree() != 1) fail(ErrorKind::ShapeMismatch, "H^1 coordinates need a 1-cochain");
  auto c = h1_coords_->solve(a.values());
  if (!c) fail(ErrorKind::NotACocycle, "1-cochain is not a homomorphism");
  return *c;
}

const Cohomology::H2State& Cohomology::h2_state() const {
  std::call_once(h2_->once, [this] {
    const std::size_t n = group_.order();
    if (n > kMaxH2Order)
      fail(ErrorKind::SizeLimit, "H^2 is computed for |G| <= " + std::to_string(kMaxH2Order));
    const std::size_t c1 = Cochain::dimension(n, 1), c2 = Cochain::dimension(n, 2);
    auto idx = [&](Elem x, Elem y) -> std::optional<std::size_t> {
      if (x == 0 || y == 0) return std::nullopt;
      return std::size_t(x - 1) * c1 + (y - 1);
    };
    // dz(s, y, w) = z(y,w) - z(sy,w) + z(s,yw) - z(s,y); generators s suffice
    PrimeField field(p_);
    EchelonBasis equations(p_, c2);
    for (Elem s : group_.generators()) {
      for (Elem y = 1; y < n; ++y) {
        for (Elem w = 1; w < n; ++w) {
          FpVector row(c2, 0);
          auto add = [&](std::optional<std::size_t> at, int sign) {
            if (at) row[*at] = field.add(row[*at], sign > 0 ? 1 : field.neg(1));
          };
          add(idx(y, w), +1);
          add(idx(group_.mul(s, y), w), -1);
          add(idx(s, group_.mul(y, w)), +1);
          add(idx(s, y), -1);
          equations.insert(row);
        }
      }
    }
    auto z2 = equations.null_space();
    auto& st = *h2_;
    st.combined = std::make_unique<EchelonBasis>(p_, c2, true);
    for (std::size_t x = 0; x < c1; ++x) {
      FpVector e(c1, 0);
      e[x] = 1;
      st.combined->insert(coboundary(Cochain(group_, p_, 1, std::move(e))).values());
    }
    st.b2_generators = c1;
    // canonical representatives: reduced modulo B^2, then echelonized
    EchelonBasis reps(p_, c2);
    for (const auto& z : z2) {
      auto r = b2_->reduce(z);
      reps.insert(r);
    }
    for (const auto& r : reps.rows()) {
      std::size_t slot = st.combined->inserted();
      if (st.combined->insert(r)) {
        st.rep_slots.push_back(slot);
        st.basis.emplace_back(group_, p_, 2, r);
      }
    }
  });
  return *h2_;
}

std::size_t Cohomology::h2_dim() const { return h2_state().basis.size(); }

const std::vector<Cochain>& Cohomology::h2_basis() const { return h2_state().basis; }

FpVector Cohomology::h2_coordinates(const Cochain& z) const {
  if (z.degree() != 2) fail(ErrorKind::ShapeMismatch, "H^2 coordinates need a 2-cochain");
  const auto& st = h2_state();
  auto c = st.combined->solve(z.values());
  if (!c) fail(ErrorKind::NotACocycle, "2-cochain is not a cocycle");
  FpVector out;
  for (std::size_t slot : st.rep_slots) out.push_back((*c)[slot]);
  return out;
}

bool Cohomology::is_coboundary(const Cochain& z) const {
  if (z.degree() != 2) fail(ErrorKind::ShapeMismatch, "only 2-cochains are tested against B^2");
  return b2_->contains(z.values());
}

std::optional<Cochain> Cohomology::coboundary_preimage(const Cochain& z) const {
  if (z.degree() != 2) fail(ErrorKind::ShapeMismatch, "only 2-cochains have preimages computed");
  auto c = b2_->solve(z.values());
  if (!c) return std::nullopt;
  return Cochain(group_, p_, 1, std::move(*c));
}

FpVector Cohomology::normal_form(const Cochain& z) const { return b2_->reduce(z.values()); }

CohomologyClass Cohomology::class_of(const Cochain& z) const {
  if (z.degree() != 2) fail(ErrorKind::ShapeMismatch, "classes are formed in degree 2");
  if (!is_cocycle(z)) fail(ErrorKind::NotACocycle, "representative is not a 2-cocycle");
  return CohomologyClass(z, normal_form(z));
}

// --- cup form ------------------------------------------------------------------------

CupForm cup_form(const Cohomology& h) {
  if (h.h2_dim() != 1)
    fail(ErrorKind::NotApplicable, "cup form needs dim H^2 = 1, found " + std::to_string(h.h2_dim()));
  CupForm form;
  form.p = h.modulus();
  const auto& basis = h.h1_basis();
  for (const auto& a : basis) {
    FpVector row;
    for (const auto& b : basis) row.push_back(h.h2_coordinates(cup(a, b))[0]);
    form.gram.push_back(std::move(row));
  }
  return form;
}

bool is_nondegenerate(const CupForm& form) {
  if (form.gram.empty()) return false;
  return rank_of(form.p, form.gram.size(), form.gram) == form.gram.size();
}

DemushkinReport demushkin_check(const FiniteGroup& g, std::uint32_t p) {
  if (g.order() > Cohomology::kMaxH2Order)
    fail(ErrorKind::SizeLimit, "Demushkin check needs |G| <= " + std::to_string(Cohomology::kMaxH2Order));
  Cohomology h(g, p);
  DemushkinReport r;
  r.dim_h1 = h.h1_dim();
  r.dim_h2 = h.h2_dim();
  if (r.dim_h2 == 1) {
    r.form = cup_form(h);
    r.nondegenerate = is_nondegenerate(*r.form);
  }
  r.verdict = r.dim_h2 == 1 && r.nondegenerate;
  return r;
}

}  // namespace masseylab
