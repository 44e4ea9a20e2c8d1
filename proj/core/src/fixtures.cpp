#include "masseylab/fixtures.hpp"

#include <charconv>
#include <fstream>

#include "masseylab/error.hpp"
#include "masseylab/unitriangular.hpp"

namespace masseylab {

namespace {

std::vector<std::uint32_t> numbers_after(std::string_view s, std::string_view prefix) {
  std::vector<std::uint32_t> out;
  if (s.substr(0, prefix.size()) != prefix) return out;
  s.remove_prefix(prefix.size());
  while (!s.empty()) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr == s.data()) return {};
    out.push_back(v);
    s.remove_prefix(std::size_t(ptr - s.data()));
    if (!s.empty()) {
      if (s.front() != '_') return {};
      s.remove_prefix(1);
    }
  }
  return out;
}

FiniteGroup single_fixture(std::string_view name) {
  if (name == "1" || name == "trivial") return FiniteGroup();
  if (name == "V4") {
    auto z2 = build_cyclic(2);
    return build_direct_product(z2, z2);
  }
  if (name == "S3") return build_symmetric3();
  if (name == "Q8") return build_quaternion8();
  if (auto v = numbers_after(name, "D"); v.size() == 1) return build_dihedral(v[0]);
  if (auto v = numbers_after(name, "Z"); v.size() == 1) return build_cyclic(v[0]);
  if (auto v = numbers_after(name, "U"); v.size() == 2) return unitri_group(v[0], v[1]).table();
  if (auto v = numbers_after(name, "SD"); v.size() == 3) return build_semidirect_cyclic(v[0], v[1], v[2]);
  fail(ErrorKind::BadParameter, "unknown group '" + std::string(name) + "'");
}

}  // namespace

FiniteGroup fixture_group(std::string_view name) {
  auto pos = name.find('x');
  if (pos == std::string_view::npos) return single_fixture(name);
  return build_direct_product(single_fixture(name.substr(0, pos)), fixture_group(name.substr(pos + 1)));
}

std::vector<std::string> fixture_names() {
  return {"1", "Z2", "Z3", "Z4", "Z5", "V4", "Z2xZ4", "S3", "D4", "Q8", "U3_2", "U3_3", "SD2_1_3", "SD3_1_7", "SD2_2_3"};
}

FiniteGroup resolve_group(std::string_view name_or_path) {
  try {
    return fixture_group(name_or_path);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BadParameter) throw;
  }
  std::ifstream in{std::string(name_or_path)};
  if (!in) fail(ErrorKind::BadParameter, "'" + std::string(name_or_path) + "' is neither a fixture nor a readable file");
  return parse_group_spec(in);
}

}  // namespace masseylab
