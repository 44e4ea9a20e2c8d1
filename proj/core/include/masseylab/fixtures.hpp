#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "masseylab/finite_group.hpp"

namespace masseylab {

/// Built-in groups by name: Z<n>, V4, S3, D4, Q8, U3_2 (and U<m>_<p>),
/// SD<l>_<k>_<p>, and products joined by 'x' such as Z2xZ4.
FiniteGroup fixture_group(std::string_view name);

/// Names listed by `group list`.
std::vector<std::string> fixture_names();

/// A fixture name, or else a path to a group spec file.
FiniteGroup resolve_group(std::string_view name_or_path);

}  // namespace masseylab
