#pragma once

#include <string>
#include <vector>

#include "masseylab/cochain.hpp"
#include "masseylab/report.hpp"

namespace masseylab {

/// Names accepted by run_suite, in listing order.
std::vector<std::string> suite_names();

/// `verify <suite> --flag value ...` limited to the flags the suite reads;
/// --jobs and cache settings never appear, so reports compare across them.
std::string canonical_command(const std::string& suite, const RunConfig& cfg);

/// Runs a verification suite. Records are computed per item (possibly on
/// several workers) and merged in item order. Throws BadParameter for an
/// unknown suite.
Report run_suite(const std::string& suite, const RunConfig& cfg);

/// Tuples of H^1 elements in lexicographic coordinate order, first class most
/// significant.
std::vector<std::vector<Cochain>> h1_tuples(const Cohomology& h, std::uint32_t n);
std::string tuple_label(const Cohomology& h, const std::vector<Cochain>& classes);

}  // namespace masseylab
