#pragma once

#include <string>

namespace ngd::csv {

/// Deterministic numeric formatting used by every CSV writer:
/// 12 significant digits, no locale dependence.
std::string number(double x);

} // namespace ngd::csv
