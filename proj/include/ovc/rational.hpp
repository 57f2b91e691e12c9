#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ovc {

/// Exact rational scalar. All ortho_core arithmetic uses these; floats
/// never decide an exact question.
using Rat = mpq_class;

/// Parses "p", "-p", or "p/q" with nonzero q. Throws std::invalid_argument
/// on anything else.
Rat parse_rational(std::string_view text);

/// Canonical "p" or "p/q" rendering.
std::string format_rational(const Rat& r);

/// Exact conversion; every finite double is a dyadic rational.
Rat rational_from_double(double x);

}  // namespace ovc
