#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cumulant {

/// Exact rational. Always kept in lowest terms with a positive denominator.
using Scalar = mpq_class;

/// p/q in lowest terms. mpq_class(p, q) alone does not canonicalize.
inline Scalar ratio(long p, long q) {
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

/// Parses "p/q" or "p" (optional leading sign). Throws SchemaError on
/// malformed text or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& value);

}  // namespace cumulant
