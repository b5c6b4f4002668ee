#include "cumulant/scalar.hpp"

#include <cctype>

#include "cumulant/errors.hpp"

namespace cumulant {

namespace {

bool is_integer_text(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw SchemaError("malformed scalar '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw SchemaError("zero denominator in scalar '" + std::string(text) + "'");
  Scalar value(n, d);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) { return value.get_str(10); }

}  // namespace cumulant
