#include "wdc/scalar.hpp"

#include <cctype>

namespace wdc {

Scalar make_scalar(long numerator, long denominator) {
  Scalar q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view text, bool allow_sign) {
  if (allow_sign && !text.empty() && (text.front() == '-' || text.front() == '+')) {
    text.remove_prefix(1);
  }
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

std::optional<Scalar> parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) return std::nullopt;
  if (num.front() == '+') num.remove_prefix(1);

  mpz_class p(std::string(num), 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) return std::nullopt;
  Scalar value(p, q);
  value.canonicalize();
  return value;
}

double to_double(const Scalar& value) { return value.get_d(); }

}  // namespace wdc
