#include "toricfano/rational.hpp"

#include <cctype>

#include "toricfano/errors.hpp"

namespace toricfano {

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw InputError("not a rational literal: \"" + std::string(text) + "\"");
  using Int = boost::multiprecision::mpz_int;
  const Int p(std::string(num.front() == '+' ? num.substr(1) : num));
  const Int q{std::string(den)};
  if (q == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(p, q);
}

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace toricfano
