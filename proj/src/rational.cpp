#include "trialab/rational.hpp"

#include <cctype>
#include <ostream>

namespace trialab {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  std::string_view num = s, den;
  if (auto pos = s.find('/'); pos != std::string_view::npos) {
    num = s.substr(0, pos);
    den = s.substr(pos + 1);
    if (!valid_integer_token(den))
      throw Error("malformed rational '" + std::string(text) + "'");
  }
  if (!valid_integer_token(num))
    throw Error("malformed rational '" + std::string(text) + "'");

  mpq_class v;
  mpz_class n(std::string(num), 10);
  if (den.empty()) {
    v = n;
  } else {
    mpz_class d(std::string(den), 10);
    if (d == 0) throw Error("rational with zero denominator: '" + std::string(text) + "'");
    v = mpq_class(n, d);
    v.canonicalize();
  }
  return Rational(std::move(v));
}

std::string Rational::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace trialab
