#include "qtrefftz/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qtrefftz {

namespace {

Integer parse_integer(std::string_view text, bool allow_sign)
{
  std::size_t pos = 0;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
    ++pos;
  if (pos == text.size())
    throw std::invalid_argument("rational: missing digits in '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("rational: invalid character in '" + std::string(text) + "'");
  // GMP rejects an explicit '+'
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return Integer(digits, 10);
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den)
{
  if (den == 0)
    throw std::invalid_argument("rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text)
{
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, true));
  return make_rational(parse_integer(text.substr(0, slash), true), parse_integer(text.substr(slash + 1), false));
}

std::string to_string(const Rational& q)
{
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace qtrefftz
