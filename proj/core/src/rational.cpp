#include "loopbv/rational.hpp"

#include <cctype>
#include <string>

#include "loopbv/errors.hpp"

namespace loopbv {

std::string to_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole)
{
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+'))
        i = 1;
    if (i == text.size())
        throw InputError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t k = i; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw InputError("malformed rational '" + std::string(whole) + "'");
    std::string digits(text);
    if (digits[0] == '+')
        digits.erase(0, 1);
    return BigInt(digits);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, text));
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0)
        throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

double to_double(const Rational& r)
{
    return r.convert_to<double>();
}

} // namespace loopbv
