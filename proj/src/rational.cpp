#include "mgi/rational.hpp"

#include "mgi/errors.hpp"

#include <cctype>
#include <cstdlib>
#include <vector>

namespace mgi {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw Error(ErrorKind::DenominatorZero, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0)
        throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    return make_rational(n, d);
}

std::string to_string(const Rational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value, int digits)
{
    if (value == 0)
        return "0";
    mp_bitcnt_t bits = static_cast<mp_bitcnt_t>(digits) * 4 + 64;
    mpf_class f(value, bits);
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    gmp_snprintf(buf.data(), buf.size(), "%.*Fg", digits, f.get_mpf_t());
    return std::string(buf.data());
}

long double to_long_double(const Rational& value)
{
    return std::strtold(to_decimal(value, 30).c_str(), nullptr);
}

Rational abs(const Rational& value)
{
    return value < 0 ? Rational(-value) : value;
}

}  // namespace mgi
