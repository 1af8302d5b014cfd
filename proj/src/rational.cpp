#include <orthogen/rational.hpp>

#include <cctype>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace orthogen {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+'))
        body.remove_prefix(1);

    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);

    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    Integer q(std::string(den), 10);
    if (q == 0)
        throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");

    Integer p(std::string(num), 10);
    if (!text.empty() && text.front() == '-')
        p = -p;

    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value)
{
    // get_str emits "p" for integral values and "p/q" otherwise.
    return value.get_str(10);
}

std::string to_approx_string(const Rational& value, int digits)
{
    mpf_class f(value, 256);
    std::ostringstream os;
    os << std::setprecision(digits) << f;
    return os.str();
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result(1);
    Rational b = base;
    while (exponent != 0) {
        if (exponent & 1u)
            result *= b;
        b *= b;
        exponent >>= 1;
    }
    return result;
}

} // namespace orthogen
