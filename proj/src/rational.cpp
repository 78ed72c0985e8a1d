#include "twcy/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace twcy {

std::string to_string(const Rational& r)
{
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

static bool is_integer_text(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

Rational parse_rational(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    std::size_t slash = s.find('/');
    std::string p = s.substr(0, slash);
    std::string q = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_text(p) || !is_integer_text(q) || q[0] == '-' || q[0] == '+')
        throw std::invalid_argument("malformed rational '" + text + "'");
    if (p[0] == '+')
        p = p.substr(1);
    Integer num(p), den(q);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
}

}  // namespace twcy
