#include "ktoric/integer.hpp"

#include "ktoric/errors.hpp"

#include <cctype>

namespace ktoric {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer nonneg_mod(const Integer& a, const Integer& b)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t)
{
    Integer g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer parse_integer(std::string_view text)
{
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw InputError("expected an integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw InputError("expected an integer, got '" + std::string(text) + "'");
    }
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(digits, 10);
}

std::string to_string(const Integer& value)
{
    return value.get_str();
}

std::strong_ordering compare(const Integer& a, const Integer& b)
{
    const int c = cmp(a, b);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering compare_lex(const IntVector& a, const IntVector& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = compare(a[i], b[i]); c != 0)
            return c;
    }
    return a.size() <=> b.size();
}

bool is_zero(const IntVector& v)
{
    for (const auto& x : v) {
        if (x != 0)
            return false;
    }
    return true;
}

} // namespace ktoric
