#include "ktoric/polynomial.hpp"

#include "ktoric/errors.hpp"

#include <algorithm>
#include <sstream>

namespace ktoric {

unsigned long total_degree(const Monomial& m)
{
    unsigned long d = 0;
    for (auto e : m)
        d += e;
    return d;
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b)
{
    const unsigned long da = total_degree(a);
    const unsigned long db = total_degree(b);
    if (da != db)
        return da <=> db;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i])
            return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

bool divides(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i])
            return false;
    }
    return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b)
{
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = std::max(a[i], b[i]);
    return m;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b)
{
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = a[i] + b[i];
    return m;
}

Monomial monomial_div(const Monomial& b, const Monomial& a)
{
    Monomial m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i] = b[i] - a[i];
    return m;
}

bool coprime(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0)
            return false;
    }
    return true;
}

namespace {

bool term_greater(const Term& x, const Term& y)
{
    return grevlex(x.monomial, y.monomial) > 0;
}

} // namespace

IntPolynomial::IntPolynomial(std::size_t num_vars)
    : num_vars_(num_vars)
{
}

IntPolynomial::IntPolynomial(std::size_t num_vars, std::vector<Term> terms)
    : num_vars_(num_vars)
{
    for (const auto& t : terms) {
        if (t.monomial.size() != num_vars)
            throw InputError("monomial arity does not match polynomial ring");
    }
    std::sort(terms.begin(), terms.end(), term_greater);
    for (auto& t : terms) {
        if (!terms_.empty() && terms_.back().monomial == t.monomial) {
            terms_.back().coefficient += t.coefficient;
            if (terms_.back().coefficient == 0)
                terms_.pop_back();
        } else if (t.coefficient != 0) {
            terms_.push_back(std::move(t));
        }
    }
}

IntPolynomial IntPolynomial::constant(std::size_t num_vars, const Integer& c)
{
    IntPolynomial p(num_vars);
    if (c != 0)
        p.terms_.push_back(Term{Monomial(num_vars, 0), c});
    return p;
}

IntPolynomial IntPolynomial::monomial(const Monomial& m, const Integer& c)
{
    IntPolynomial p(m.size());
    if (c != 0)
        p.terms_.push_back(Term{m, c});
    return p;
}

unsigned long IntPolynomial::total_degree() const
{
    unsigned long d = 0;
    for (const auto& t : terms_)
        d = std::max(d, ktoric::total_degree(t.monomial));
    return d;
}

IntPolynomial IntPolynomial::tail() const
{
    IntPolynomial p(num_vars_);
    if (!terms_.empty())
        p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
}

Term IntPolynomial::pop_leading()
{
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
}

void IntPolynomial::add_scaled(const Integer& c, const Monomial& m, const IntPolynomial& g)
{
    if (c == 0 || g.is_zero())
        return;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + g.terms_.size());
    auto it = terms_.begin();
    for (const auto& gt : g.terms_) {
        Monomial prod = monomial_mul(gt.monomial, m);
        while (it != terms_.end() && grevlex(it->monomial, prod) > 0)
            merged.push_back(std::move(*it++));
        if (it != terms_.end() && it->monomial == prod) {
            Integer sum = it->coefficient + c * gt.coefficient;
            if (sum != 0)
                merged.push_back(Term{std::move(prod), std::move(sum)});
            ++it;
        } else {
            merged.push_back(Term{std::move(prod), c * gt.coefficient});
        }
    }
    while (it != terms_.end())
        merged.push_back(std::move(*it++));
    terms_ = std::move(merged);
}

IntPolynomial IntPolynomial::times_term(const Integer& c, const Monomial& m) const
{
    IntPolynomial p(num_vars_);
    p.add_scaled(c, m, *this);
    return p;
}

void IntPolynomial::make_leading_positive()
{
    if (!terms_.empty() && terms_.front().coefficient < 0) {
        for (auto& t : terms_)
            t.coefficient = -t.coefficient;
    }
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial r = a;
    r.add_scaled(1, Monomial(b.num_vars_, 0), b);
    return r;
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial r = a;
    r.add_scaled(-1, Monomial(b.num_vars_, 0), b);
    return r;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    IntPolynomial r(a.num_vars_);
    for (const auto& t : a.terms_)
        r.add_scaled(t.coefficient, t.monomial, b);
    return r;
}

bool operator==(const IntPolynomial& a, const IntPolynomial& b)
{
    return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
}

std::string IntPolynomial::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coefficient < 0;
        Integer mag = abs(t.coefficient);
        out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
        first = false;
        bool constant = true;
        std::ostringstream mono;
        for (std::size_t i = 0; i < t.monomial.size(); ++i) {
            if (t.monomial[i] == 0)
                continue;
            if (!constant)
                mono << '*';
            constant = false;
            mono << (i < names.size() ? names[i] : "x" + std::to_string(i));
            if (t.monomial[i] > 1)
                mono << '^' << t.monomial[i];
        }
        if (constant)
            out << mag.get_str();
        else if (mag == 1)
            out << mono.str();
        else
            out << mag.get_str() << '*' << mono.str();
    }
    return out.str();
}

} // namespace ktoric
