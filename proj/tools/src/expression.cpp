#include "ktoric/cli/expression.hpp"

#include "ktoric/errors.hpp"

#include <cctype>

namespace ktoric::cli {

namespace {

class Parser {
public:
    Parser(std::string_view text, const GroupHandle& group, const SymbolTable& symbols)
        : text_(text), group_(group), symbols_(symbols)
    {
    }

    GroupRingElement parse()
    {
        GroupRingElement e = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError("expression: " + what + " at position " + std::to_string(pos_ + 1));
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    char peek()
    {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    GroupRingElement expr()
    {
        GroupRingElement acc = term();
        for (;;) {
            if (accept('+'))
                acc = acc + term();
            else if (accept('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    GroupRingElement term()
    {
        GroupRingElement acc = unary();
        while (accept('*'))
            acc = acc * unary();
        return acc;
    }

    GroupRingElement unary()
    {
        if (accept('-'))
            return -unary();
        return power();
    }

    GroupRingElement power()
    {
        GroupRingElement base = primary();
        if (!accept('^'))
            return base;
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a nonnegative integer exponent");
        Integer n = parse_integer(text_.substr(start, pos_ - start));
        if (!n.fits_ulong_p())
            fail("exponent too large");
        return base.pow(n.get_ui());
    }

    Integer signed_integer()
    {
        skip();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (digits == pos_)
            fail("expected an integer");
        return parse_integer(text_.substr(start, pos_ - start));
    }

    IntVector integer_list(char stop1, char stop2)
    {
        IntVector out;
        char c = peek();
        if (c == stop1 || c == stop2)
            return out;
        out.push_back(signed_integer());
        while (accept(','))
            out.push_back(signed_integer());
        return out;
    }

    GroupRingElement monomial()
    {
        expect('[');
        Exponent e;
        e.free = integer_list(';', ']');
        if (accept(';'))
            e.torsion = integer_list(']', ']');
        expect(']');
        const FgAbelianGroup& g = *group_;
        if (e.free.size() != g.free_rank() || e.torsion.size() != g.torsion().size())
            fail("monomial exponent does not match " + g.describe());
        return GroupRingElement::monomial(GroupElement(group_, g.reduce(std::move(e))));
    }

    GroupRingElement primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            GroupRingElement e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return GroupRingElement::constant(group_, parse_integer(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_' || text_[pos_] == '\''))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            if (name == "t") {
                std::size_t save = pos_;
                if (accept('^') && peek() == '[')
                    return monomial();
                pos_ = save;
            }
            auto it = symbols_.find(name);
            if (it == symbols_.end()) {
                pos_ = start;
                fail("unknown symbol '" + name + "'");
            }
            return GroupRingElement::monomial(it->second);
        }
        if (c == '\0')
            fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    const GroupHandle& group_;
    const SymbolTable& symbols_;
};

} // namespace

GroupRingElement parse_expression(std::string_view text, const GroupHandle& group, const SymbolTable& symbols)
{
    return Parser(text, group, symbols).parse();
}

} // namespace ktoric::cli
