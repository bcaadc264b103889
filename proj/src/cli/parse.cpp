#include <cctype>

#include "mms/cli.hpp"
#include "mms/errors.hpp"

namespace mms::cli
{

namespace
{

// Cursor over the non-whitespace characters of the input, reporting
// positions in the original text.
class Scanner
{
public:
    explicit Scanner(std::string_view text)
    {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                m_chars.push_back(text[i]);
                m_offsets.push_back(i);
            }
        }
        m_end_offset = text.size();
    }

    bool done() const noexcept
    {
        return m_pos == m_chars.size();
    }
    char peek() const noexcept
    {
        return done() ? '\0' : m_chars[m_pos];
    }
    char take()
    {
        return m_chars[m_pos++];
    }
    std::size_t offset() const noexcept
    {
        return done() ? m_end_offset : m_offsets[m_pos];
    }
    std::size_t size() const noexcept
    {
        return m_chars.size();
    }
    char at(std::size_t i) const noexcept
    {
        return m_chars[i];
    }

private:
    std::string m_chars;
    std::vector<std::size_t> m_offsets;
    std::size_t m_end_offset = 0;
    std::size_t m_pos = 0;
};

bool is_letter(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

int parse_uint(Scanner &s)
{
    if (!is_digit(s.peek())) {
        throw ParseError("expected an exponent", s.offset());
    }
    long value = 0;
    while (is_digit(s.peek())) {
        value = value * 10 + (s.take() - '0');
        if (value > 1'000'000) {
            throw ParseError("exponent too large", s.offset());
        }
    }
    return static_cast<int>(value);
}

Monomial parse_monomial(Scanner &s, const VariableList &vars)
{
    Monomial m(std::vector<int>(vars.size(), 0));
    if (s.peek() == '1') {
        s.take();
        return m;
    }
    bool first = true;
    while (true) {
        if (!first) {
            if (s.peek() == '*') {
                s.take();
            } else if (!is_letter(s.peek())) {
                break;
            }
        }
        first = false;
        const std::size_t start = s.offset();
        if (!is_letter(s.peek())) {
            throw ParseError("expected a variable name", start);
        }
        std::string name(1, s.take());
        while (is_digit(s.peek())) {
            name += s.take();
        }
        const auto index = vars.index_of(name);
        if (!index) {
            throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(start));
        }
        int exponent = 1;
        if (s.peek() == '^') {
            s.take();
            exponent = parse_uint(s);
        }
        m.exponents[*index] += exponent;
    }
    return m;
}

} // namespace

MonomialIdeal parse_ideal(std::string_view text, const VariableList &vars)
{
    Scanner s(text);
    const bool wrapped = s.size() >= 2 && s.at(0) == '(' && s.at(s.size() - 1) == ')';
    if (wrapped) {
        s.take();
    }
    std::vector<Monomial> gens;
    auto finished = [&] {
        if (wrapped) {
            return s.peek() == ')';
        }
        return s.done();
    };
    if (s.peek() == '0') {
        s.take();
        if (!finished()) {
            throw ParseError("unexpected input after the zero ideal", s.offset());
        }
        return MonomialIdeal(vars, {});
    }
    while (true) {
        gens.push_back(parse_monomial(s, vars));
        if (finished()) {
            break;
        }
        if (s.peek() != ',') {
            throw ParseError(std::string("unexpected character '") + s.peek() + "'", s.offset());
        }
        s.take();
    }
    if (wrapped) {
        s.take();
        if (!s.done()) {
            throw ParseError("unexpected input after ')'", s.offset());
        }
    }
    return MonomialIdeal(vars, std::move(gens));
}

} // namespace mms::cli
