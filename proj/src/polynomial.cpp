#include "mms/polynomial.hpp"

#include <algorithm>

namespace mms
{

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
{
    for (auto &c : m_coeffs) {
        c.canonicalize();
    }
    trim();
}

ExactPolynomial::ExactPolynomial(std::initializer_list<Rational> coeffs)
    : ExactPolynomial(std::vector<Rational>(coeffs))
{
}

ExactPolynomial ExactPolynomial::constant(const Rational &c)
{
    return ExactPolynomial({c});
}

ExactPolynomial ExactPolynomial::linear_root(const Rational &root)
{
    return ExactPolynomial({Rational(-root), Rational(1)});
}

void ExactPolynomial::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back() == 0) {
        m_coeffs.pop_back();
    }
}

Rational ExactPolynomial::leading_coefficient() const
{
    return m_coeffs.empty() ? Rational(0) : m_coeffs.back();
}

Rational ExactPolynomial::coefficient(int t) const
{
    if (t < 0 || t >= static_cast<int>(m_coeffs.size())) {
        return Rational(0);
    }
    return m_coeffs[static_cast<std::size_t>(t)];
}

Rational ExactPolynomial::operator()(const Rational &d) const
{
    Rational acc = 0;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc = acc * d + *it;
    }
    return acc;
}

ExactPolynomial &ExactPolynomial::operator+=(const ExactPolynomial &rhs)
{
    if (m_coeffs.size() < rhs.m_coeffs.size()) {
        m_coeffs.resize(rhs.m_coeffs.size(), Rational(0));
    }
    for (std::size_t t = 0; t < rhs.m_coeffs.size(); ++t) {
        m_coeffs[t] += rhs.m_coeffs[t];
    }
    trim();
    return *this;
}

ExactPolynomial &ExactPolynomial::operator-=(const ExactPolynomial &rhs)
{
    if (m_coeffs.size() < rhs.m_coeffs.size()) {
        m_coeffs.resize(rhs.m_coeffs.size(), Rational(0));
    }
    for (std::size_t t = 0; t < rhs.m_coeffs.size(); ++t) {
        m_coeffs[t] -= rhs.m_coeffs[t];
    }
    trim();
    return *this;
}

ExactPolynomial &ExactPolynomial::operator*=(const ExactPolynomial &rhs)
{
    if (is_zero() || rhs.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    std::vector<Rational> out(m_coeffs.size() + rhs.m_coeffs.size() - 1, Rational(0));
    for (std::size_t a = 0; a < m_coeffs.size(); ++a) {
        for (std::size_t b = 0; b < rhs.m_coeffs.size(); ++b) {
            out[a + b] += m_coeffs[a] * rhs.m_coeffs[b];
        }
    }
    m_coeffs = std::move(out);
    trim();
    return *this;
}

ExactPolynomial &ExactPolynomial::operator*=(const Rational &c)
{
    for (auto &x : m_coeffs) {
        x *= c;
    }
    trim();
    return *this;
}

std::string to_string(const Rational &q)
{
    return q.get_str();
}

std::string to_string(const ExactPolynomial &p, const std::string &var)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int t = p.degree(); t >= 0; --t) {
        Rational c = p.coefficient(t);
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        Rational magnitude = abs(c);
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string power;
        if (t == 1) {
            power = var;
        } else if (t > 1) {
            power = var + "^" + std::to_string(t);
        }
        if (power.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += power;
        } else {
            out += to_string(magnitude) + "*" + power;
        }
    }
    return out;
}

Integer binomial(long top, long k)
{
    if (k < 0 || top < k) {
        return 0;
    }
    Integer out;
    mpz_bin_ui(out.get_mpz_t(), Integer(top).get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

} // namespace mms
