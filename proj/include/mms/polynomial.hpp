#ifndef MMS_POLYNOMIAL_HPP
#define MMS_POLYNOMIAL_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mms
{

using Integer = mpz_class;
using Rational = mpq_class;

// Polynomial in one variable d with exact rational coefficients c_0..c_deg.
// Trailing zero coefficients are never stored, so the zero polynomial has no
// coefficients and equality is coefficientwise.
class ExactPolynomial
{
public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<Rational> coeffs);
    ExactPolynomial(std::initializer_list<Rational> coeffs);

    static ExactPolynomial constant(const Rational &c);
    // The polynomial d - root.
    static ExactPolynomial linear_root(const Rational &root);

    const std::vector<Rational> &coeffs() const noexcept
    {
        return m_coeffs;
    }
    bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }
    // -1 for the zero polynomial.
    int degree() const noexcept
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    Rational leading_coefficient() const;
    Rational coefficient(int t) const;
    Rational operator()(const Rational &d) const;

    ExactPolynomial &operator+=(const ExactPolynomial &rhs);
    ExactPolynomial &operator-=(const ExactPolynomial &rhs);
    ExactPolynomial &operator*=(const ExactPolynomial &rhs);
    ExactPolynomial &operator*=(const Rational &c);

    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial &b)
    {
        return a += b;
    }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial &b)
    {
        return a -= b;
    }
    friend ExactPolynomial operator*(ExactPolynomial a, const ExactPolynomial &b)
    {
        return a *= b;
    }
    friend ExactPolynomial operator*(ExactPolynomial a, const Rational &c)
    {
        return a *= c;
    }
    friend bool operator==(const ExactPolynomial &a, const ExactPolynomial &b)
    {
        return a.m_coeffs == b.m_coeffs;
    }

private:
    void trim();

    std::vector<Rational> m_coeffs;
};

// "9*d - 11", "1/2*d^2 + 3/2*d + 1", "0".
std::string to_string(const ExactPolynomial &p, const std::string &var = "d");

// "p/q" or "p" for integers.
std::string to_string(const Rational &q);

// The integer binomial coefficient C(top, k); 0 when k < 0 or top < k.
Integer binomial(long top, long k);

} // namespace mms

#endif
