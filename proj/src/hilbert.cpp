#include "mms/hilbert.hpp"

#include <algorithm>

#include "mms/errors.hpp"

namespace mms
{

ExactPolynomial b_poly(int n, int i)
{
    if (n < -1) {
        throw InvalidRange("support dimension must be at least -1, got " + std::to_string(n));
    }
    if (n == -1) {
        return ExactPolynomial{};
    }
    ExactPolynomial out = ExactPolynomial::constant(1);
    Integer factorial = 1;
    for (int t = 1; t <= n; ++t) {
        out *= ExactPolynomial::linear_root(Rational(i - t));
        factorial *= t;
    }
    return out * Rational(Integer(1), factorial);
}

ExactPolynomial hilbert_polynomial(const Diagram &d, int n)
{
    const DiagonalProfile profile = diagonal_profile(d);
    ExactPolynomial out;
    for (std::size_t w = 0; w < profile.size(); ++w) {
        out += b_poly(n, static_cast<int>(w)) * Rational(profile[w]);
    }
    return out;
}

Integer hilbert_function(const Diagram &d, int n, int deg)
{
    if (n < 0 || deg < 0) {
        throw InvalidRange("hilbert_function needs n >= 0 and deg >= 0");
    }
    const DiagonalProfile profile = diagonal_profile(d);
    Integer out = 0;
    for (std::size_t w = 0; w < profile.size() && static_cast<int>(w) <= deg; ++w) {
        out += profile[w] * binomial(n + deg - static_cast<long>(w), n);
    }
    return out;
}

int multiplicity(const Diagram &d) noexcept
{
    return static_cast<int>(d.size());
}

ExactPolynomial StructureDecomposition::hilbert_polynomial() const
{
    ExactPolynomial out;
    for (int w : weights) {
        out += b_poly(support_dim, w);
    }
    return out;
}

StructureDecomposition structure_decomposition(const Diagram &d, int n)
{
    StructureDecomposition out;
    out.support_dim = n;
    for (const Box &b : d) {
        out.weights.push_back(box_weight(b));
    }
    std::sort(out.weights.begin(), out.weights.end());
    return out;
}

std::optional<Box> algebra_multiply(const Diagram &d, const Box &a, const Box &b)
{
    if (!d.contains(a)) {
        throw BoxNotInDiagram("box " + to_string(a) + " is not in the diagram");
    }
    if (!d.contains(b)) {
        throw BoxNotInDiagram("box " + to_string(b) + " is not in the diagram");
    }
    Box product = a;
    for (std::size_t t = 0; t < product.dim(); ++t) {
        product.coords[t] += b.coords[t];
    }
    if (!d.contains(product)) {
        return std::nullopt;
    }
    return product;
}

bool R_equivalent(const Diagram &a, const Diagram &b)
{
    if (a.dim() != b.dim()) {
        throw DimensionError("R_equivalent: dimensions differ");
    }
    return diagonal_profile(a) == diagonal_profile(b);
}

} // namespace mms
