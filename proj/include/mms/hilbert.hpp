#ifndef MMS_HILBERT_HPP
#define MMS_HILBERT_HPP

#include <optional>
#include <vector>

#include "mms/diagram.hpp"
#include "mms/polynomial.hpp"

namespace mms
{

// b_i(d) = C(n + d - i, n) as a polynomial in d: prod_{t=1..n} (d - i + t) / n!.
// n = 0 gives 1; n = -1 (empty support) gives the zero polynomial.
ExactPolynomial b_poly(int n, int i);

// Hilbert polynomial of the structure on X = P^n with diagram d: the sum of
// b_{w_B} over all boxes B.
ExactPolynomial hilbert_polynomial(const Diagram &d, int n);

// Value of the Hilbert function in degree deg: sum over boxes with
// w_B <= deg of C(n + deg - w_B, n).
Integer hilbert_function(const Diagram &d, int n, int deg);

int multiplicity(const Diagram &d) noexcept;

// O_Y as the O_X-module ⊕_B O_X(-w_B).
struct StructureDecomposition {
    int support_dim = 0;
    std::vector<int> weights; // sorted ascending, one entry per box

    std::size_t rank() const noexcept
    {
        return weights.size();
    }
    ExactPolynomial hilbert_polynomial() const;
};

StructureDecomposition structure_decomposition(const Diagram &d, int n);

// Product of the basis monomials of boxes a and b in O_Y. std::nullopt is the
// zero element: the product monomial lies in the ideal.
std::optional<Box> algebra_multiply(const Diagram &d, const Box &a, const Box &b);

// Equal Hilbert functions, i.e. equal diagonal profiles.
bool R_equivalent(const Diagram &a, const Diagram &b);

} // namespace mms

#endif
