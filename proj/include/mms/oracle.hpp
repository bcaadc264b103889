#ifndef MMS_ORACLE_HPP
#define MMS_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mms/diagram.hpp"
#include "mms/ideal.hpp"
#include "mms/polynomial.hpp"
#include "mms/resolution.hpp"

// Brute-force reference computations. Everything here works straight from
// definitions (enumerate exponent vectors, test divisibility) and shares no
// code path with the formula-based modules it is used to check.
namespace mms::oracle
{

inline constexpr std::uint64_t kDefaultCap = 10'000'000;

// Entry d is the number of degree-d monomials outside the ideal.
struct DegreeTable {
    std::vector<std::int64_t> values;
};

// Number of exponent vectors of total degree d over all variables of the
// ring that no generator divides. Throws ResourceLimit when the number of
// degree-d monomials exceeds `cap`.
std::int64_t standard_monomial_count(const MonomialIdeal &ideal, int d, std::uint64_t cap = kDefaultCap);

DegreeTable degree_table(const MonomialIdeal &ideal, int max_d, std::uint64_t cap = kDefaultCap);

// Polynomial of degree <= degree_bound through (start + t, values[start + t])
// for t = 0..degree_bound, verified on the following point. Throws
// InvalidRange if fewer than degree_bound + 2 values are available and
// InconsistentValues if the check point does not fit.
ExactPolynomial interpolate_polynomial(const DegreeTable &table, int start, int degree_bound);

// Sum of the total degrees of the generators; a crude degree from which the
// Hilbert function of a monomial ideal agrees with its polynomial.
int stabilization_bound(const MonomialIdeal &ideal);

// Compares sum_e h(e) t^e (1 - t)^2 with 1 - sum_j t^{gen_j} + sum_i t^{syz_i},
// where h(e) counts boxes (a, b) of d2 with a + b = e, found by scanning the
// plane up to the largest coordinate.
bool k_polynomial_check(const Diagram &d2, const DegreePair &p);

// First degree in [from, to] at which the two ideals have different
// standard-monomial counts, if any. Throws VariableMismatch for different rings.
std::optional<int> first_count_mismatch(const MonomialIdeal &a, const MonomialIdeal &b, int from, int to,
                                        std::uint64_t cap = kDefaultCap);

} // namespace mms::oracle

#endif
