#include "mms/families.hpp"

#include <algorithm>

#include "mms/errors.hpp"
#include "mms/hilbert.hpp"

namespace mms
{

namespace
{

constexpr std::size_t kX = 0;
constexpr std::size_t kY = 1;
constexpr std::size_t kZ = 2;

// Ideal of the staircase p, built in k[x, y] and embedded into `ring` with
// the row direction sent to `row_axis`.
MonomialIdeal staircase_ideal(const Partition &p, std::size_t row_axis, const VariableList &ring)
{
    const MonomialIdeal planar = ideal_from_diagram(partition_to_diagram(p), VariableList::standard(2));
    std::vector<Monomial> gens;
    for (const Monomial &m : planar.gens()) {
        Monomial g(std::vector<int>(ring.size(), 0));
        g.exponents[row_axis] = m.exponents[0];
        g.exponents[kY] = m.exponents[1];
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(ring, std::move(gens));
}

} // namespace

FamilySetup::FamilySetup(Partition lam_, Partition mu_, int n_) : lam(std::move(lam_)), mu(std::move(mu_)), n(n_)
{
    if (n < 0) {
        throw InvalidRange("support dimension must be non-negative, got " + std::to_string(n));
    }
}

VariableList family_ring(int n)
{
    std::vector<std::string> names{"x", "y", "z"};
    for (int s = 1; s <= n; ++s) {
        names.push_back("w" + std::to_string(s));
    }
    return VariableList(std::move(names), 2);
}

Diagram intersection_structure(const FamilySetup &f)
{
    return three_dim_diagram(f.lam, f.mu);
}

FlatnessEvidence flatness_check(const FamilySetup &f)
{
    FlatnessEvidence e;
    e.hilb_lam = hilbert_polynomial(partition_to_diagram(f.lam), f.n);
    e.hilb_mu = hilbert_polynomial(partition_to_diagram(f.mu), f.n);
    e.hilb_intersection = hilbert_polynomial(intersection_structure(f), f.n - 1);
    e.hilb_union = e.hilb_lam + e.hilb_mu - e.hilb_intersection;
    e.hilb_special = hilbert_polynomial(partition_to_diagram(partition_sum(f.lam, f.mu)), f.n);
    e.holds = e.hilb_union == e.hilb_special;
    return e;
}

MonomialIdeal generic_fiber_ideal(const FamilySetup &f)
{
    const VariableList ring = family_ring(f.n);
    return ideal_intersection(staircase_ideal(f.lam, kX, ring), staircase_ideal(f.mu, kZ, ring));
}

MonomialIdeal generic_fiber_closed_form(const FamilySetup &f)
{
    const VariableList ring = family_ring(f.n);
    std::vector<Monomial> gens;
    const std::size_t rows = std::max(f.lam.length(), f.mu.length());
    for (std::size_t j = 0; j <= rows; ++j) {
        Monomial g(std::vector<int>(ring.size(), 0));
        g.exponents[kX] = f.lam[j];
        g.exponents[kY] = static_cast<int>(j);
        g.exponents[kZ] = f.mu[j];
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal special_fiber_ideal(const FamilySetup &f)
{
    const MonomialIdeal generic = generic_fiber_ideal(f);
    std::vector<Monomial> gens;
    for (Monomial g : generic.gens()) {
        g.exponents[kX] += g.exponents[kZ];
        g.exponents[kZ] = 0;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(generic.vars(), std::move(gens));
}

bool binomial_identity_check(int n, int i, int j)
{
    if (n < 1) {
        throw InvalidRange("binomial identity needs n >= 1, got " + std::to_string(n));
    }
    if (j < 0 || i < j) {
        throw InvalidRange("binomial identity needs i >= j >= 0, got i=" + std::to_string(i)
                           + ", j=" + std::to_string(j));
    }
    ExactPolynomial rhs;
    for (int k = j; k < i; ++k) {
        rhs += b_poly(n - 1, k);
    }
    return b_poly(n, j) - b_poly(n, i) == rhs;
}

} // namespace mms
