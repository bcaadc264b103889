#ifndef MMS_FAMILIES_HPP
#define MMS_FAMILIES_HPP

#include "mms/diagram.hpp"
#include "mms/ideal.hpp"
#include "mms/polynomial.hpp"

namespace mms
{

// Two codimension-two structures inside the hyperplane y = 0 of P^{n+2}:
// lam on X = V(x, y) and mu on Z = V(z, y). The family moves Z onto X by
// z -> t z + (1 - t) x.
struct FamilySetup {
    Partition lam;
    Partition mu;
    int n = 0;

    FamilySetup(Partition lam_, Partition mu_, int n_);
};

// The ring k[x, y, z, w1, ..., wn] with x, y as thickening variables.
VariableList family_ring(int n);

// three_dim_diagram(lam, mu): the intersection of the two structures, a
// codimension-three structure on P^{n-1}.
Diagram intersection_structure(const FamilySetup &f);

struct FlatnessEvidence {
    ExactPolynomial hilb_lam;          // structure on X, support P^n
    ExactPolynomial hilb_mu;           // structure on Z, support P^n
    ExactPolynomial hilb_intersection; // 3D diagram, support P^{n-1}
    ExactPolynomial hilb_union;        // hilb_lam + hilb_mu - hilb_intersection
    ExactPolynomial hilb_special;      // diagram of lam + mu, support P^n
    bool holds = false;
};

// Hilb(V ∪ W) = Hilb(V) + Hilb(W) - Hilb(V ∩ W) compared against the
// special fiber. For n = 0 the intersection is empty and contributes 0.
FlatnessEvidence flatness_check(const FamilySetup &f);

// I(lam) ∩ I(mu) in family_ring(n), with I(lam) in x, y and I(mu) in z, y.
MonomialIdeal generic_fiber_ideal(const FamilySetup &f);

// minimalize{ y^j x^{lam_j} z^{mu_j} : j = 0..max(len lam, len mu) }.
MonomialIdeal generic_fiber_closed_form(const FamilySetup &f);

// The generic fiber with z replaced by x.
MonomialIdeal special_fiber_ideal(const FamilySetup &f);

// Checks b_j - b_i = sum_{k=j}^{i-1} C(n - 1 + d - k, n - 1) as polynomials
// in d, i.e. the drop of b along a row of i - j boxes. Needs n >= 1 and
// i >= j >= 0; i == j is the empty sum. Throws InvalidRange otherwise.
bool binomial_identity_check(int n, int i, int j);

} // namespace mms

#endif
