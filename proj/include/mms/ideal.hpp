#ifndef MMS_IDEAL_HPP
#define MMS_IDEAL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "mms/diagram.hpp"

namespace mms
{

// Ordered variable names. The first `codim_count` names are the thickening
// variables x_1..x_m generating the ideal of the support X; the rest are
// the support variables z_0..z_n.
class VariableList
{
public:
    VariableList(std::vector<std::string> names, std::size_t codim_count);

    // "x,y,z,w" with the given codimension.
    static VariableList parse(const std::string &csv, std::size_t codim_count);
    // x,y for m = 2, x,y,z for m = 3, x1..xm otherwise; followed by
    // `support_count` support variables named after the codim ones.
    static VariableList standard(std::size_t codim_count, std::size_t support_count = 0);

    const std::vector<std::string> &names() const noexcept
    {
        return m_names;
    }
    std::size_t size() const noexcept
    {
        return m_names.size();
    }
    std::size_t codim_count() const noexcept
    {
        return m_codim;
    }
    std::size_t support_count() const noexcept
    {
        return m_names.size() - m_codim;
    }
    std::optional<std::size_t> index_of(const std::string &name) const;

    friend bool operator==(const VariableList &, const VariableList &) = default;

private:
    std::vector<std::string> m_names;
    std::size_t m_codim;
};

// Exponent vector aligned with a VariableList.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    Monomial(std::initializer_list<int> e) : exponents(e) {}

    std::size_t size() const noexcept
    {
        return exponents.size();
    }
    int degree() const noexcept;
    bool divides(const Monomial &other) const;

    friend auto operator<=>(const Monomial &, const Monomial &) = default;
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

Monomial lcm(const Monomial &a, const Monomial &b);

// Removes every monomial divisible by another one (and duplicates). The
// result is sorted lexicographically descending.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

// Monomial ideal given by its minimal generators. No generators is the zero
// ideal; the single generator 1 is the unit ideal.
class MonomialIdeal
{
public:
    // Generators are minimalized; throws VariableMismatch on a length
    // mismatch with the variable list.
    MonomialIdeal(VariableList vars, std::vector<Monomial> gens);

    static MonomialIdeal unit(VariableList vars);

    const VariableList &vars() const noexcept
    {
        return m_vars;
    }
    const std::vector<Monomial> &gens() const noexcept
    {
        return m_gens;
    }
    bool is_unit() const;
    bool is_zero() const noexcept
    {
        return m_gens.empty();
    }
    bool contains(const Monomial &m) const;

    friend bool operator==(const MonomialIdeal &, const MonomialIdeal &) = default;

private:
    VariableList m_vars;
    std::vector<Monomial> m_gens;
};

// Ideal generated by the inner-corner monomials of d.
MonomialIdeal ideal_from_diagram(const Diagram &d, const VariableList &vars);

// Standard monomials in the codim variables. Throws NotSupportedIdeal if a
// generator involves a support variable and NotCofinite if some codim
// variable has no pure power among the generators.
Diagram diagram_from_ideal(const MonomialIdeal &ideal);

bool is_cm_structure(const MonomialIdeal &ideal);

MonomialIdeal ideal_sum(const MonomialIdeal &a, const MonomialIdeal &b);
MonomialIdeal ideal_intersection(const MonomialIdeal &a, const MonomialIdeal &b);

// I * (x_1, ..., x_m).
MonomialIdeal product_with_support_ideal(const MonomialIdeal &ideal);

// All boxes of weight <= k in dimension m: the diagram of I_X^{k+1}.
Diagram infinitesimal_neighbourhood(std::size_t m, int k);
Diagram infinitesimal_neighbourhood(std::size_t m, int k, const VariableList &vars);

// Y_0 ⊂ Y_1 ⊂ ... ⊂ Y_K = d, where Y_k keeps the boxes of weight <= k.
std::vector<Diagram> s1_filtration(const Diagram &d);

// The quotient O_{Y_{j+1}} -> O_{Y_j} has kernel a sum of line bundles
// O_X(-(j+1)), one per box of weight j+1.
struct FiltrationLayer {
    int level = 0;
    std::vector<int> twists;

    friend bool operator==(const FiltrationLayer &, const FiltrationLayer &) = default;
};

std::vector<FiltrationLayer> filtration_layers(const Diagram &d);

// "x^4*y, z"; the unit ideal prints as "1" and the zero ideal as "0".
std::string to_string(const Monomial &m, const VariableList &vars);
std::string to_string(const MonomialIdeal &ideal);

} // namespace mms

#endif
