#include "mms/ideal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "mms/errors.hpp"

namespace mms
{

// ---------------------------------------------------------------------------
// VariableList

VariableList::VariableList(std::vector<std::string> names, std::size_t codim_count)
    : m_names(std::move(names)), m_codim(codim_count)
{
    if (m_codim == 0) {
        throw InvalidRange("at least one thickening variable is required");
    }
    if (m_codim > m_names.size()) {
        throw InvalidRange("codimension " + std::to_string(m_codim) + " exceeds the number of variables ("
                           + std::to_string(m_names.size()) + ")");
    }
    std::set<std::string> seen;
    for (const auto &name : m_names) {
        if (name.empty()) {
            throw InvalidRange("empty variable name");
        }
        if (!seen.insert(name).second) {
            throw InvalidRange("duplicate variable name '" + name + "'");
        }
    }
}

VariableList VariableList::parse(const std::string &csv, std::size_t codim_count)
{
    std::vector<std::string> names;
    std::string current;
    for (char c : csv) {
        if (c == ',') {
            names.push_back(current);
            current.clear();
        } else if (c != ' ' && c != '\t') {
            current += c;
        }
    }
    names.push_back(current);
    return VariableList(std::move(names), codim_count);
}

VariableList VariableList::standard(std::size_t codim_count, std::size_t support_count)
{
    static const char *const small[] = {"x", "y", "z"};
    std::vector<std::string> names;
    for (std::size_t t = 0; t < codim_count; ++t) {
        names.push_back(codim_count <= 3 ? std::string(small[t]) : "x" + std::to_string(t + 1));
    }
    const std::string prefix = codim_count <= 2 ? "z" : "w";
    for (std::size_t s = 0; s < support_count; ++s) {
        names.push_back(prefix + std::to_string(s));
    }
    return VariableList(std::move(names), codim_count);
}

std::optional<std::size_t> VariableList::index_of(const std::string &name) const
{
    auto it = std::find(m_names.begin(), m_names.end(), name);
    if (it == m_names.end()) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - m_names.begin());
}

// ---------------------------------------------------------------------------
// Monomial

int Monomial::degree() const noexcept
{
    return std::accumulate(exponents.begin(), exponents.end(), 0);
}

bool Monomial::divides(const Monomial &other) const
{
    for (std::size_t t = 0; t < exponents.size(); ++t) {
        if (exponents[t] > other.exponents[t]) {
            return false;
        }
    }
    return true;
}

Monomial lcm(const Monomial &a, const Monomial &b)
{
    Monomial out = a;
    for (std::size_t t = 0; t < out.exponents.size(); ++t) {
        out.exponents[t] = std::max(out.exponents[t], b.exponents[t]);
    }
    return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), std::greater<>{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (std::size_t a = 0; a < gens.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
            redundant = a != b && gens[b].divides(gens[a]);
        }
        if (!redundant) {
            out.push_back(gens[a]);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(VariableList vars, std::vector<Monomial> gens) : m_vars(std::move(vars))
{
    for (const Monomial &g : gens) {
        if (g.size() != m_vars.size()) {
            throw VariableMismatch("monomial has " + std::to_string(g.size()) + " exponents, ring has "
                                   + std::to_string(m_vars.size()) + " variables");
        }
        if (std::any_of(g.exponents.begin(), g.exponents.end(), [](int e) { return e < 0; })) {
            throw InvalidRange("negative exponent in monomial");
        }
    }
    m_gens = minimalize(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(VariableList vars)
{
    Monomial one(std::vector<int>(vars.size(), 0));
    return MonomialIdeal(std::move(vars), {std::move(one)});
}

bool MonomialIdeal::is_unit() const
{
    return m_gens.size() == 1 && m_gens.front().degree() == 0;
}

bool MonomialIdeal::contains(const Monomial &m) const
{
    return std::any_of(m_gens.begin(), m_gens.end(), [&](const Monomial &g) { return g.divides(m); });
}

namespace
{

void require_same_ring(const MonomialIdeal &a, const MonomialIdeal &b)
{
    if (!(a.vars() == b.vars())) {
        throw VariableMismatch("ideals live in different variable lists");
    }
}

// Pure-power exponent of codim variable t, or 0 if there is none.
int pure_power(const MonomialIdeal &ideal, std::size_t t)
{
    for (const Monomial &g : ideal.gens()) {
        bool pure = g.exponents[t] > 0;
        for (std::size_t s = 0; s < g.size() && pure; ++s) {
            pure = s == t || g.exponents[s] == 0;
        }
        if (pure) {
            return g.exponents[t];
        }
    }
    return 0;
}

void require_structure(const MonomialIdeal &ideal)
{
    const VariableList &vars = ideal.vars();
    for (const Monomial &g : ideal.gens()) {
        for (std::size_t s = vars.codim_count(); s < vars.size(); ++s) {
            if (g.exponents[s] != 0) {
                throw NotSupportedIdeal("generator " + to_string(g, vars) + " involves support variable "
                                        + vars.names()[s]);
            }
        }
    }
    if (ideal.is_unit()) {
        return;
    }
    for (std::size_t t = 0; t < vars.codim_count(); ++t) {
        if (pure_power(ideal, t) == 0) {
            throw NotCofinite("no pure power of " + vars.names()[t]
                              + " among the generators; infinitely many standard monomials");
        }
    }
}

} // namespace

MonomialIdeal ideal_from_diagram(const Diagram &d, const VariableList &vars)
{
    if (d.dim() != vars.codim_count()) {
        throw DimensionError("diagram of dimension " + std::to_string(d.dim()) + " needs "
                             + std::to_string(d.dim()) + " thickening variables, have "
                             + std::to_string(vars.codim_count()));
    }
    std::vector<Monomial> gens;
    for (const Box &corner : inner_corners(d)) {
        std::vector<int> e(vars.size(), 0);
        std::copy(corner.coords.begin(), corner.coords.end(), e.begin());
        gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(vars, std::move(gens));
}

Diagram diagram_from_ideal(const MonomialIdeal &ideal)
{
    require_structure(ideal);
    const std::size_t m = ideal.vars().codim_count();
    if (ideal.is_unit()) {
        return Diagram(m);
    }
    std::vector<int> bounds(m);
    for (std::size_t t = 0; t < m; ++t) {
        bounds[t] = pure_power(ideal, t);
    }
    Diagram::container boxes;
    std::vector<int> point(m, 0);
    Monomial probe(std::vector<int>(ideal.vars().size(), 0));
    std::function<void(std::size_t)> walk = [&](std::size_t axis) {
        if (axis == m) {
            std::copy(point.begin(), point.end(), probe.exponents.begin());
            if (!ideal.contains(probe)) {
                boxes.insert(Box(point));
            }
            return;
        }
        for (int c = 0; c < bounds[axis]; ++c) {
            point[axis] = c;
            walk(axis + 1);
        }
    };
    walk(0);
    return Diagram(m, std::move(boxes));
}

bool is_cm_structure(const MonomialIdeal &ideal)
{
    if (ideal.is_zero()) {
        return false;
    }
    try {
        require_structure(ideal);
    } catch (const NotSupportedIdeal &) {
        return false;
    } catch (const NotCofinite &) {
        return false;
    }
    return true;
}

MonomialIdeal ideal_sum(const MonomialIdeal &a, const MonomialIdeal &b)
{
    require_same_ring(a, b);
    std::vector<Monomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal ideal_intersection(const MonomialIdeal &a, const MonomialIdeal &b)
{
    require_same_ring(a, b);
    std::vector<Monomial> gens;
    for (const Monomial &g : a.gens()) {
        for (const Monomial &h : b.gens()) {
            gens.push_back(lcm(g, h));
        }
    }
    return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal product_with_support_ideal(const MonomialIdeal &ideal)
{
    require_structure(ideal);
    std::vector<Monomial> gens;
    for (const Monomial &g : ideal.gens()) {
        for (std::size_t t = 0; t < ideal.vars().codim_count(); ++t) {
            Monomial shifted = g;
            ++shifted.exponents[t];
            gens.push_back(std::move(shifted));
        }
    }
    return MonomialIdeal(ideal.vars(), std::move(gens));
}

Diagram infinitesimal_neighbourhood(std::size_t m, int k)
{
    if (k < 0) {
        throw InvalidRange("neighbourhood order must be non-negative, got " + std::to_string(k));
    }
    Diagram::container boxes;
    std::vector<int> point(m, 0);
    std::function<void(std::size_t, int)> walk = [&](std::size_t axis, int budget) {
        if (axis == m) {
            boxes.insert(Box(point));
            return;
        }
        for (int c = 0; c <= budget; ++c) {
            point[axis] = c;
            walk(axis + 1, budget - c);
        }
        point[axis] = 0;
    };
    walk(0, k);
    return Diagram(m, std::move(boxes));
}

Diagram infinitesimal_neighbourhood(std::size_t m, int k, const VariableList &vars)
{
    if (m != vars.codim_count()) {
        throw DimensionError("neighbourhood dimension " + std::to_string(m) + " differs from codimension "
                             + std::to_string(vars.codim_count()));
    }
    return infinitesimal_neighbourhood(m, k);
}

std::vector<Diagram> s1_filtration(const Diagram &d)
{
    std::vector<Diagram> terms;
    for (int k = 0; k <= d.max_weight(); ++k) {
        terms.push_back(truncate_at_diagonal(d, k));
    }
    return terms;
}

std::vector<FiltrationLayer> filtration_layers(const Diagram &d)
{
    const DiagonalProfile profile = diagonal_profile(d);
    std::vector<FiltrationLayer> out;
    for (std::size_t w = 1; w < profile.size(); ++w) {
        FiltrationLayer layer;
        layer.level = static_cast<int>(w) - 1;
        layer.twists.assign(static_cast<std::size_t>(profile[w]), static_cast<int>(w));
        out.push_back(std::move(layer));
    }
    return out;
}

std::string to_string(const Monomial &m, const VariableList &vars)
{
    std::string out;
    for (std::size_t t = 0; t < m.size(); ++t) {
        if (m.exponents[t] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += vars.names()[t];
        if (m.exponents[t] > 1) {
            out += '^' + std::to_string(m.exponents[t]);
        }
    }
    return out.empty() ? "1" : out;
}

std::string to_string(const MonomialIdeal &ideal)
{
    if (ideal.is_zero()) {
        return "0";
    }
    std::string out;
    for (const Monomial &g : ideal.gens()) {
        if (!out.empty()) {
            out += ", ";
        }
        out += to_string(g, ideal.vars());
    }
    return out;
}

} // namespace mms
