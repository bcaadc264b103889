#include "mms/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "mms/errors.hpp"

namespace mms::oracle
{

namespace
{

Integer monomials_of_degree(std::size_t vars, int d)
{
    if (vars == 0) {
        return d == 0 ? 1 : 0;
    }
    return binomial(d + static_cast<long>(vars) - 1, static_cast<long>(vars) - 1);
}

bool divisible_by_some(const std::vector<Monomial> &gens, const std::vector<int> &e)
{
    for (const Monomial &g : gens) {
        bool divides = true;
        for (std::size_t t = 0; t < e.size() && divides; ++t) {
            divides = g.exponents[t] <= e[t];
        }
        if (divides) {
            return true;
        }
    }
    return false;
}

} // namespace

std::int64_t standard_monomial_count(const MonomialIdeal &ideal, int d, std::uint64_t cap)
{
    if (d < 0) {
        throw InvalidRange("degree must be non-negative, got " + std::to_string(d));
    }
    const std::size_t nvars = ideal.vars().size();
    if (monomials_of_degree(nvars, d) > Integer(static_cast<unsigned long>(cap))) {
        throw ResourceLimit("degree " + std::to_string(d) + " in " + std::to_string(nvars)
                            + " variables has more than " + std::to_string(cap) + " monomials");
    }
    const std::vector<Monomial> &gens = ideal.gens();
    std::vector<int> e(nvars, 0);
    std::int64_t count = 0;
    std::function<void(std::size_t, int)> walk = [&](std::size_t t, int remaining) {
        if (t + 1 == nvars) {
            e[t] = remaining;
            if (!divisible_by_some(gens, e)) {
                ++count;
            }
            return;
        }
        for (int c = 0; c <= remaining; ++c) {
            e[t] = c;
            walk(t + 1, remaining - c);
        }
    };
    if (nvars == 0) {
        return d == 0 && !divisible_by_some(gens, e) ? 1 : 0;
    }
    walk(0, d);
    return count;
}

DegreeTable degree_table(const MonomialIdeal &ideal, int max_d, std::uint64_t cap)
{
    DegreeTable table;
    for (int d = 0; d <= max_d; ++d) {
        table.values.push_back(standard_monomial_count(ideal, d, cap));
    }
    return table;
}

ExactPolynomial interpolate_polynomial(const DegreeTable &table, int start, int degree_bound)
{
    if (start < 0 || degree_bound < 0) {
        throw InvalidRange("interpolation needs start >= 0 and degree_bound >= 0");
    }
    const auto needed = static_cast<std::size_t>(start) + static_cast<std::size_t>(degree_bound) + 2;
    if (table.values.size() < needed) {
        throw InvalidRange("interpolation of degree " + std::to_string(degree_bound) + " from d="
                           + std::to_string(start) + " needs values up to d=" + std::to_string(needed - 1));
    }
    // Lagrange form, expanded.
    ExactPolynomial result;
    for (int a = 0; a <= degree_bound; ++a) {
        ExactPolynomial basis = ExactPolynomial::constant(1);
        Rational denom = 1;
        for (int b = 0; b <= degree_bound; ++b) {
            if (b == a) {
                continue;
            }
            basis *= ExactPolynomial::linear_root(Rational(start + b));
            denom *= a - b;
        }
        const Rational y(static_cast<long>(table.values[static_cast<std::size_t>(start + a)]));
        result += basis * Rational(y / denom);
    }
    const int check = start + degree_bound + 1;
    const Rational expected(static_cast<long>(table.values[static_cast<std::size_t>(check)]));
    if (result(Rational(check)) != expected) {
        throw InconsistentValues("values from d=" + std::to_string(start) + " do not fit a polynomial of degree <= "
                                 + std::to_string(degree_bound) + " (check at d=" + std::to_string(check) + ")");
    }
    return result;
}

int stabilization_bound(const MonomialIdeal &ideal)
{
    int bound = 0;
    for (const Monomial &g : ideal.gens()) {
        bound += g.degree();
    }
    return bound;
}

bool k_polynomial_check(const Diagram &d2, const DegreePair &p)
{
    if (d2.dim() != 2) {
        throw DimensionError("k_polynomial_check needs a 2-dimensional diagram");
    }
    int extent = 0;
    for (const Box &b : d2) {
        extent = std::max({extent, b[0] + 1, b[1] + 1});
    }
    std::map<int, long> h;
    for (int a = 0; a < extent; ++a) {
        for (int b = 0; b < extent; ++b) {
            if (d2.contains(Box{a, b})) {
                ++h[a + b];
            }
        }
    }
    // h(t) * (1 - t)^2 = h(t) - 2 t h(t) + t^2 h(t)
    std::map<int, long> lhs;
    for (const auto &[e, c] : h) {
        lhs[e] += c;
        lhs[e + 1] -= 2 * c;
        lhs[e + 2] += c;
    }
    std::map<int, long> rhs;
    rhs[0] += 1;
    for (int g : p.gen_degrees) {
        rhs[g] -= 1;
    }
    for (int s : p.syz_degrees) {
        rhs[s] += 1;
    }
    auto strip = [](std::map<int, long> &m) { std::erase_if(m, [](const auto &kv) { return kv.second == 0; }); };
    strip(lhs);
    strip(rhs);
    return lhs == rhs;
}

std::optional<int> first_count_mismatch(const MonomialIdeal &a, const MonomialIdeal &b, int from, int to,
                                        std::uint64_t cap)
{
    if (a.vars() != b.vars()) {
        throw VariableMismatch("ideals live in different rings");
    }
    for (int d = from; d <= to; ++d) {
        if (standard_monomial_count(a, d, cap) != standard_monomial_count(b, d, cap)) {
            return d;
        }
    }
    return std::nullopt;
}

} // namespace mms::oracle
