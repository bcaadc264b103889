#include <doctest.h>

#include "mms/errors.hpp"
#include "mms/hilbert.hpp"
#include "mms/ideal.hpp"
#include "mms/oracle.hpp"
#include "support.hpp"

using namespace mms;

namespace
{

Diagram dgm(std::initializer_list<int> parts)
{
    return partition_to_diagram(Partition(parts));
}

Rational q(long num, long den = 1)
{
    return Rational(Integer(num), Integer(den));
}

Integer factorial(int n)
{
    Integer f = 1;
    for (int k = 2; k <= n; ++k) {
        f *= k;
    }
    return f;
}

} // namespace

TEST_CASE("exact polynomials")
{
    const ExactPolynomial p{q(-11), q(9)};
    CHECK(p.degree() == 1);
    CHECK(p(q(6)) == q(43));
    CHECK(to_string(p) == "9*d - 11");
    CHECK(to_string(ExactPolynomial{}) == "0");
    CHECK(ExactPolynomial{q(0), q(0)}.is_zero());
    CHECK(ExactPolynomial::linear_root(q(3)) == ExactPolynomial{q(-3), q(1)});
    CHECK((p - p).is_zero());
    CHECK((p * p) == ExactPolynomial{q(121), q(-198), q(81)});
    CHECK(to_string(ExactPolynomial{q(0), q(1, 2), q(1, 2)}) == "1/2*d^2 + 1/2*d");
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(5, -1) == 0);
}

TEST_CASE("b polynomials")
{
    CHECK(b_poly(1, 0) == ExactPolynomial{q(1), q(1)});
    CHECK(b_poly(1, 3) == ExactPolynomial{q(-2), q(1)});
    CHECK(b_poly(2, 1) == ExactPolynomial{q(0), q(1, 2), q(1, 2)});
    CHECK(b_poly(0, 7) == ExactPolynomial::constant(q(1)));
    CHECK(b_poly(-1, 2).is_zero());
    CHECK_THROWS_AS(b_poly(-2, 0), InvalidRange);
    for (int n = 0; n <= 5; ++n) {
        for (int i = 0; i <= 6; ++i) {
            for (int d = i; d <= i + 8; ++d) {
                CHECK(b_poly(n, i)(q(d)) == Rational(binomial(n + d - i, n)));
            }
        }
    }
}

TEST_CASE("Hilbert polynomials of the two example structures")
{
    const ExactPolynomial expected{q(-11), q(9)};
    CHECK(hilbert_polynomial(dgm({5, 4}), 1) == expected);
    CHECK(hilbert_polynomial(dgm({6, 2, 1}), 1) == expected);
    for (int n = 0; n <= 4; ++n) {
        CHECK(hilbert_polynomial(dgm({1}), n) == b_poly(n, 0));
    }
    CHECK(hilbert_polynomial(Diagram(2), 2).is_zero());

    // Oracle interpolation of the actual standard-monomial counts.
    const VariableList s = VariableList::parse("x,y,z,w", 2);
    for (const Diagram &d : {dgm({5, 4}), dgm({6, 2, 1})}) {
        const auto table = oracle::degree_table(ideal_from_diagram(d, s), 9);
        CHECK(oracle::interpolate_polynomial(table, 6, 2) == expected);
    }
}

TEST_CASE("Hilbert function values")
{
    // Frozen from oracle counts in k[x,y,z,w].
    CHECK(hilbert_function(dgm({5, 4}), 1, 1) == 4);
    CHECK(hilbert_function(dgm({6, 2, 1}), 1, 1) == 4);
    CHECK(hilbert_function(dgm({5, 4}), 1, 2) == 9);
    CHECK(hilbert_function(dgm({6, 2, 1}), 1, 2) == 10);
    const VariableList s = VariableList::parse("x,y,z,w", 2);
    CHECK(oracle::standard_monomial_count(ideal_from_diagram(dgm({5, 4}), s), 1) == 4);
    CHECK(oracle::standard_monomial_count(ideal_from_diagram(dgm({6, 2, 1}), s), 1) == 4);
    CHECK(oracle::standard_monomial_count(ideal_from_diagram(dgm({5, 4}), s), 2) == 9);
    CHECK(oracle::standard_monomial_count(ideal_from_diagram(dgm({6, 2, 1}), s), 2) == 10);

    std::mt19937 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const Diagram d = testing::random_diagram(rng, 2, 1 + trial);
        for (int n = 0; n <= 3; ++n) {
            CHECK(hilbert_function(d, n, 0) == 1);
        }
    }
    CHECK(hilbert_function(Diagram(2), 1, 0) == 0);
    CHECK_THROWS_AS(hilbert_function(dgm({1}), 1, -1), InvalidRange);
}

TEST_CASE("Hilbert function matches brute-force counts")
{
    for (const Partition &p : testing::partitions_up_to(8)) {
        const Diagram d = partition_to_diagram(p);
        for (int n = 0; n <= 3; ++n) {
            const MonomialIdeal ideal = ideal_from_diagram(d, VariableList::standard(2, static_cast<std::size_t>(n + 1)));
            for (int deg = 0; deg <= 12; ++deg) {
                CHECK(hilbert_function(d, n, deg) == oracle::standard_monomial_count(ideal, deg));
            }
        }
    }
    std::mt19937 rng(2);
    for (int trial = 0; trial < 25; ++trial) {
        const Diagram d = testing::random_diagram(rng, 3, 10);
        const MonomialIdeal ideal = ideal_from_diagram(d, VariableList::standard(3, 2));
        for (int deg = 0; deg <= 10; ++deg) {
            CHECK(hilbert_function(d, 1, deg) == oracle::standard_monomial_count(ideal, deg));
        }
    }
}

TEST_CASE("Hilbert function agrees with the polynomial past the largest weight")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const Diagram d = testing::random_diagram(rng, 1 + trial % 3, 1 + trial % 13);
        for (int n = 0; n <= 3; ++n) {
            const ExactPolynomial hp = hilbert_polynomial(d, n);
            for (int deg = d.max_weight(); deg <= d.max_weight() + 6; ++deg) {
                CHECK(Rational(hilbert_function(d, n, deg)) == hp(q(deg)));
            }
            CHECK(hp.degree() == n);
            CHECK(hp.leading_coefficient() * Rational(factorial(n)) == q(multiplicity(d)));
        }
    }
}

TEST_CASE("multiplicity")
{
    CHECK(multiplicity(dgm({4, 4, 3, 1})) == 12);
    CHECK(multiplicity(Diagram(2)) == 0);
    CHECK(multiplicity(dgm({7, 7, 4, 2})) == 20);
}

TEST_CASE("structure decomposition")
{
    CHECK(structure_decomposition(dgm({2, 1}), 1).weights == std::vector<int>{0, 1, 1});
    CHECK(structure_decomposition(dgm({1}), 1).weights == std::vector<int>{0});
    CHECK(structure_decomposition(dgm({4, 1}), 1).weights == std::vector<int>{0, 1, 1, 2, 3});
    std::mt19937 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const Diagram d = testing::random_diagram(rng, 2 + trial % 2, 12);
        for (int n = 0; n <= 3; ++n) {
            const StructureDecomposition s = structure_decomposition(d, n);
            CHECK(s.rank() == d.size());
            CHECK(s.support_dim == n);
            CHECK(s.hilbert_polynomial() == hilbert_polynomial(d, n));
        }
    }
}

TEST_CASE("filtration layers rebuild the Hilbert polynomial")
{
    for (const Partition &p : testing::partitions_up_to(10)) {
        if (p.empty()) {
            continue;
        }
        const Diagram d = partition_to_diagram(p);
        for (int n = 0; n <= 3; ++n) {
            ExactPolynomial total = b_poly(n, 0);
            for (const FiltrationLayer &layer : filtration_layers(d)) {
                for (int twist : layer.twists) {
                    total += b_poly(n, twist);
                }
            }
            CHECK(total == hilbert_polynomial(d, n));
        }
    }
}

TEST_CASE("algebra multiplication")
{
    CHECK(algebra_multiply(dgm({2, 1}), Box{1, 0}, Box{0, 0}) == Box{1, 0});
    CHECK_FALSE(algebra_multiply(dgm({2, 1}), Box{1, 0}, Box{1, 0}).has_value());
    CHECK(algebra_multiply(dgm({2, 2}), Box{1, 0}, Box{0, 1}) == Box{1, 1});
    CHECK_THROWS_AS(algebra_multiply(dgm({2, 1}), Box{2, 0}, Box{0, 0}), BoxNotInDiagram);
    CHECK_THROWS_AS(algebra_multiply(dgm({2, 1}), Box{0, 0}, Box{0, 0, 0}), BoxNotInDiagram);
}

TEST_CASE("algebra multiplication is a commutative graded algebra with unit")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Diagram d = testing::random_diagram(rng, 2 + trial % 2, 1 + trial % 9);
        const Box unit(std::vector<int>(d.dim(), 0));
        auto mul = [&](const std::optional<Box> &a, const Box &b) -> std::optional<Box> {
            if (!a) {
                return std::nullopt;
            }
            return algebra_multiply(d, *a, b);
        };
        for (const Box &a : d) {
            CHECK(algebra_multiply(d, a, unit) == a);
            for (const Box &b : d) {
                const auto ab = algebra_multiply(d, a, b);
                CHECK(ab == algebra_multiply(d, b, a));
                if (ab) {
                    CHECK(box_weight(*ab) == box_weight(a) + box_weight(b));
                }
                for (const Box &c : d) {
                    const auto bc = algebra_multiply(d, b, c);
                    CHECK(mul(ab, c) == (bc ? algebra_multiply(d, a, *bc) : std::nullopt));
                }
            }
        }
    }
}

TEST_CASE("R equivalence")
{
    CHECK(R_equivalent(dgm({3, 1}), dgm({2, 2})));
    CHECK_FALSE(R_equivalent(dgm({5, 4}), dgm({6, 2, 1})));
    CHECK(R_equivalent(dgm({6, 2, 1}), dgm({6, 2, 1})));
    CHECK_THROWS_AS(R_equivalent(dgm({1}), Diagram(3)), DimensionError);

    const auto all = testing::partitions_up_to(8);
    for (const Partition &a : all) {
        for (const Partition &b : all) {
            const Diagram da = partition_to_diagram(a);
            const Diagram db = partition_to_diagram(b);
            if (R_equivalent(da, db)) {
                CHECK(R_equivalent(db, da));
                for (int n = 0; n <= 3; ++n) {
                    CHECK(hilbert_polynomial(da, n) == hilbert_polynomial(db, n));
                    CHECK(hilbert_function(da, n, 3) == hilbert_function(db, n, 3));
                }
            }
        }
    }
}
