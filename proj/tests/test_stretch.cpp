#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "kostka/stretch.hpp"
#include "support.hpp"

using kostka::Composition;
using kostka::Partition;
using kostka::RationalPolynomial;

TEST_CASE("stretched value tables") {
    CHECK(kostka::stretched_values(Partition({2, 1, 0}), Composition({1, 1, 1}), 4) ==
          std::vector<mpz_class>{2, 3, 4, 5});
    CHECK(kostka::stretched_values(Partition({4, 2, 1}), Composition({3, 3, 1}), 3) ==
          std::vector<mpz_class>{1, 1, 1});
    CHECK(kostka::stretched_values(Partition({3, 1}), Composition({3, 1}), 3) ==
          std::vector<mpz_class>{1, 1, 1});
}

TEST_CASE("interpolation by forward differences") {
    const RationalPolynomial line = kostka::interpolate({2, 3, 4, 5});
    CHECK(line.coefficients() == std::vector<mpq_class>{1, 1});
    CHECK(line.to_string() == "n + 1");

    const RationalPolynomial constant = kostka::interpolate({1, 1, 1});
    CHECK(constant.coefficients() == std::vector<mpq_class>{1});

    CHECK_THROWS_AS(kostka::interpolate({7}), std::invalid_argument);  // no spare point
    CHECK_THROWS_AS(kostka::interpolate({1, 2, 4}), std::invalid_argument);  // degree overflow

    const RationalPolynomial squares = kostka::interpolate({1, 4, 9, 16, 25});
    CHECK(squares.coefficients() == std::vector<mpq_class>{0, 0, 1});
    CHECK(squares.evaluate(12) == 144);
}

TEST_CASE("polynomial arithmetic and formatting") {
    const RationalPolynomial p({1, 2});       // 2n + 1
    const RationalPolynomial q({-1, 0, 1});   // n^2 - 1
    CHECK((p * q).coefficients() == std::vector<mpq_class>{-1, -2, 1, 2});
    CHECK((p * RationalPolynomial()).is_zero());
    CHECK(q.to_string() == "n^2 - 1");
    CHECK(RationalPolynomial({mpq_class(1, 2), mpq_class(-3, 4)}).to_string() == "-3/4 n + 1/2");
    CHECK(RationalPolynomial().to_string() == "0");
    CHECK_THROWS_AS(RationalPolynomial().degree(), std::logic_error);
    CHECK(RationalPolynomial({0, 0, 0}).is_zero());  // trailing zeros trimmed
}

TEST_CASE("stretched polynomials of the worked pairs") {
    const RationalPolynomial adjoint =
        kostka::stretched_polynomial(Partition({2, 1, 0}), Composition({1, 1, 1}));
    CHECK(adjoint.coefficients() == std::vector<mpq_class>{1, 1});
    CHECK(kostka::degree_stretched(Partition({2, 1, 0}), Composition({1, 1, 1})) == 1);
    CHECK(kostka::degree_formula(Partition({2, 1, 0})) == 1);

    const RationalPolynomial footnote =
        kostka::stretched_polynomial(Partition({4, 2, 1}), Composition({3, 3, 1}));
    CHECK(footnote == RationalPolynomial::constant(1));
    CHECK(kostka::degree_stretched(Partition({4, 2, 1}), Composition({3, 3, 1})) == 0);

    const RationalPolynomial example =
        kostka::stretched_polynomial(Partition({4, 2, 2, 0, 0, 0}), Composition({3, 1, 1, 1, 1, 1}));
    CHECK(example.degree() == 6);
    // frozen from the interpolation of the exact counts 10, 55, 210, ...
    CHECK(example.coefficients() ==
          std::vector<mpq_class>{1, mpq_class(11, 4), mpq_class(229, 72), mpq_class(25, 12),
                                 mpq_class(29, 36), mpq_class(1, 6), mpq_class(1, 72)});
}

TEST_CASE("degrees of equal weights vanish") {
    CHECK(kostka::degree_stretched(Partition({3, 2, 2, 1}), Composition({3, 2, 2, 1})) == 0);
}

TEST_CASE("stretched polynomial requires dominance") {
    CHECK_THROWS_AS(kostka::stretched_polynomial(Partition({2, 1, 0}), Composition({3, 0, 0})),
                    std::domain_error);
    CHECK_THROWS_AS(kostka::degree_stretched(Partition({2, 1, 0}), Composition({3, 0, 0})),
                    std::domain_error);
}

TEST_CASE("factorization of stretched polynomials") {
    CHECK(kostka::factorization_check(Partition({4, 2, 1}), Composition({3, 3, 1})));
    CHECK(kostka::factorization_check(Partition({4, 2, 2, 0, 0, 0}), Composition({3, 1, 1, 1, 1, 1})));
    CHECK(kostka::factorization_check(Partition({2, 1}), Composition({2, 1})));
    CHECK(kostka::factorization_check(Partition({3, 2, 1, 0}), Composition({2, 2, 1, 1})));
}

TEST_CASE("positivity check") {
    CHECK(kostka::positivity_check(RationalPolynomial({1, 1})));
    CHECK(kostka::positivity_check(RationalPolynomial::constant(1)));
    CHECK_FALSE(kostka::positivity_check(RationalPolynomial({-1, 1})));
    CHECK(kostka::positivity_check(RationalPolynomial()));
}

TEST_CASE("interpolated degree equals the formula degree over the sweep corpus") {
    for (std::size_t r = 1; r <= 5; ++r) {
        for (long size = 0; size <= 7; ++size) {
            const auto lambdas = testsupport::partitions_with(size, r);
            for (const Partition& lambda : lambdas) {
                for (const Partition& beta : lambdas) {
                    if (!kostka::dominates(lambda, beta.as_composition())) continue;
                    const long degree = kostka::degree_stretched(lambda, beta.as_composition());
                    const RationalPolynomial p =
                        kostka::stretched_polynomial(lambda, beta.as_composition());
                    CHECK(static_cast<long>(p.degree()) == degree);
                }
            }
        }
    }
}

TEST_CASE("coefficients have denominators dividing degree factorial and reproduce the counts") {
    const Partition lambda({3, 1, 0});
    const Composition beta({2, 1, 1});
    const RationalPolynomial p = kostka::stretched_polynomial(lambda, beta);
    mpz_class factorial = 1;
    for (std::size_t k = 2; k <= p.degree(); ++k) factorial *= k;
    for (const mpq_class& c : p.coefficients()) {
        CHECK(factorial % c.get_den() == 0);
    }
    const auto values = kostka::stretched_values(lambda, beta, 6);
    for (long n = 1; n <= 6; ++n) {
        CHECK(p.evaluate(n) == values[static_cast<std::size_t>(n - 1)]);
    }
}

TEST_CASE("stretched polynomial is stable under permutations of beta") {
    const Partition lambda({3, 1, 0});
    std::vector<long> beta{2, 1, 1};
    const RationalPolynomial reference = kostka::stretched_polynomial(lambda, Composition({2, 1, 1}));
    std::sort(beta.begin(), beta.end());
    do {
        CHECK(kostka::stretched_polynomial(lambda, Composition(beta)) == reference);
    } while (std::next_permutation(beta.begin(), beta.end()));
}
