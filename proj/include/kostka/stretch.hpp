#pragma once

// Stretched Kostka coefficients: dilation counting, exact interpolation by
// Newton forward differences, the formula-based degree, and the
// factorization / positivity cross-checks.

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "kostka/gt.hpp"
#include "kostka/tiling.hpp"
#include "kostka/weights.hpp"

namespace kostka {

/// Univariate polynomial with exact rational coefficients, constant term
/// first.  The zero polynomial is the empty coefficient list.
class RationalPolynomial {
public:
    RationalPolynomial() = default;

    explicit RationalPolynomial(std::vector<mpq_class> coefficients)
        : coefficients_(std::move(coefficients)) {
        while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
    }

    static RationalPolynomial constant(const mpq_class& c) { return RationalPolynomial({c}); }

    bool is_zero() const { return coefficients_.empty(); }

    std::size_t degree() const {
        if (is_zero()) throw std::logic_error("degree of the zero polynomial is undefined");
        return coefficients_.size() - 1;
    }

    const std::vector<mpq_class>& coefficients() const { return coefficients_; }

    mpq_class evaluate(const mpq_class& n) const {
        mpq_class value = 0;
        for (std::size_t k = coefficients_.size(); k-- > 0;) {
            value = value * n + coefficients_[k];
        }
        return value;
    }

    RationalPolynomial operator*(const RationalPolynomial& other) const {
        if (is_zero() || other.is_zero()) return {};
        std::vector<mpq_class> product(coefficients_.size() + other.coefficients_.size() - 1, 0);
        for (std::size_t a = 0; a < coefficients_.size(); ++a) {
            for (std::size_t b = 0; b < other.coefficients_.size(); ++b) {
                product[a + b] += coefficients_[a] * other.coefficients_[b];
            }
        }
        return RationalPolynomial(std::move(product));
    }

    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    /// "a_d n^d + ... + a_0", rational coefficients as p/q.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = coefficients_.size(); k-- > 0;) {
            const mpq_class& c = coefficients_[k];
            if (c == 0) continue;
            const bool negative = c < 0;
            const mpq_class magnitude = negative ? mpq_class(-c) : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            const bool unit = magnitude == 1;
            if (!unit || k == 0) out += magnitude.get_str();
            if (k > 0) {
                if (!unit) out += ' ';
                out += 'n';
                if (k > 1) out += '^' + std::to_string(k);
            }
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) {
        return os << p.to_string();
    }

private:
    std::vector<mpq_class> coefficients_;
};

/// [K(n lambda, n beta)] for n = 1..N.
inline std::vector<mpz_class> stretched_values(const Partition& lambda, const Composition& beta,
                                               long max_n) {
    if (max_n < 1) throw std::invalid_argument("sample count must be at least 1");
    std::vector<mpz_class> values;
    values.reserve(static_cast<std::size_t>(max_n));
    for (long n = 1; n <= max_n; ++n) {
        values.push_back(count_lattice_points(lambda.scaled(n), beta.scaled(n)));
    }
    return values;
}

/// The unique polynomial of degree <= N-2 through (n, values[n-1]) for
/// n = 1..N-1, computed by Newton forward differences over exact
/// rationals; the last value is a spare point that must land on the
/// polynomial, otherwise the data needs a higher degree.
inline RationalPolynomial interpolate(const std::vector<mpz_class>& values) {
    const std::size_t n = values.size();
    if (n < 2) {
        throw std::invalid_argument("interpolate needs at least two values (one spare point)");
    }

    std::vector<mpq_class> table(values.begin(), values.end());
    std::vector<mpq_class> leading;  // k-th forward difference at the first sample
    leading.reserve(n);
    leading.push_back(table[0]);
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i + k < n; ++i) table[i] = table[i + 1] - table[i];
        leading.push_back(table[0]);
    }
    if (leading[n - 1] != 0) {
        throw std::invalid_argument("degree overflow: the spare point is off the interpolant");
    }

    // sum_k leading[k] * C(n-1, k), expanded in the monomial basis
    std::vector<mpq_class> coefficients(n - 1, 0);
    std::vector<mpq_class> basis = {1};  // C(n-1, k) as a polynomial in n
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = 0; i < basis.size(); ++i) coefficients[i] += leading[k] * basis[i];
        // next basis polynomial: previous * (n - 1 - k) / (k + 1)
        std::vector<mpq_class> next(basis.size() + 1, 0);
        const mpq_class shift = -static_cast<long>(k) - 1;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] += basis[i] * shift;
        }
        for (mpq_class& c : next) c /= static_cast<long>(k) + 1;
        basis = std::move(next);
    }
    return RationalPolynomial(std::move(coefficients));
}

/// Formula-based degree of n -> K(n lambda, n beta); no counting involved.
inline long degree_stretched(const Partition& lambda, const Composition& beta) {
    return dim_gt_polytope(lambda, beta);
}

/// The polynomial n -> K(n lambda, n beta), interpolated from the minimal
/// sample 1..deg+2 and required to have exactly the formula degree.
inline RationalPolynomial stretched_polynomial(const Partition& lambda, const Composition& beta) {
    const long degree = dim_gt_polytope(lambda, beta);
    const std::vector<mpz_class> values = stretched_values(lambda, beta, degree + 2);
    RationalPolynomial polynomial = interpolate(values);
    if (polynomial.is_zero() || polynomial.degree() != static_cast<std::size_t>(degree)) {
        throw std::logic_error("interpolated degree disagrees with the dimension formula");
    }
    return polynomial;
}

/// Checks the product identity over the primitive decomposition,
/// coefficient by coefficient.
inline bool factorization_check(const Partition& lambda, const Composition& beta) {
    const RationalPolynomial whole = stretched_polynomial(lambda, beta);
    RationalPolynomial product = RationalPolynomial::constant(1);
    for (const PrimitivePair& piece : primitive_decomposition(lambda, beta).pairs) {
        product = product * stretched_polynomial(piece.lambda, piece.beta.as_composition());
    }
    return whole == product;
}

/// Every coefficient nonnegative (the positivity conjecture surface).
inline bool positivity_check(const RationalPolynomial& polynomial) {
    for (const mpq_class& c : polynomial.coefficients()) {
        if (c < 0) return false;
    }
    return true;
}

}  // namespace kostka
