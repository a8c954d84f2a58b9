#pragma once

// Exact multivariate polynomials over Q in one distinguished variable u and
// graded symbols f_{i,j} (GenSym), with deg u = 1 and deg f_{i,j} = j.

#include "cherednik/execution.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cherednik {

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational &q); // "p/q" or "p"

struct GenSym {
    int row = 1;
    int degree = 1;

    friend auto operator<=>(const GenSym &, const GenSym &) = default;
};

struct Monomial {
    int u = 0;
    std::vector<std::pair<GenSym, int>> factors; // sorted by GenSym, exponents > 0

    int weighted_degree() const noexcept;
    int exponent(const GenSym &g) const noexcept;
    bool is_constant() const noexcept { return u == 0 && factors.empty(); }

    friend bool operator==(const Monomial &, const Monomial &) = default;
};

Monomial operator*(const Monomial &a, const Monomial &b);

// Graded lexicographic: higher weighted degree first, then by exponent of u,
// then by exponents of the GenSyms taken in increasing (row, degree) order.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const noexcept;
};

class MPoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    MPoly() = default;
    MPoly(const Rational &c); // NOLINT: constants convert implicitly
    MPoly(long c) : MPoly(Rational(c)) {}

    static MPoly u(int power = 1);
    static MPoly gen(GenSym g, int power = 1);
    static MPoly term(const Rational &c, Monomial m);

    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const Monomial &m) const;

    MPoly &operator+=(const MPoly &o);
    MPoly &operator-=(const MPoly &o);
    MPoly &operator*=(const MPoly &o) { return *this = *this * o; }
    MPoly &operator*=(const Rational &c);

    friend MPoly operator+(MPoly a, const MPoly &b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly &b) { return a -= b; }
    friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
    friend MPoly operator*(const MPoly &a, const MPoly &b);
    friend MPoly operator*(MPoly a, const Rational &c) { return a *= c; }
    friend MPoly operator*(const Rational &c, MPoly a) { return a *= c; }
    friend bool operator==(const MPoly &a, const MPoly &b) { return a.terms_ == b.terms_; }

    // Adds c * m without normalising the rest of the polynomial.
    void add_term(const Monomial &m, const Rational &c);

private:
    Terms terms_;
};

MPoly scale(const MPoly &p, const Rational &c);
MPoly pow(const MPoly &p, int k);

MPoly d_du(const MPoly &p);

// Degree in u; -1 for the zero polynomial.
int u_degree(const MPoly &p);

// Common weighted degree, or nullopt when p is inhomogeneous.
// Throws ZeroPolynomial on p = 0.
std::optional<int> weighted_degree(const MPoly &p);

// The coefficient of u^k as a polynomial in the GenSyms alone.
MPoly coefficient_of_u(const MPoly &p, int k);

// p with g replaced by value.
MPoly substitute(const MPoly &p, const GenSym &g, const MPoly &value);

// Exact division in u by a divisor whose leading coefficient in u is a
// non-zero rational. Throws InexactDivision on a non-zero remainder or an
// unsupported divisor.
MPoly divide_exact_in_u(const MPoly &p, const MPoly &divisor);

// Canonical text: terms in monomial order, GenSyms printed "<prefix>i,j".
std::string to_string(const MPoly &p, char prefix = 'f');
std::string to_string(const Monomial &m, char prefix = 'f');

class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    MPoly &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const MPoly &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<MPoly> entries_;
};

inline constexpr std::size_t max_determinant_size = 20;

// Laplace expansion over column subsets with a memo of all 2^n minors built on
// the leading rows. The parallel path evaluates each subset-size level with
// OpenMP. Throws NonSquare; sizes above max_determinant_size are rejected.
MPoly determinant(const PolyMatrix &m, Execution exec = Execution::serial);

} // namespace cherednik
