#include "cherednik/error.hpp"
#include "cherednik/mpoly.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace cherednik;

namespace {

const GenSym a{1, 1};
const GenSym b{1, 2};
const GenSym c{2, 1};

// sum over permutations of sign * prod m(i, sigma(i))
MPoly permutation_determinant(const PolyMatrix &m)
{
    std::vector<std::size_t> sigma(m.rows());
    std::iota(sigma.begin(), sigma.end(), 0);
    MPoly total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < sigma.size(); ++i)
            for (std::size_t j = i + 1; j < sigma.size(); ++j)
                inversions += sigma[i] > sigma[j];
        MPoly term(inversions % 2 ? -1L : 1L);
        for (std::size_t i = 0; i < sigma.size(); ++i)
            term *= m(i, sigma[i]);
        total += term;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

MPoly random_poly(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> expo(0, 2);
    MPoly p;
    for (int t = 0; t < 3; ++t)
        p += scale(MPoly::u(expo(rng)) * MPoly::gen(a, expo(rng)) * MPoly::gen(c, expo(rng)), coeff(rng));
    return p;
}

} // namespace

TEST_CASE("ring arithmetic")
{
    const MPoly x = MPoly::gen(a);
    const MPoly y = MPoly::gen(b);
    CHECK((x + y) * (x - y) == pow(x, 2) - pow(y, 2));
    CHECK((x - x).is_zero());
    CHECK(to_string(scale(pow(x, 5), Rational(1, 2)) - MPoly::u(2)) == "1/2*f1,1^5 - u^2");
    CHECK(to_string(MPoly{}) == "0");
    CHECK(weighted_degree(x * y + MPoly::u(3)) == 3);
    CHECK(!weighted_degree(x + y).has_value());
    CHECK_THROWS_AS(weighted_degree(MPoly{}), Error);
}

TEST_CASE("u calculus")
{
    const MPoly p = MPoly::u(3) + scale(MPoly::gen(a) * MPoly::u(2), 2) + MPoly::gen(b);
    CHECK(d_du(p) == scale(MPoly::u(2), 3) + scale(MPoly::gen(a) * MPoly::u(1), 4));
    CHECK(u_degree(p) == 3);
    CHECK(u_degree(MPoly{}) == -1);
    CHECK(coefficient_of_u(p, 2) == scale(MPoly::gen(a), 2));
    CHECK(substitute(p, a, MPoly::gen(c)) == MPoly::u(3) + scale(MPoly::gen(c) * MPoly::u(2), 2) + MPoly::gen(b));

    const MPoly f = MPoly::u(2) + MPoly::gen(a) * MPoly::u(1) + MPoly::gen(b);
    const MPoly g = MPoly::u(1) - MPoly::gen(c);
    CHECK(divide_exact_in_u(f * g, f) == g);
    CHECK_THROWS_AS(divide_exact_in_u(f * g + MPoly::gen(c), f), Error);
}

TEST_CASE("determinant matches the permutation sum")
{
    std::mt19937 rng(7);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
            PolyMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    m(i, j) = random_poly(rng);
            const MPoly expected = permutation_determinant(m);
            CHECK(determinant(m, Execution::serial) == expected);
            CHECK(determinant(m, Execution::parallel) == expected);
        }
    }
    CHECK(determinant(PolyMatrix(0, 0)) == MPoly(1L));
    CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), Error);
}
