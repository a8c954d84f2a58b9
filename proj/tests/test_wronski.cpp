#include "cherednik/wronski.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cherednik;

namespace {

Partition P(std::initializer_list<long long> parts) { return Partition::from_parts(parts); }

Rational coefficient(const MPoly &p, std::vector<std::pair<GenSym, int>> factors)
{
    return p.coefficient(Monomial{0, std::move(factors)});
}

} // namespace

TEST_CASE("schubert basis of 3,2")
{
    const auto basis = schubert_basis(P({3, 2}));
    REQUIRE(basis.polys.size() == 5);
    CHECK(to_string(basis.polys[0]) == "u^7 + u^6*f1,1 + u^4*f1,3 + u^3*f1,4");
    CHECK(to_string(basis.polys[1]) == "u^5 + u^4*f2,1 + u^3*f2,2");
    CHECK(basis.polys[2] == MPoly::u(2));
    CHECK(schubert_basis(Partition{}).polys.empty());
}

TEST_CASE("relations of 3,2")
{
    const auto w = wronski_relations(P({3, 2}));
    REQUIRE(w.relations.size() == 5);
    const GenSym f11{1, 1}, f13{1, 3}, f14{1, 4}, f21{2, 1}, f22{2, 2};
    CHECK(coefficient(w.relations[0], {{f11, 1}}) == 14400);
    CHECK(coefficient(w.relations[0], {{f21, 1}}) == 30240);
    CHECK(coefficient(w.relations[1], {{f11, 1}, {f21, 1}}) == 11520);
    CHECK(coefficient(w.relations[1], {{f22, 1}}) == 10080);
    CHECK(coefficient(w.relations[2], {{f13, 1}}) == -2880);
    CHECK(coefficient(w.relations[2], {{f11, 1}, {f22, 1}}) == 4320);
    CHECK(coefficient(w.relations[3], {{f14, 1}}) == -1440);
    CHECK(coefficient(w.relations[4], {{f14, 1}, {f21, 1}}) == -288);
    CHECK(coefficient(w.relations[4], {{f13, 1}, {f22, 1}}) == 288);
    CHECK(w.relations[0].size() + w.relations[1].size() + w.relations[2].size() + w.relations[3].size() +
              w.relations[4].size() ==
          9);
    CHECK(w.leading == 50400);
}

TEST_CASE("wronskian of monomials")
{
    // Wr(x^a_1, ..., x^a_n) = prod_{i<j} (a_j - a_i) x^{sum a - n(n-1)/2}
    const std::vector<int> exps{0, 2, 3, 7};
    std::vector<MPoly> polys;
    for (int e : exps)
        polys.push_back(MPoly::u(e));
    Rational c = 1;
    for (std::size_t i = 0; i < exps.size(); ++i)
        for (std::size_t j = i + 1; j < exps.size(); ++j)
            c *= exps[j] - exps[i];
    CHECK(wronskian(polys) == scale(MPoly::u(12 - 6), c));
    CHECK(wronskian_recursive(polys) == scale(MPoly::u(6), c));
}

TEST_CASE("recursive wronskian agrees with the determinant")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto &lambda : partitions_of(n)) {
            auto polys = schubert_basis(lambda).polys;
            std::reverse(polys.begin(), polys.end());
            const MPoly expected = wronskian(polys, Execution::serial);
            CHECK(wronskian_recursive(polys) == expected);
            CHECK(wronskian(polys, Execution::parallel) == expected);
        }
    }
}

TEST_CASE("relations are homogeneous of their index")
{
    for (int n = 1; n <= 6; ++n) {
        for (const auto &lambda : partitions_of(n)) {
            const auto w = wronski_relations(lambda);
            CHECK(w.leading != 0);
            for (std::size_t s = 0; s < w.relations.size(); ++s) {
                if (w.relations[s].is_zero())
                    continue;
                CHECK(weighted_degree(w.relations[s]) == static_cast<int>(s + 1));
            }
        }
    }
}
