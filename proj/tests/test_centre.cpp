#include "cherednik/centre.hpp"

#include <doctest.h>

using namespace cherednik;

namespace {

Partition P(std::initializer_list<long long> parts) { return Partition::from_parts(parts); }

} // namespace

TEST_CASE("symmetric group S_2")
{
    const auto c = centre_presentation(2, 1, true);
    REQUIRE(c.blocks.size() == 2);
    for (const auto &b : c.blocks) {
        CHECK(to_string(b.plus) == "C");
        CHECK(to_string(b.minus) == "C");
        CHECK(b.dimension == 1);
    }
    CHECK(c.total_dimension == 2);
    CHECK(centre_dimension(3, 1) == 6);
}

TEST_CASE("wreath product S_2 wr Z/2")
{
    const auto c = centre_presentation(2, 2, true);
    CHECK(c.blocks.size() == 5);
    CHECK(c.total_dimension == 8);
    int nontrivial = 0;
    for (const auto &b : c.blocks) {
        if (b.dimension == 1)
            continue;
        ++nontrivial;
        CHECK(b.label == ell_quotient(P({2, 2}), 2));
        CHECK(b.dimension == 4);
        CHECK(to_string(b.plus) == "C[f1,2] / (f1,2^2)");
        CHECK(to_string(b.minus) == "C[g1,2] / (g1,2^2)");
        CHECK(b.plus.generators[0].degree == 2);
        CHECK(b.minus.generators[0].degree == -2);
    }
    CHECK(nontrivial == 1);
}

TEST_CASE("degenerate and single blocks")
{
    CHECK(centre_dimension(0, 1) == 1);
    CHECK(centre_dimension(0, 3) == 1);
    CHECK(block(P({2}), true).dimension == 1);
    CHECK(block(Partition{}, false).dimension == 1);
    const auto b = block(ell_quotient(P({2, 2}), 2), 2, true);
    CHECK(b.plus_series.total() == 2);
    CHECK(b.minus_series.total() == 2);
    CHECK_THROWS(block(MultiPartition{{P({1})}}, 2, true));
}

TEST_CASE("block structure")
{
    for (int ell = 1; ell <= 3; ++ell) {
        for (int n = 0; n * ell <= 8 && n <= 4; ++n) {
            const auto c = centre_presentation(n, ell, false);
            CHECK(c.blocks.size() == (ell == 1 ? partitions_of(n).size() : multipartitions_of(n, ell).size()));
            Integer total = 0;
            for (const auto &b : c.blocks) {
                CHECK(b.minus.orientation == Orientation::negative);
                CHECK(b.minus.prefix == 'g');
                auto expected = ell == 1 ? negate_grading(b.plus)
                                         : negate_grading(wreath_presentation(star_involution(b.label), ell));
                expected.prefix = 'g';
                CHECK(b.minus == expected);
                CHECK(b.dimension == b.plus_series.total() * b.minus_series.total());
                total += b.dimension;
            }
            CHECK(c.total_dimension == total);
        }
    }
}

TEST_CASE("dimension sums")
{
    for (int n = 0; n <= 7; ++n) {
        Integer expected = 0;
        for (const auto &lambda : partitions_of(n)) {
            const Integer d = dimension_hook_formula(lambda);
            expected += d * d;
        }
        CHECK(centre_dimension(n, 1, Execution::parallel) == expected);
    }
}

TEST_CASE("parallel assembly is deterministic")
{
    for (int ell = 1; ell <= 3; ++ell) {
        const auto s = centre_presentation(3, ell, true, Execution::serial);
        const auto p = centre_presentation(3, ell, true, Execution::parallel);
        REQUIRE(s.blocks.size() == p.blocks.size());
        for (std::size_t i = 0; i < s.blocks.size(); ++i) {
            CHECK(s.blocks[i].label == p.blocks[i].label);
            CHECK(s.blocks[i].plus == p.blocks[i].plus);
            CHECK(s.blocks[i].minus == p.blocks[i].minus);
            CHECK(s.blocks[i].dimension == p.blocks[i].dimension);
        }
    }
}
