#include "cherednik/error.hpp"
#include "cherednik/partition.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cherednik;

namespace {

Partition P(std::initializer_list<long long> parts) { return Partition::from_parts(parts); }

// arm + leg + 1 by walking the diagram
int hook_by_counting(const Partition &lambda, Cell c)
{
    int h = 1;
    for (int j = c.col + 1; lambda.contains({c.row, j}); ++j)
        ++h;
    for (int i = c.row + 1; lambda.contains({i, c.col}); ++i)
        ++h;
    return h;
}

ErrorKind kind_of(auto &&f)
{
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::ParseError;
}

} // namespace

TEST_CASE("make_partition normalises and validates")
{
    const std::vector<long long> raw{3, 2, 0, 0};
    CHECK(make_partition(raw) == P({3, 2}));
    CHECK(make_partition(std::vector<long long>{}).empty());
    CHECK(kind_of([] { make_partition(std::vector<long long>{2, 3}); }) == ErrorKind::NotWeaklyDecreasing);
    CHECK(kind_of([] { make_partition(std::vector<long long>{2, -1}); }) == ErrorKind::NegativePart);
}

TEST_CASE("hook lengths")
{
    CHECK(hook_length(P({3, 2, 1, 1}), {1, 1}) == 6);
    CHECK(hook_length(P({3, 1}), {1, 1}) == 4);
    CHECK(hook_length(P({1}), {1, 1}) == 1);
    CHECK(kind_of([] { hook_length(P({2}), {2, 1}); }) == ErrorKind::CellOutOfDiagram);

    CHECK(first_column_hooks(P({3, 2, 1, 1})) == std::vector<int>{6, 4, 2, 1});
    CHECK(first_column_hooks(P({4, 2, 2})) == std::vector<int>{6, 3, 2});
    CHECK(first_column_hooks(Partition{}).empty());
}

TEST_CASE("beta sets and row hook sets")
{
    CHECK(beta_set(P({3, 2}), 5).values == std::vector<int>{7, 5, 2, 1, 0});
    CHECK(beta_set(Partition{}, 3).values == std::vector<int>{2, 1, 0});
    CHECK(beta_set(P({1, 1, 1, 1}), 4).values == std::vector<int>{4, 3, 2, 1});
    CHECK(kind_of([] { beta_set(P({1, 1, 1}), 2); }) == ErrorKind::PadTooShort);

    CHECK(row_hook_set(P({3, 2}), 1) == std::vector<int>{4, 3, 1});
    CHECK(row_hook_set(P({3, 2}), 2) == std::vector<int>{2, 1});
    CHECK(row_hook_set(P({1}), 1) == std::vector<int>{1});
    CHECK(kind_of([] { row_hook_set(P({1}), 2); }) == ErrorKind::RowOutOfRange);
}

TEST_CASE("transpose and enumeration")
{
    CHECK(transpose(P({3, 2})) == P({2, 2, 1}));
    CHECK(transpose(P({4})) == P({1, 1, 1, 1}));
    CHECK(transpose(P({2, 2})) == P({2, 2}));

    CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
    CHECK(partitions_of(4) == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
    CHECK(partitions_of(6).size() == 11);
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n)
        CHECK(partitions_of(n).size() == p[static_cast<std::size_t>(n)]);
}

TEST_CASE("hook identities on every partition up to 12")
{
    for (int n = 0; n <= 12; ++n) {
        for (const auto &lambda : partitions_of(n)) {
            const auto d = beta_set(lambda, n).values;
            CHECK(std::adjacent_find(d.begin(), d.end(), std::less_equal<>()) == d.end());
            std::multiset<int> hooks;
            for (int i = 1; i <= lambda.length(); ++i) {
                std::vector<int> row;
                for (int j = 1; j <= lambda.part(i); ++j) {
                    const int h = hook_length(lambda, {i, j});
                    REQUIRE(h == hook_by_counting(lambda, {i, j}));
                    row.push_back(h);
                    hooks.insert(h);
                    // cells sharing a column share d_i - h(i,j)
                    for (int k = i + 1; k <= lambda.length() && lambda.contains({k, j}); ++k)
                        CHECK(d[static_cast<std::size_t>(i - 1)] - h ==
                              d[static_cast<std::size_t>(k - 1)] - hook_length(lambda, {k, j}));
                }
                std::sort(row.begin(), row.end(), std::greater<>());
                const auto set = row_hook_set(lambda, i);
                CHECK(static_cast<int>(set.size()) == lambda.part(i));
                CHECK(set == row);
            }
            const auto t = transpose(lambda);
            CHECK(transpose(t) == lambda);
            std::multiset<int> thooks;
            for (const Cell &c : t.cells())
                thooks.insert(hook_length(t, c));
            CHECK(thooks == hooks);
        }
    }
}

TEST_CASE("beta sets recover their partition")
{
    for (int n = 0; n <= 8; ++n)
        for (const auto &lambda : partitions_of(n))
            CHECK(partition_from_beta(beta_set(lambda, n + 2).values) == lambda);
}

TEST_CASE("text form")
{
    CHECK(to_string(P({3, 2})) == "3,2");
    CHECK(to_string(Partition{}) == "-");
    CHECK(parse_partition("3,2") == P({3, 2}));
    CHECK(parse_partition("-").empty());
    CHECK(kind_of([] { parse_partition("3,x"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_partition("1,2"); }) == ErrorKind::NotWeaklyDecreasing);
}
