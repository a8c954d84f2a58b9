#pragma once

// Integer partitions, Young-diagram cells and hook lengths.
//
// Rows and columns are 1-based on every interface. The "leg" used in the hook
// formula is the full length of the cell's column, so
//     h(i, j) = lambda_i - j + L_j - i + 1.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell &, const Cell &) = default;
};

class Partition {
public:
    Partition() = default;

    // Validates and strips trailing zeros. Throws NegativePart or
    // NotWeaklyDecreasing.
    static Partition from_parts(std::span<const long long> parts);
    static Partition from_parts(std::initializer_list<long long> parts)
    {
        return from_parts(std::span<const long long>(parts.begin(), parts.size()));
    }

    const std::vector<int> &parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }

    // 1-based; zero past the last row.
    int part(int row) const noexcept
    {
        return row >= 1 && row <= length() ? parts_[static_cast<std::size_t>(row - 1)] : 0;
    }

    // Number of cells in column `col` (1-based).
    int column_length(int col) const noexcept;
    bool contains(Cell c) const noexcept
    {
        return c.row >= 1 && c.row <= length() && c.col >= 1 && c.col <= part(c.row);
    }

    // Cells in row-major order.
    std::vector<Cell> cells() const;

    friend bool operator==(const Partition &, const Partition &) = default;
    friend auto operator<=>(const Partition &a, const Partition &b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition make_partition(std::span<const long long> parts);

struct BetaSet {
    std::vector<int> values; // strictly decreasing
};

int hook_length(const Partition &lambda, Cell c);
std::vector<int> first_column_hooks(const Partition &lambda);

// d_i = lambda_i + n - i for i = 1..n. Throws PadTooShort if n < length.
BetaSet beta_set(const Partition &lambda, int n);

// {j : 1 <= j <= d_i, d_i - j not in P} with d, P taken at n = |lambda|;
// returned in decreasing order, which is the left-to-right order of the hooks
// in row i.
std::vector<int> row_hook_set(const Partition &lambda, int row);

Partition transpose(const Partition &lambda);

// Reverse lexicographic: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> partitions_of(int n);

// Recovers a partition from any beta-set (any number of beads).
Partition partition_from_beta(std::vector<int> beta);

// "3,2" ; the empty partition is "-".
std::string to_string(const Partition &lambda);
Partition parse_partition(std::string_view text);

} // namespace cherednik
