#include "cherednik/partition.hpp"

#include "cherednik/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

namespace cherednik {

Partition Partition::from_parts(std::span<const long long> parts)
{
    Partition p;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw Error(ErrorKind::NegativePart, "part " + std::to_string(parts[i]) + " is negative");
        if (i > 0 && parts[i] > parts[i - 1])
            throw Error(ErrorKind::NotWeaklyDecreasing,
                        "part " + std::to_string(i + 1) + " exceeds its predecessor");
    }
    for (long long v : parts) {
        if (v == 0)
            break;
        p.parts_.push_back(static_cast<int>(v));
        p.size_ += static_cast<int>(v);
    }
    return p;
}

Partition make_partition(std::span<const long long> parts) { return Partition::from_parts(parts); }

int Partition::column_length(int col) const noexcept
{
    if (col < 1)
        return 0;
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [col](int p) { return p >= col; }));
}

std::vector<Cell> Partition::cells() const
{
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j)
            out.push_back({i, j});
    return out;
}

int hook_length(const Partition &lambda, Cell c)
{
    if (!lambda.contains(c))
        throw Error(ErrorKind::CellOutOfDiagram,
                    "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ") not in " + to_string(lambda));
    return lambda.part(c.row) - c.col + lambda.column_length(c.col) - c.row + 1;
}

std::vector<int> first_column_hooks(const Partition &lambda)
{
    std::vector<int> out;
    for (int i = 1; i <= lambda.length(); ++i)
        out.push_back(hook_length(lambda, {i, 1}));
    return out;
}

BetaSet beta_set(const Partition &lambda, int n)
{
    if (n < lambda.length())
        throw Error(ErrorKind::PadTooShort,
                    "n = " + std::to_string(n) + " < length " + std::to_string(lambda.length()));
    BetaSet b;
    b.values.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        b.values.push_back(lambda.part(i) + n - i);
    return b;
}

std::vector<int> row_hook_set(const Partition &lambda, int row)
{
    if (row < 1 || row > lambda.length())
        throw Error(ErrorKind::RowOutOfRange, "row " + std::to_string(row) + " of " + to_string(lambda));
    const int n = lambda.size();
    const auto beta = beta_set(lambda, n).values;
    const int d = beta[static_cast<std::size_t>(row - 1)];
    std::vector<int> out;
    for (int j = d; j >= 1; --j)
        if (std::find(beta.begin(), beta.end(), d - j) == beta.end())
            out.push_back(j);
    return out;
}

Partition transpose(const Partition &lambda)
{
    std::vector<long long> parts;
    for (int j = 1; j <= lambda.part(1); ++j)
        parts.push_back(lambda.column_length(j));
    return Partition::from_parts(parts);
}

namespace {

void enumerate(int remaining, int max_part, std::vector<long long> &prefix, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.push_back(Partition::from_parts(prefix));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        enumerate(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    std::vector<long long> prefix;
    enumerate(n, n, prefix, out);
    return out;
}

Partition partition_from_beta(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    const auto len = static_cast<long long>(beta.size());
    std::vector<long long> parts;
    parts.reserve(beta.size());
    for (long long i = 0; i < len; ++i)
        parts.push_back(beta[static_cast<std::size_t>(i)] - (len - 1 - i));
    return Partition::from_parts(parts);
}

std::string to_string(const Partition &lambda)
{
    if (lambda.empty())
        return "-";
    std::string s;
    for (int i = 1; i <= lambda.length(); ++i) {
        if (i > 1)
            s += ',';
        s += std::to_string(lambda.part(i));
    }
    return s;
}

Partition parse_partition(std::string_view text)
{
    if (text == "-" || text.empty())
        return {};
    std::vector<long long> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        long long value = 0;
        const char *first = token.data();
        const char *last = token.data() + token.size();
        if (!token.empty() && *first == '+')
            ++first;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (token.empty() || ec != std::errc() || ptr != last)
            throw Error(ErrorKind::ParseError, "bad partition part '" + std::string(token) + "'");
        parts.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return Partition::from_parts(parts);
}

} // namespace cherednik
