#include "cherednik/abacus.hpp"

#include "cherednik/error.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cherednik {

void require_ell(int ell)
{
    if (ell < 1)
        throw Error(ErrorKind::LengthMismatch, "ell must be positive, got " + std::to_string(ell));
}

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

} // namespace

bool BeadDiagram::occupied(int position) const
{
    return std::binary_search(beads.begin(), beads.end(), position);
}

int BeadDiagram::first_empty() const
{
    int p = 0;
    for (int b : beads) {
        if (b != p)
            break;
        ++p;
    }
    return p;
}

int MultiPartition::weight() const noexcept
{
    return std::accumulate(components.begin(), components.end(), 0,
                           [](int acc, const Partition &p) { return acc + p.size(); });
}

BeadDiagram abacus_from_partition(const Partition &lambda, int ell)
{
    require_ell(ell);
    BeadDiagram d{ell, first_column_hooks(lambda)};
    std::sort(d.beads.begin(), d.beads.end());
    return d;
}

Partition partition_from_abacus(const BeadDiagram &diagram)
{
    const int e = diagram.first_empty();
    std::vector<int> hooks;
    for (int b : diagram.beads)
        if (b > e)
            hooks.push_back(b - e);
    return partition_from_beta(std::move(hooks));
}

Partition ell_core(const Partition &lambda, int ell)
{
    require_ell(ell);
    std::vector<int> counts(static_cast<std::size_t>(ell), 0);
    for (int b : first_column_hooks(lambda))
        ++counts[static_cast<std::size_t>(b % ell)];
    BeadDiagram slid{ell, {}};
    for (int c = 0; c < ell; ++c)
        for (int r = 0; r < counts[static_cast<std::size_t>(c)]; ++r)
            slid.beads.push_back(c + r * ell);
    std::sort(slid.beads.begin(), slid.beads.end());
    return partition_from_abacus(slid);
}

bool has_trivial_core(const Partition &lambda, int ell) { return ell_core(lambda, ell).empty(); }

MultiPartition ell_quotient(const Partition &lambda, int ell)
{
    require_ell(ell);
    const int residue = mod(-(1 + ell_core(lambda, ell).length()), ell);
    int beads = lambda.length();
    while (mod(beads, ell) != residue)
        ++beads;

    std::vector<std::vector<int>> columns(static_cast<std::size_t>(ell));
    for (int v : beta_set(lambda, beads).values)
        columns[static_cast<std::size_t>(v % ell)].push_back(v / ell);

    MultiPartition q;
    q.components.reserve(columns.size());
    for (auto &col : columns)
        q.components.push_back(partition_from_beta(std::move(col)));
    return q;
}

Partition from_quotient(const MultiPartition &q, int ell)
{
    require_ell(ell);
    if (q.ell() != ell)
        throw Error(ErrorKind::LengthMismatch, std::to_string(q.ell()) + " components for ell = " + std::to_string(ell));

    // Bead counts (k, ..., k, k-1) slide to a contiguous block, i.e. trivial core.
    auto count = [ell](int c, int k) { return c == ell - 1 ? k - 1 : k; };
    int k = 1;
    for (int c = 0; c < ell; ++c)
        k = std::max(k, q.components[static_cast<std::size_t>(c)].length() + (c == ell - 1 ? 1 : 0));

    std::vector<int> beta;
    for (int c = 0; c < ell; ++c) {
        const int b = count(c, k);
        for (int v : beta_set(q.components[static_cast<std::size_t>(c)], b).values)
            beta.push_back(c + ell * v);
    }
    return partition_from_beta(std::move(beta));
}

MultiPartition star_involution(const MultiPartition &q)
{
    MultiPartition out = q;
    if (out.components.size() > 1)
        std::reverse(out.components.begin() + 1, out.components.end());
    return out;
}

namespace {

void compose(int remaining, int slots, std::vector<int> &prefix, std::vector<std::vector<int>> &out)
{
    if (slots == 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int v = remaining; v >= 0; --v) {
        prefix.push_back(v);
        compose(remaining - v, slots - 1, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiPartition> multipartitions_of(int n, int ell)
{
    require_ell(ell);
    std::vector<MultiPartition> out;
    if (n < 0)
        return out;
    std::vector<std::vector<int>> sizes;
    std::vector<int> prefix;
    compose(n, ell, prefix, sizes);

    for (const auto &composition : sizes) {
        std::vector<MultiPartition> acc{MultiPartition{}};
        for (int s : composition) {
            std::vector<MultiPartition> next;
            for (const auto &partial : acc)
                for (auto &p : partitions_of(s)) {
                    auto extended = partial;
                    extended.components.push_back(p);
                    next.push_back(std::move(extended));
                }
            acc = std::move(next);
        }
        out.insert(out.end(), acc.begin(), acc.end());
    }
    return out;
}

std::string to_string(const MultiPartition &q)
{
    std::string s;
    for (std::size_t i = 0; i < q.components.size(); ++i) {
        if (i > 0)
            s += '|';
        s += to_string(q.components[i]);
    }
    return s;
}

MultiPartition parse_multipartition(std::string_view text)
{
    MultiPartition q;
    std::size_t pos = 0;
    while (true) {
        const auto bar = text.find('|', pos);
        const auto token = text.substr(pos, bar == std::string_view::npos ? std::string_view::npos : bar - pos);
        q.components.push_back(parse_partition(token));
        if (bar == std::string_view::npos)
            break;
        pos = bar + 1;
    }
    return q;
}

} // namespace cherednik
