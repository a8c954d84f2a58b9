#pragma once

// Bead diagrams (abaci), l-cores, l-quotients and the inverse construction.
//
// Positions are numbered row-major from 0: position p sits in column p mod l,
// row p / l. A diagram built from a partition holds one bead per first-column
// hook length, so position 0 (the first empty position) stands for hook 0.
//
// Quotient labelling. Reading the columns of a diagram depends on how many
// beads the diagram carries, up to a cyclic rotation of the components. Here
// the quotient is read from a beta-set with N beads where
//     N >= length(lambda)  and  N = -(1 + length(core)) (mod l).
// On partitions with trivial core this is N = -1 (mod l), which makes
// quotient/from_quotient mutually inverse bijections between partitions of
// n*l with trivial core and l-multipartitions of n.

#include "cherednik/partition.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cherednik {

struct BeadDiagram {
    int ell = 1;
    std::vector<int> beads; // occupied positions, increasing

    bool occupied(int position) const;
    int first_empty() const;

    friend bool operator==(const BeadDiagram &, const BeadDiagram &) = default;
};

struct MultiPartition {
    std::vector<Partition> components;

    int ell() const noexcept { return static_cast<int>(components.size()); }
    int weight() const noexcept;

    friend bool operator==(const MultiPartition &, const MultiPartition &) = default;
    friend auto operator<=>(const MultiPartition &a, const MultiPartition &b)
    {
        return a.components <=> b.components;
    }
};

// Throws LengthMismatch unless l >= 1.
void require_ell(int ell);

BeadDiagram abacus_from_partition(const Partition &lambda, int ell);

// Reads hook lengths relative to the first empty position.
Partition partition_from_abacus(const BeadDiagram &diagram);

Partition ell_core(const Partition &lambda, int ell);
MultiPartition ell_quotient(const Partition &lambda, int ell);
bool has_trivial_core(const Partition &lambda, int ell);

// The partition of weight(q) * l with trivial l-core whose l-quotient is q.
// Throws LengthMismatch if q does not have l components.
Partition from_quotient(const MultiPartition &q, int ell);

// (q1, q2, ..., ql) -> (q1, ql, ..., q2)
MultiPartition star_involution(const MultiPartition &q);

// All l-multipartitions of n: compositions of n in reverse lexicographic
// order, then components in partitions_of order.
std::vector<MultiPartition> multipartitions_of(int n, int ell);

// "3,2|1,1|2" ; empty components are "-".
std::string to_string(const MultiPartition &q);
MultiPartition parse_multipartition(std::string_view text);

} // namespace cherednik
