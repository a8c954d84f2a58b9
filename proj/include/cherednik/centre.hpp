#pragma once

// The centre of the restricted rational Cherednik algebra at generic c, as a
// direct sum over irreducible labels of blocks A^- (x) A^+.

#include "cherednik/abacus.hpp"
#include "cherednik/execution.hpp"
#include "cherednik/hilbert.hpp"
#include "cherednik/presentation.hpp"

#include <optional>
#include <vector>

namespace cherednik {

struct Block {
    MultiPartition label;                     // one component when l = 1
    std::optional<MultiPartition> star_label; // wreath blocks only
    GradedPresentation plus;
    GradedPresentation minus; // generators prefixed 'g'
    HilbertSeries plus_series;
    HilbertSeries minus_series; // coefficient d is the dimension in degree -d
    Integer dimension;
};

struct CentrePresentation {
    int n = 0;
    int ell = 1;
    std::vector<Block> blocks;
    Integer total_dimension;
};

// Plus part: direct_presentation (l = 1) or wreath_presentation of the label;
// minus part: the plus part of star(label), negatively graded. Throws
// LengthMismatch when the label does not have l components.
Block block(const MultiPartition &label, int ell, bool simplified, Execution exec = Execution::serial);
Block block(const Partition &label, bool simplified, Execution exec = Execution::serial);

// Blocks in partitions_of / multipartitions_of order. The parallel path builds
// blocks concurrently; the output does not depend on completion order.
CentrePresentation centre_presentation(int n, int ell, bool simplified, Execution exec = Execution::serial);

Integer centre_dimension(int n, int ell, Execution exec = Execution::serial);

} // namespace cherednik
