#include "cherednik/centre.hpp"

#include "cherednik/error.hpp"

#include <exception>

namespace cherednik {

namespace {

GradedPresentation plus_part(const MultiPartition &label, int ell, bool simplified)
{
    GradedPresentation p = ell == 1 ? direct_presentation(label.components.front())
                                    : wreath_presentation(label, ell);
    return simplified ? simplify(p) : p;
}

} // namespace

Block block(const MultiPartition &label, int ell, bool simplified, Execution exec)
{
    require_ell(ell);
    if (label.ell() != ell)
        throw Error(ErrorKind::LengthMismatch, "label " + to_string(label) + " does not have " +
                                                   std::to_string(ell) + " components");
    Block b;
    b.label = label;
    b.plus = plus_part(label, ell, simplified);
    if (ell == 1) {
        b.minus = negate_grading(b.plus);
    } else {
        b.star_label = star_involution(label);
        b.minus = negate_grading(plus_part(*b.star_label, ell, simplified));
    }
    b.minus.prefix = 'g';
    b.plus_series = graded_dimensions(b.plus, exec);
    b.minus_series = b.star_label ? graded_dimensions(b.minus, exec) : b.plus_series;
    b.dimension = b.plus_series.total() * b.minus_series.total();
    return b;
}

Block block(const Partition &label, bool simplified, Execution exec)
{
    return block(MultiPartition{{label}}, 1, simplified, exec);
}

CentrePresentation centre_presentation(int n, int ell, bool simplified, Execution exec)
{
    require_ell(ell);
    std::vector<MultiPartition> labels;
    if (ell == 1)
        for (auto &lambda : partitions_of(n))
            labels.push_back(MultiPartition{{std::move(lambda)}});
    else
        labels = multipartitions_of(n, ell);

    CentrePresentation c;
    c.n = n;
    c.ell = ell;
    c.blocks.resize(labels.size());
    const int count = static_cast<int>(labels.size());
    if (exec == Execution::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < count; ++i) {
            try {
                c.blocks[static_cast<std::size_t>(i)] =
                    block(labels[static_cast<std::size_t>(i)], ell, simplified, Execution::serial);
            } catch (...) {
#pragma omp critical
                failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    } else {
        for (int i = 0; i < count; ++i)
            c.blocks[static_cast<std::size_t>(i)] = block(labels[static_cast<std::size_t>(i)], ell, simplified);
    }
    c.total_dimension = 0;
    for (const auto &b : c.blocks)
        c.total_dimension += b.dimension;
    return c;
}

Integer centre_dimension(int n, int ell, Execution exec)
{
    return centre_presentation(n, ell, true, exec).total_dimension;
}

} // namespace cherednik
