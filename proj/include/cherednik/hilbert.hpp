#pragma once

// Hilbert-Poincare series of the graded algebras A(lambda)^+: the closed
// hook-length quotient and an independent oracle that reads graded
// dimensions straight off a presentation by exact linear algebra.

#include "cherednik/execution.hpp"
#include "cherednik/mpoly.hpp"
#include "cherednik/partition.hpp"
#include "cherednik/presentation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cherednik {

struct HilbertSeries {
    std::vector<std::int64_t> coefficients; // c_0 .. c_D, trailing zeros stripped

    int degree() const noexcept { return static_cast<int>(coefficients.size()) - 1; }
    std::int64_t at(int d) const noexcept
    {
        return d >= 0 && d < static_cast<int>(coefficients.size()) ? coefficients[static_cast<std::size_t>(d)] : 0;
    }
    Integer total() const;

    friend bool operator==(const HilbertSeries &, const HilbertSeries &) = default;
};

// prod_{i=1}^n (1 - q^i) / prod_{cells} (1 - q^{h(i,j)}), divided exactly.
// Throws InexactDivision if the quotient is not a polynomial.
HilbertSeries hilbert_series_formula(const Partition &lambda);

// n! / prod h(i,j). Throws NonIntegral if the division is not exact.
Integer dimension_hook_formula(const Partition &lambda);

// For each degree d <= max_degree: (#monomials of degree d in the generators)
// minus the rank over Q of {m * r : deg m + deg r = d}. Degrees are computed
// independently, so the parallel path spreads them over OpenMP threads.
// Throws NegativeDegreeGenerator unless all generator degrees are positive.
HilbertSeries graded_dimensions_from_presentation(const GradedPresentation &p, int max_degree,
                                                  Execution exec = Execution::serial);

// Default bound for the oracle: the degree of the closed-form series plus two
// slack degrees that must come out zero.
int default_max_degree(const Partition &lambda);

// Sum of relation degrees minus sum of generator degrees, in absolute value:
// the socle degree of a graded complete intersection.
int complete_intersection_degree(const GradedPresentation &p);

// Graded dimensions up to complete_intersection_degree + 2; negatively graded
// presentations are mirrored first, so coefficient d is the dimension in
// degree -d for them.
HilbertSeries graded_dimensions(const GradedPresentation &p, Execution exec = Execution::serial);

// "1 + q + q^2"; with `negative` set the exponents are printed negated.
std::string to_string(const HilbertSeries &h, bool negative = false);

} // namespace cherednik
