#pragma once

// Schubert-cell basis polynomials, their Wronskian, and the relations cut out
// by the fibre of the Wronski map over 0.

#include "cherednik/mpoly.hpp"
#include "cherednik/partition.hpp"

#include <vector>

namespace cherednik {

struct SchubertBasis {
    Partition source;
    BetaSet beta;            // d_1 > ... > d_n, n = |source|
    std::vector<MPoly> polys; // f_i = u^{d_i} + sum_{d_i - j not in P} f_{i,j} u^{d_i - j}
};

struct WronskiRelations {
    Rational leading = 1;          // coefficient of u^n
    std::vector<MPoly> relations;  // relations[s-1] is r_s, the coefficient of u^{n-s}
};

// The empty partition yields an empty basis.
SchubertBasis schubert_basis(const Partition &lambda);

// The n x n matrix whose row k holds the k-th u-derivatives.
PolyMatrix wronski_matrix(const std::vector<MPoly> &polys);

MPoly wronskian(const SchubertBasis &basis, Execution exec = Execution::serial);
MPoly wronskian(const std::vector<MPoly> &polys, Execution exec = Execution::serial);

// wronski_relations(empty) has leading 1 and no relations.
WronskiRelations wronski_relations(const Partition &lambda, Execution exec = Execution::serial);

// Independent route through Wr(f_1..f_n) = f_1^n Wr((f_2/f_1)', ..., (f_n/f_1)'),
// evaluated without fractions as Wr(h_2..h_n) / f_1^{n-2} with
// h_j = f_j' f_1 - f_j f_1'. Inputs must be sorted by strictly increasing
// u-degree and each must be monic up to a scalar in u; the result equals the
// determinant of the matrix with columns in the given order.
// Throws InexactDivision when a division step is not exact.
MPoly wronskian_recursive(const std::vector<MPoly> &polys);

} // namespace cherednik
