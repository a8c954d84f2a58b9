#pragma once

// Graded presentations of A(lambda)^+ read directly off the Young diagram,
// their wreath-product analogues, and a deterministic linear simplifier.

#include "cherednik/abacus.hpp"
#include "cherednik/mpoly.hpp"
#include "cherednik/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cherednik {

enum class Orientation { positive, negative };

struct Generator {
    GenSym sym;     // (row, hook length)
    int degree = 0; // signed grading

    friend bool operator==(const Generator &, const Generator &) = default;
};

struct Relation {
    int degree = 0;
    MPoly poly;

    friend bool operator==(const Relation &, const Relation &) = default;
};

struct GradedPresentation {
    std::vector<Generator> generators;
    std::vector<Relation> relations;

    Partition partition;                 // the diagram the generators live on
    std::optional<MultiPartition> label; // set for wreath presentations
    int ell = 1;
    Orientation orientation = Orientation::positive;
    bool simplified = false;
    char prefix = 'f';

    std::string generator_name(const GenSym &g) const;

    friend bool operator==(const GradedPresentation &, const GradedPresentation &) = default;
};

// A set of cells with pairwise distinct rows and pairwise distinct columns.
struct TransversalMonomial {
    std::vector<Cell> cells; // sorted by row

    int degree(const Partition &lambda) const;
    Monomial monomial(const Partition &lambda) const;
};

// Every non-empty transversal set of cells of lambda, optionally restricted to
// cells whose hook length is divisible by `hook_divisor`.
std::vector<TransversalMonomial> transversal_monomials(const Partition &lambda, int hook_divisor = 1);

// prod_{i<j} (e_i - e_j) with e_i = d_i - h for the chosen cell in row i and
// e_i = d_i for the other rows (d the beta-set of lambda with n = |lambda|).
// Throws CellOutOfDiagram.
Rational vandermonde_coefficient(const Partition &lambda, const TransversalMonomial &m);

// (-1)^{n(n-1)/2}: the sign relating the Vandermonde product above to the
// Wronskian of the basis taken in decreasing degree order.
int wronskian_sign(int n) noexcept;

// The coefficient the monomial actually carries in the Wronskian relations:
// wronskian_sign(|lambda|) * vandermonde_coefficient.
Rational relation_coefficient(const Partition &lambda, const TransversalMonomial &m);

GradedPresentation direct_presentation(const Partition &lambda);

// Generators are the cells with hook length divisible by l; relations are
// r_l, r_2l, ..., r_nl with the killed generators removed. Throws
// LengthMismatch when q does not have l components.
GradedPresentation wreath_presentation(const MultiPartition &q, int ell);

// Repeatedly solves a relation that is linear in some generator and
// substitutes it away. Relations are taken by increasing degree; within a
// relation the largest (row, hook) among the linear generators is removed.
// Surviving relations are scaled so their leading coefficient is 1.
GradedPresentation simplify(const GradedPresentation &p);

GradedPresentation negate_grading(const GradedPresentation &p);

// "C[f1,1] / (f1,1^5)"; "C" for the base field.
std::string to_string(const GradedPresentation &p);

} // namespace cherednik
