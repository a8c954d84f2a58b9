#include "cherednik/wronski.hpp"

#include "cherednik/error.hpp"

#include <algorithm>

namespace cherednik {

SchubertBasis schubert_basis(const Partition &lambda)
{
    const int n = lambda.size();
    SchubertBasis basis{lambda, beta_set(lambda, n), {}};
    const auto &d = basis.beta.values;
    basis.polys.reserve(d.size());
    for (int i = 1; i <= n; ++i) {
        const int di = d[static_cast<std::size_t>(i - 1)];
        MPoly f = MPoly::u(di);
        for (int j = 1; j <= di; ++j)
            if (std::find(d.begin(), d.end(), di - j) == d.end())
                f += MPoly::gen({i, j}) * MPoly::u(di - j);
        basis.polys.push_back(std::move(f));
    }
    return basis;
}

PolyMatrix wronski_matrix(const std::vector<MPoly> &polys)
{
    const std::size_t n = polys.size();
    PolyMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        MPoly current = polys[c];
        for (std::size_t r = 0; r < n; ++r) {
            m(r, c) = current;
            current = d_du(current);
        }
    }
    return m;
}

MPoly wronskian(const std::vector<MPoly> &polys, Execution exec)
{
    return determinant(wronski_matrix(polys), exec);
}

MPoly wronskian(const SchubertBasis &basis, Execution exec) { return wronskian(basis.polys, exec); }

WronskiRelations wronski_relations(const Partition &lambda, Execution exec)
{
    WronskiRelations out;
    const int n = lambda.size();
    if (n == 0)
        return out;
    const MPoly w = wronskian(schubert_basis(lambda), exec);
    const MPoly lead = coefficient_of_u(w, n);
    out.leading = lead.is_zero() ? Rational(0) : lead.coefficient(Monomial{});
    out.relations.reserve(static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s)
        out.relations.push_back(coefficient_of_u(w, n - s));
    return out;
}

MPoly wronskian_recursive(const std::vector<MPoly> &polys)
{
    const std::size_t n = polys.size();
    if (n == 0)
        return MPoly(1);
    for (std::size_t i = 1; i < n; ++i)
        if (u_degree(polys[i]) <= u_degree(polys[i - 1]))
            throw Error(ErrorKind::InexactDivision, "inputs must have strictly increasing u-degree");
    if (n == 1)
        return polys[0];

    const MPoly &f1 = polys[0];
    const MPoly f1_prime = d_du(f1);
    std::vector<MPoly> h;
    h.reserve(n - 1);
    for (std::size_t j = 1; j < n; ++j)
        h.push_back(d_du(polys[j]) * f1 - polys[j] * f1_prime);

    // h_j has u-degree deg f_j + deg f_1 - 1 with leading coefficient
    // (deg f_j - deg f_1) * lc(f_j) * lc(f_1), so the increasing order and the
    // monic-up-to-scalar shape survive the step.
    MPoly w = wronskian_recursive(h);
    for (std::size_t k = 0; k + 2 < n; ++k)
        w = divide_exact_in_u(w, f1);
    return w;
}

} // namespace cherednik
