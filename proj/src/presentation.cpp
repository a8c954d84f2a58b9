#include "cherednik/presentation.hpp"

#include "cherednik/error.hpp"

#include <algorithm>
#include <map>

namespace cherednik {

std::string GradedPresentation::generator_name(const GenSym &g) const
{
    return std::string(1, prefix) + std::to_string(g.row) + "," + std::to_string(g.degree);
}

int TransversalMonomial::degree(const Partition &lambda) const
{
    int d = 0;
    for (const Cell &c : cells)
        d += hook_length(lambda, c);
    return d;
}

Monomial TransversalMonomial::monomial(const Partition &lambda) const
{
    Monomial m;
    for (const Cell &c : cells)
        m.factors.emplace_back(GenSym{c.row, hook_length(lambda, c)}, 1);
    std::sort(m.factors.begin(), m.factors.end());
    return m;
}

namespace {

void place_rooks(const Partition &lambda, int row, int hook_divisor, std::vector<bool> &used_cols,
                 std::vector<Cell> &chosen, std::vector<TransversalMonomial> &out)
{
    if (row > lambda.length()) {
        if (!chosen.empty())
            out.push_back({chosen});
        return;
    }
    place_rooks(lambda, row + 1, hook_divisor, used_cols, chosen, out);
    for (int col = 1; col <= lambda.part(row); ++col) {
        if (used_cols[static_cast<std::size_t>(col)])
            continue;
        if (hook_length(lambda, {row, col}) % hook_divisor != 0)
            continue;
        used_cols[static_cast<std::size_t>(col)] = true;
        chosen.push_back({row, col});
        place_rooks(lambda, row + 1, hook_divisor, used_cols, chosen, out);
        chosen.pop_back();
        used_cols[static_cast<std::size_t>(col)] = false;
    }
}

} // namespace

std::vector<TransversalMonomial> transversal_monomials(const Partition &lambda, int hook_divisor)
{
    std::vector<TransversalMonomial> out;
    std::vector<bool> used(static_cast<std::size_t>(lambda.part(1)) + 1, false);
    std::vector<Cell> chosen;
    place_rooks(lambda, 1, std::max(hook_divisor, 1), used, chosen, out);
    return out;
}

Rational vandermonde_coefficient(const Partition &lambda, const TransversalMonomial &m)
{
    const int n = lambda.size();
    std::vector<Integer> e;
    for (int v : beta_set(lambda, n).values)
        e.emplace_back(v);
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (const Cell &c : m.cells) {
        const int h = hook_length(lambda, c); // validates the cell
        if (seen[static_cast<std::size_t>(c.row)])
            throw Error(ErrorKind::CellOutOfDiagram, "two cells share row " + std::to_string(c.row));
        seen[static_cast<std::size_t>(c.row)] = true;
        e[static_cast<std::size_t>(c.row - 1)] -= h;
    }
    Integer product = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            product *= e[i] - e[j];
    return Rational(product);
}

int wronskian_sign(int n) noexcept { return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1; }

Rational relation_coefficient(const Partition &lambda, const TransversalMonomial &m)
{
    return vandermonde_coefficient(lambda, m) * wronskian_sign(lambda.size());
}

GradedPresentation direct_presentation(const Partition &lambda)
{
    GradedPresentation p;
    p.partition = lambda;
    for (const Cell &c : lambda.cells()) {
        const int h = hook_length(lambda, c);
        p.generators.push_back({{c.row, h}, h});
    }
    const int n = lambda.size();
    std::vector<MPoly> rel(static_cast<std::size_t>(n) + 1);
    for (const auto &t : transversal_monomials(lambda)) {
        const int s = t.degree(lambda);
        if (s > n)
            continue;
        rel[static_cast<std::size_t>(s)].add_term(t.monomial(lambda), relation_coefficient(lambda, t));
    }
    for (int s = 1; s <= n; ++s)
        p.relations.push_back({s, std::move(rel[static_cast<std::size_t>(s)])});
    return p;
}

GradedPresentation wreath_presentation(const MultiPartition &q, int ell)
{
    if (ell < 1 || q.ell() != ell)
        throw Error(ErrorKind::LengthMismatch,
                    std::to_string(q.ell()) + " components for ell = " + std::to_string(ell));
    const Partition lambda = from_quotient(q, ell);
    GradedPresentation full = direct_presentation(lambda);

    GradedPresentation p;
    p.partition = lambda;
    p.label = q;
    p.ell = ell;
    for (const auto &g : full.generators)
        if (g.degree % ell == 0)
            p.generators.push_back(g);
    for (auto &r : full.relations) {
        if (r.degree % ell != 0)
            continue;
        MPoly kept;
        for (const auto &[m, c] : r.poly.terms()) {
            const bool survives = std::all_of(m.factors.begin(), m.factors.end(),
                                              [ell](const auto &f) { return f.first.degree % ell == 0; });
            if (survives)
                kept.add_term(m, c);
        }
        p.relations.push_back({r.degree, std::move(kept)});
    }
    return p;
}

namespace {

// A generator g that occurs in r only as the bare linear term c*g.
std::optional<GenSym> eliminable(const MPoly &r)
{
    std::map<GenSym, int> occurrences;
    std::map<GenSym, bool> linear;
    for (const auto &[m, c] : r.terms()) {
        for (const auto &[g, e] : m.factors)
            ++occurrences[g];
        if (m.u == 0 && m.factors.size() == 1 && m.factors.front().second == 1)
            linear[m.factors.front().first] = true;
    }
    std::optional<GenSym> best;
    for (const auto &[g, is_linear] : linear)
        if (occurrences[g] == 1)
            best = g; // map order: the last hit is the largest (row, hook)
    return best;
}

} // namespace

GradedPresentation simplify(const GradedPresentation &input)
{
    GradedPresentation p = input;
    std::erase_if(p.relations, [](const Relation &r) { return r.poly.is_zero(); });

    while (true) {
        std::stable_sort(p.relations.begin(), p.relations.end(), [](const Relation &a, const Relation &b) {
            return std::abs(a.degree) < std::abs(b.degree);
        });
        bool changed = false;
        for (std::size_t k = 0; k < p.relations.size(); ++k) {
            const auto g = eliminable(p.relations[k].poly);
            if (!g)
                continue;
            Monomial lin;
            lin.factors.emplace_back(*g, 1);
            const MPoly &r = p.relations[k].poly;
            const Rational c = r.coefficient(lin);
            const MPoly value = (r - MPoly::term(c, lin)) * Rational(-1 / c);

            p.relations.erase(p.relations.begin() + static_cast<std::ptrdiff_t>(k));
            for (auto &other : p.relations)
                other.poly = substitute(other.poly, *g, value);
            std::erase_if(p.relations, [](const Relation &rel) { return rel.poly.is_zero(); });
            std::erase_if(p.generators, [&g](const Generator &gen) { return gen.sym == *g; });
            changed = true;
            break;
        }
        if (!changed)
            break;
    }

    for (auto &r : p.relations) {
        const Rational lead = r.poly.terms().begin()->second;
        r.poly *= Rational(1 / lead);
    }
    p.simplified = true;
    return p;
}

GradedPresentation negate_grading(const GradedPresentation &input)
{
    GradedPresentation p = input;
    for (auto &g : p.generators)
        g.degree = -g.degree;
    for (auto &r : p.relations)
        r.degree = -r.degree;
    p.orientation = p.orientation == Orientation::positive ? Orientation::negative : Orientation::positive;
    return p;
}

std::string to_string(const GradedPresentation &p)
{
    if (p.generators.empty())
        return "C";
    std::string s = "C[";
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (i > 0)
            s += ", ";
        s += p.generator_name(p.generators[i].sym);
    }
    s += "]";
    if (p.relations.empty())
        return s;
    s += " / (";
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        if (i > 0)
            s += ", ";
        s += to_string(p.relations[i].poly, p.prefix);
    }
    s += ")";
    return s;
}

} // namespace cherednik
