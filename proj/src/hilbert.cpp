#include "cherednik/hilbert.hpp"

#include "cherednik/error.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>

namespace cherednik {

Integer HilbertSeries::total() const
{
    Integer t = 0;
    for (auto c : coefficients)
        t += static_cast<long>(c);
    return t;
}

namespace {

void strip(std::vector<std::int64_t> &c)
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

// p / (1 - q^h), exact.
std::vector<std::int64_t> divide_cyclotomic_factor(const std::vector<std::int64_t> &p, int h)
{
    const int deg = static_cast<int>(p.size()) - 1;
    if (deg < h)
        throw Error(ErrorKind::InexactDivision, "degree too small for (1 - q^" + std::to_string(h) + ")");
    std::vector<std::int64_t> quotient(static_cast<std::size_t>(deg - h + 1), 0);
    for (int k = 0; k <= deg - h; ++k)
        quotient[static_cast<std::size_t>(k)] =
            p[static_cast<std::size_t>(k)] + (k >= h ? quotient[static_cast<std::size_t>(k - h)] : 0);
    for (int k = deg - h + 1; k <= deg; ++k)
        if (p[static_cast<std::size_t>(k)] + (k >= h ? quotient[static_cast<std::size_t>(k - h)] : 0) != 0)
            throw Error(ErrorKind::InexactDivision, "non-zero remainder dividing by (1 - q^" + std::to_string(h) + ")");
    return quotient;
}

} // namespace

HilbertSeries hilbert_series_formula(const Partition &lambda)
{
    std::vector<std::int64_t> p{1};
    for (int i = 1; i <= lambda.size(); ++i) {
        std::vector<std::int64_t> next(p.size() + static_cast<std::size_t>(i), 0);
        for (std::size_t k = 0; k < p.size(); ++k) {
            next[k] += p[k];
            next[k + static_cast<std::size_t>(i)] -= p[k];
        }
        p = std::move(next);
    }
    std::vector<int> hooks;
    for (const Cell &c : lambda.cells())
        hooks.push_back(hook_length(lambda, c));
    std::sort(hooks.begin(), hooks.end(), std::greater<>());
    for (int h : hooks)
        p = divide_cyclotomic_factor(p, h);
    strip(p);
    return {std::move(p)};
}

Integer dimension_hook_formula(const Partition &lambda)
{
    Integer numerator = 1;
    for (int i = 2; i <= lambda.size(); ++i)
        numerator *= i;
    Integer denominator = 1;
    for (const Cell &c : lambda.cells())
        denominator *= hook_length(lambda, c);
    if (numerator % denominator != 0)
        throw Error(ErrorKind::NonIntegral, "n! not divisible by the hook product for " + to_string(lambda));
    return numerator / denominator;
}

int default_max_degree(const Partition &lambda) { return hilbert_series_formula(lambda).degree() + 2; }

namespace {

using SparseRow = std::vector<std::pair<int, Integer>>;

void make_primitive(SparseRow &row)
{
    Integer g = 0;
    for (const auto &[col, v] : row)
        g = gcd(g, v);
    if (row.front().second < 0)
        g = -g;
    if (g != 1)
        for (auto &[col, v] : row)
            v /= g;
}

// a * x - b * y for rows sorted by column.
SparseRow combine(const Integer &a, const SparseRow &x, const Integer &b, const SparseRow &y)
{
    SparseRow out;
    out.reserve(x.size() + y.size());
    auto i = x.begin();
    auto j = y.begin();
    while (i != x.end() || j != y.end()) {
        if (j == y.end() || (i != x.end() && i->first < j->first)) {
            out.emplace_back(i->first, a * i->second);
            ++i;
        } else if (i == x.end() || j->first < i->first) {
            out.emplace_back(j->first, -b * j->second);
            ++j;
        } else {
            Integer v = a * i->second - b * j->second;
            if (v != 0)
                out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Fraction-free sparse elimination over Z; returns the rank.
class EchelonBasis {
public:
    bool insert(SparseRow row)
    {
        while (!row.empty()) {
            auto it = pivots_.find(row.front().first);
            if (it == pivots_.end()) {
                make_primitive(row);
                const int lead = row.front().first;
                pivots_.emplace(lead, std::move(row));
                return true;
            }
            const SparseRow &pivot = it->second;
            const Integer g = gcd(pivot.front().second, row.front().second);
            const Integer a = pivot.front().second / g;
            const Integer b = row.front().second / g;
            row = combine(a, row, b, pivot);
            if (!row.empty())
                make_primitive(row);
        }
        return false;
    }

    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    std::map<int, SparseRow> pivots_;
};

using Exponents = std::vector<int>;

void enumerate_exponents(const std::vector<int> &degrees, std::size_t index, int remaining, Exponents &current,
                         std::vector<Exponents> &out)
{
    if (index == degrees.size()) {
        if (remaining == 0)
            out.push_back(current);
        return;
    }
    for (int e = 0; e * degrees[index] <= remaining; ++e) {
        current[index] = e;
        enumerate_exponents(degrees, index + 1, remaining - e * degrees[index], current, out);
    }
    current[index] = 0;
}

struct IntegerRelation {
    int degree = 0;
    std::vector<std::pair<Exponents, Integer>> terms;
};

} // namespace

HilbertSeries graded_dimensions_from_presentation(const GradedPresentation &p, int max_degree, Execution exec)
{
    std::vector<int> degrees;
    std::map<GenSym, std::size_t> index;
    for (const auto &g : p.generators) {
        if (g.degree <= 0)
            throw Error(ErrorKind::NegativeDegreeGenerator,
                        p.generator_name(g.sym) + " has degree " + std::to_string(g.degree));
        index.emplace(g.sym, degrees.size());
        degrees.push_back(g.degree);
    }
    const std::size_t nvars = degrees.size();

    std::vector<IntegerRelation> relations;
    for (const auto &r : p.relations) {
        if (r.poly.is_zero())
            continue;
        Integer denominators = 1;
        for (const auto &[m, c] : r.poly.terms())
            denominators = lcm(denominators, c.get_den());
        IntegerRelation ir;
        ir.degree = r.poly.terms().begin()->first.weighted_degree();
        for (const auto &[m, c] : r.poly.terms()) {
            Exponents e(nvars, 0);
            for (const auto &[g, k] : m.factors)
                e[index.at(g)] += k;
            ir.terms.emplace_back(std::move(e), Integer(c * denominators));
        }
        relations.push_back(std::move(ir));
    }

    std::vector<std::vector<Exponents>> monomials(static_cast<std::size_t>(std::max(max_degree, 0)) + 1);
    for (int d = 0; d <= max_degree; ++d) {
        Exponents current(nvars, 0);
        enumerate_exponents(degrees, 0, d, current, monomials[static_cast<std::size_t>(d)]);
    }

    std::vector<std::int64_t> dims(monomials.size(), 0);
    auto dimension_at = [&](int d) {
        const auto &basis = monomials[static_cast<std::size_t>(d)];
        std::map<Exponents, int> column;
        for (std::size_t i = 0; i < basis.size(); ++i)
            column.emplace(basis[i], static_cast<int>(i));
        EchelonBasis echelon;
        for (const auto &r : relations) {
            if (r.degree > d)
                continue;
            for (const auto &m : monomials[static_cast<std::size_t>(d - r.degree)]) {
                if (echelon.rank() == basis.size())
                    break;
                SparseRow row;
                row.reserve(r.terms.size());
                for (const auto &[e, c] : r.terms) {
                    Exponents product = e;
                    for (std::size_t v = 0; v < nvars; ++v)
                        product[v] += m[v];
                    row.emplace_back(column.at(product), c);
                }
                std::sort(row.begin(), row.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
                echelon.insert(std::move(row));
            }
        }
        dims[static_cast<std::size_t>(d)] = static_cast<std::int64_t>(basis.size() - echelon.rank());
    };

    const int top = max_degree;
    if (exec == Execution::parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (int d = top; d >= 0; --d) {
            try {
                dimension_at(d);
            } catch (...) {
#pragma omp critical
                failure = std::current_exception();
            }
        }
        if (failure)
            std::rethrow_exception(failure);
    } else {
        for (int d = 0; d <= top; ++d)
            dimension_at(d);
    }
    strip(dims);
    return {std::move(dims)};
}

int complete_intersection_degree(const GradedPresentation &p)
{
    int total = 0;
    for (const auto &r : p.relations)
        total += r.degree;
    for (const auto &g : p.generators)
        total -= g.degree;
    return total < 0 ? -total : total;
}

HilbertSeries graded_dimensions(const GradedPresentation &p, Execution exec)
{
    const int bound = complete_intersection_degree(p) + 2;
    if (p.orientation == Orientation::negative)
        return graded_dimensions_from_presentation(negate_grading(p), bound, exec);
    return graded_dimensions_from_presentation(p, bound, exec);
}

std::string to_string(const HilbertSeries &h, bool negative)
{
    std::string s;
    for (int d = 0; d <= h.degree(); ++d) {
        const auto c = h.at(d);
        if (c == 0)
            continue;
        if (!s.empty())
            s += " + ";
        const int e = negative ? -d : d;
        std::string power = d == 0 ? "" : (e == 1 ? "q" : "q^" + std::to_string(e));
        if (d == 0)
            s += std::to_string(c);
        else
            s += (c == 1 ? "" : std::to_string(c) + "*") + power;
    }
    return s.empty() ? "0" : s;
}

} // namespace cherednik
