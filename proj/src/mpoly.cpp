#include "cherednik/mpoly.hpp"

#include "cherednik/error.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cherednik {

int parallel_threads() noexcept
{
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

std::string to_string(const Rational &q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

int Monomial::weighted_degree() const noexcept
{
    int d = u;
    for (const auto &[g, e] : factors)
        d += g.degree * e;
    return d;
}

int Monomial::exponent(const GenSym &g) const noexcept
{
    auto it = std::lower_bound(factors.begin(), factors.end(), g,
                               [](const auto &f, const GenSym &key) { return f.first < key; });
    return it != factors.end() && it->first == g ? it->second : 0;
}

Monomial operator*(const Monomial &a, const Monomial &b)
{
    Monomial m;
    m.u = a.u + b.u;
    m.factors.reserve(a.factors.size() + b.factors.size());
    auto i = a.factors.begin();
    auto j = b.factors.begin();
    while (i != a.factors.end() || j != b.factors.end()) {
        if (j == b.factors.end() || (i != a.factors.end() && i->first < j->first)) {
            m.factors.push_back(*i++);
        } else if (i == a.factors.end() || j->first < i->first) {
            m.factors.push_back(*j++);
        } else {
            m.factors.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return m;
}

bool MonomialOrder::operator()(const Monomial &a, const Monomial &b) const noexcept
{
    const int da = a.weighted_degree();
    const int db = b.weighted_degree();
    if (da != db)
        return da > db;
    if (a.u != b.u)
        return a.u > b.u;
    auto i = a.factors.begin();
    auto j = b.factors.begin();
    while (i != a.factors.end() || j != b.factors.end()) {
        if (j == b.factors.end() || (i != a.factors.end() && i->first < j->first))
            return true; // a has a positive exponent where b has zero
        if (i == a.factors.end() || j->first < i->first)
            return false;
        if (i->second != j->second)
            return i->second > j->second;
        ++i;
        ++j;
    }
    return false;
}

MPoly::MPoly(const Rational &c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

MPoly MPoly::u(int power)
{
    Monomial m;
    m.u = power;
    return term(1, std::move(m));
}

MPoly MPoly::gen(GenSym g, int power)
{
    Monomial m;
    if (power > 0)
        m.factors.emplace_back(g, power);
    return term(1, std::move(m));
}

MPoly MPoly::term(const Rational &c, Monomial m)
{
    MPoly p;
    if (c != 0)
        p.terms_.emplace(std::move(m), c);
    return p;
}

Rational MPoly::coefficient(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MPoly::add_term(const Monomial &m, const Rational &c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

MPoly &MPoly::operator+=(const MPoly &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

MPoly &MPoly::operator-=(const MPoly &o)
{
    for (const auto &[m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

MPoly &MPoly::operator*=(const Rational &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[m, v] : terms_)
        v *= c;
    return *this;
}

MPoly operator*(const MPoly &a, const MPoly &b)
{
    MPoly out;
    for (const auto &[ma, ca] : a.terms_)
        for (const auto &[mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

MPoly scale(const MPoly &p, const Rational &c) { return p * c; }

MPoly pow(const MPoly &p, int k)
{
    MPoly result(1);
    for (int i = 0; i < k; ++i)
        result *= p;
    return result;
}

MPoly d_du(const MPoly &p)
{
    MPoly out;
    for (const auto &[m, c] : p.terms()) {
        if (m.u == 0)
            continue;
        Monomial d = m;
        --d.u;
        out.add_term(d, c * m.u);
    }
    return out;
}

int u_degree(const MPoly &p)
{
    int d = -1;
    for (const auto &[m, c] : p.terms())
        d = std::max(d, m.u);
    return d;
}

std::optional<int> weighted_degree(const MPoly &p)
{
    if (p.is_zero())
        throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no degree");
    const int d = p.terms().begin()->first.weighted_degree();
    for (const auto &[m, c] : p.terms())
        if (m.weighted_degree() != d)
            return std::nullopt;
    return d;
}

MPoly coefficient_of_u(const MPoly &p, int k)
{
    MPoly out;
    for (const auto &[m, c] : p.terms()) {
        if (m.u != k)
            continue;
        Monomial stripped = m;
        stripped.u = 0;
        out.add_term(stripped, c);
    }
    return out;
}

MPoly substitute(const MPoly &p, const GenSym &g, const MPoly &value)
{
    MPoly out;
    std::vector<MPoly> powers{MPoly(1)};
    for (const auto &[m, c] : p.terms()) {
        const int e = m.exponent(g);
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * value);
        Monomial rest = m;
        std::erase_if(rest.factors, [&g](const auto &f) { return f.first == g; });
        out += MPoly::term(c, rest) * powers[static_cast<std::size_t>(e)];
    }
    return out;
}

MPoly divide_exact_in_u(const MPoly &p, const MPoly &divisor)
{
    if (divisor.is_zero())
        throw Error(ErrorKind::InexactDivision, "division by zero");
    const int dd = u_degree(divisor);
    const MPoly lead = coefficient_of_u(divisor, dd);
    if (lead.size() != 1 || !lead.terms().begin()->first.is_constant())
        throw Error(ErrorKind::InexactDivision, "divisor is not monic up to a scalar in u");
    const Rational lead_inv = 1 / lead.terms().begin()->second;

    MPoly remainder = p;
    MPoly quotient;
    int rd = u_degree(remainder);
    while (!remainder.is_zero() && rd >= dd) {
        MPoly step = coefficient_of_u(remainder, rd) * lead_inv * MPoly::u(rd - dd);
        quotient += step;
        remainder -= step * divisor;
        const int next = u_degree(remainder);
        if (next >= rd)
            throw Error(ErrorKind::InexactDivision, "division failed to reduce the degree");
        rd = next;
    }
    if (!remainder.is_zero())
        throw Error(ErrorKind::InexactDivision, "non-zero remainder " + to_string(remainder));
    return quotient;
}

std::string to_string(const Monomial &m, char prefix)
{
    std::string s;
    auto append = [&s](const std::string &factor) {
        if (!s.empty())
            s += '*';
        s += factor;
    };
    if (m.u > 0)
        append(m.u == 1 ? "u" : "u^" + std::to_string(m.u));
    for (const auto &[g, e] : m.factors) {
        std::string f = std::string(1, prefix) + std::to_string(g.row) + "," + std::to_string(g.degree);
        if (e > 1)
            f += "^" + std::to_string(e);
        append(f);
    }
    return s;
}

std::string to_string(const MPoly &p, char prefix)
{
    if (p.is_zero())
        return "0";
    std::string s;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first)
            s += negative ? "-" : "";
        else
            s += negative ? " - " : " + ";
        first = false;
        if (m.is_constant()) {
            s += to_string(mag);
        } else {
            if (mag != 1)
                s += to_string(mag) + "*";
            s += to_string(m, prefix);
        }
    }
    return s;
}

MPoly determinant(const PolyMatrix &m, Execution exec)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw Error(ErrorKind::NonSquare,
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
    if (n > max_determinant_size)
        throw Error(ErrorKind::NonSquare, "size " + std::to_string(n) + " exceeds the supported bound");
    if (n == 0)
        return MPoly(1);

    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::vector<MPoly> minor(std::size_t{full} + 1);
    minor[0] = MPoly(1);

    std::vector<std::vector<std::uint32_t>> levels(n + 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        levels[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

    // minor[S] = det of rows 0..|S|-1 restricted to columns S, expanded along
    // the last of those rows.
    auto evaluate = [&](std::uint32_t mask) {
        const int k = std::popcount(mask);
        const std::size_t row = static_cast<std::size_t>(k - 1);
        MPoly acc;
        int position = 0;
        for (std::size_t c = 0; c < n; ++c) {
            const std::uint32_t bit = std::uint32_t{1} << c;
            if (!(mask & bit))
                continue;
            const MPoly &entry = m(row, c);
            const MPoly &rest = minor[mask ^ bit];
            if (!entry.is_zero() && !rest.is_zero()) {
                MPoly t = entry * rest;
                if ((k - 1 + position) % 2 != 0)
                    acc -= t;
                else
                    acc += t;
            }
            ++position;
        }
        minor[mask] = std::move(acc);
    };

    for (std::size_t k = 1; k <= n; ++k) {
        const auto &level = levels[k];
        if (exec == Execution::parallel) {
            std::exception_ptr failure;
            const long count = static_cast<long>(level.size());
#pragma omp parallel for schedule(dynamic)
            for (long i = 0; i < count; ++i) {
                try {
                    evaluate(level[static_cast<std::size_t>(i)]);
                } catch (...) {
#pragma omp critical
                    failure = std::current_exception();
                }
            }
            if (failure)
                std::rethrow_exception(failure);
        } else {
            for (std::uint32_t mask : level)
                evaluate(mask);
        }
    }
    return minor[full];
}

} // namespace cherednik
