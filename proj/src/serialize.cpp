#include "cherednik/serialize.hpp"

namespace cherednik {

Json to_json(const Partition &lambda)
{
    Json parts = Json::array();
    for (auto p : lambda.parts())
        parts.push_back(p);
    return parts;
}

namespace {

Json term_json(const Monomial &m, const Rational &c, char prefix)
{
    Json names = Json::array();
    for (const auto &[g, k] : m.factors)
        for (int e = 0; e < k; ++e)
            names.push_back(std::string(1, prefix) + std::to_string(g.row) + "," + std::to_string(g.degree));
    Json t = {{"coefficient", to_string(c)}, {"monomial", names}};
    if (m.u != 0)
        t["u"] = m.u;
    return t;
}

} // namespace

Json to_json(const MPoly &p, char prefix)
{
    Json terms = Json::array();
    for (const auto &[m, c] : p.terms())
        terms.push_back(term_json(m, c, prefix));
    return terms;
}

Json to_json(const GradedPresentation &p)
{
    Json generators = Json::array();
    for (const auto &g : p.generators)
        generators.push_back(
            {{"name", p.generator_name(g.sym)}, {"row", g.sym.row}, {"hook", g.sym.degree}, {"degree", g.degree}});
    Json relations = Json::array();
    for (const auto &r : p.relations)
        relations.push_back(to_json(r.poly, p.prefix));
    Json metadata = {{"partition", to_string(p.partition)},
                     {"ell", p.ell},
                     {"simplified", p.simplified},
                     {"orientation", p.orientation == Orientation::positive ? "positive" : "negative"}};
    if (p.label)
        metadata["label"] = to_string(*p.label);
    Json degrees = Json::array();
    for (const auto &r : p.relations)
        degrees.push_back(r.degree);
    metadata["relation_degrees"] = degrees;
    return {{"generators", generators}, {"relations", relations}, {"metadata", metadata}, {"text", to_string(p)}};
}

Json to_json(const HilbertSeries &h, bool negative)
{
    Json coefficients = Json::array();
    for (auto c : h.coefficients)
        coefficients.push_back(c);
    return {{"coefficients", coefficients},
            {"text", to_string(h, negative)},
            {"dimension", h.total().get_str()},
            {"grading", negative ? "negative" : "positive"}};
}

Json to_json(const Block &b)
{
    Json j = {{"label", to_string(b.label)},
              {"plus", to_json(b.plus)},
              {"minus", to_json(b.minus)},
              {"plus_series", to_json(b.plus_series)},
              {"minus_series", to_json(b.minus_series, true)},
              {"dimension", b.dimension.get_str()}};
    if (b.star_label)
        j["star_label"] = to_string(*b.star_label);
    return j;
}

Json to_json(const CentrePresentation &c)
{
    Json blocks = Json::array();
    for (const auto &b : c.blocks)
        blocks.push_back(to_json(b));
    return {{"group", {{"n", c.n}, {"ell", c.ell}}},
            {"assumption", "generic c / smooth Calogero-Moser"},
            {"blocks", blocks},
            {"total_dimension", c.total_dimension.get_str()}};
}

Json to_json(const WronskiRelations &w)
{
    Json relations = Json::array();
    for (std::size_t s = 0; s < w.relations.size(); ++s)
        relations.push_back({{"index", s + 1}, {"terms", to_json(w.relations[s])}});
    return {{"leading", to_string(w.leading)}, {"relations", relations}};
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

} // namespace cherednik
