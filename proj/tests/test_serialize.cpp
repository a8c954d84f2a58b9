#include "cherednik/serialize.hpp"

#include <doctest.h>

using namespace cherednik;

namespace {

Partition P(std::initializer_list<long long> parts) { return Partition::from_parts(parts); }

void check_round_trip(const Json &j)
{
    const std::string text = dump(j);
    CHECK(dump(Json::parse(text)) == text);
}

} // namespace

TEST_CASE("presentation document")
{
    const auto j = to_json(direct_presentation(P({3, 2})));
    CHECK(j["generators"].size() == 5);
    CHECK(j["generators"][0]["name"] == "f1,4");
    CHECK(j["generators"][0]["hook"] == 4);
    CHECK(j["metadata"]["partition"] == "3,2");
    CHECK(j["metadata"]["simplified"] == false);
    CHECK(j["relations"][0][0]["coefficient"] == "14400");
    CHECK(j["relations"][0][0]["monomial"] == Json::array({"f1,1"}));
    check_round_trip(j);

    const auto s = to_json(simplify(direct_presentation(P({3, 2}))));
    CHECK(s["relations"][0][0]["monomial"].size() == 5);
    check_round_trip(s);
}

TEST_CASE("centre document")
{
    const auto j = to_json(centre_presentation(2, 2, true));
    CHECK(j["total_dimension"] == "8");
    CHECK(j["group"]["ell"] == 2);
    CHECK(j["blocks"].size() == 5);
    CHECK(j["blocks"][0].contains("star_label"));
    check_round_trip(j);
    check_round_trip(to_json(centre_presentation(3, 1, false)));
}

TEST_CASE("series and wronskian documents")
{
    const auto h = to_json(hilbert_series_formula(P({3, 1})));
    CHECK(h["text"] == "1 + q + q^2");
    CHECK(h["coefficients"] == Json::array({1, 1, 1}));
    check_round_trip(h);
    const auto w = to_json(wronski_relations(P({3, 2})));
    CHECK(w["leading"] == "50400");
    check_round_trip(w);
}
