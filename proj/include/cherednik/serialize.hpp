#pragma once

// JSON documents for the CLI. Keys are emitted in sorted order and every
// rational is a "p/q" string, so dump -> parse -> dump is byte-identical.

#include "cherednik/centre.hpp"
#include "cherednik/hilbert.hpp"
#include "cherednik/presentation.hpp"
#include "cherednik/wronski.hpp"

#include <json.hpp>

#include <string>

namespace cherednik {

using Json = nlohmann::json;

Json to_json(const Partition &lambda);
Json to_json(const MPoly &p, char prefix = 'f');
Json to_json(const GradedPresentation &p);
Json to_json(const HilbertSeries &h, bool negative = false);
Json to_json(const Block &b);
Json to_json(const CentrePresentation &c);
Json to_json(const WronskiRelations &w);

std::string dump(const Json &j);

} // namespace cherednik
