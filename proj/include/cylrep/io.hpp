#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "cylrep/axioms.hpp"
#include "cylrep/represent.hpp"

namespace cylrep {

using Json = nlohmann::json;

// All readers throw Error(format) naming the offending field.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

AtomStructure algebra_from_json(const Json& j);
Json to_json(const AtomStructure& A);

ConcreteUnit unit_from_json(const Json& j);
Json to_json(const ConcreteUnit& u);

Representation representation_from_json(const Json& j);
Json to_json(const Representation& rep);

PreNetwork network_from_json(const Json& j);
Json to_json(const PreNetwork& N);

Json to_json(const AtomStructure& A, const Element& x);
Json to_json(const AtomStructure& A, const ValidationReport& report);
Json to_json(const EmbeddingReport& report);
// One transcript line; `trace` adds the labelled edges.
Json to_json(const AtomStructure& A, const RoundRecord& rec, bool trace);

}  // namespace cylrep
