#pragma once

#include <vector>

#include <json.hpp>

#include "schubert/chow_ring.hpp"
#include "schubert/mdpair_search.hpp"
#include "schubert/morphism_oracle.hpp"

namespace schubert {

// Serializers for every report the CLI prints or writes. nlohmann::json keeps
// object keys sorted, and every list here is emitted in its report's
// canonical order, so dump() is byte-stable for fixed input (the elapsed_ms
// field of a search report aside).

nlohmann::json partition_json(const Partition& p);
nlohmann::json symbol_json(const SchubertSymbol& s);

/// {"k","n","terms":[{"partition":[...],"coeff":c}]}, terms in increasing
/// lexicographic order of codimension partitions.
nlohmann::json to_json(const CycleClass& c);
CycleClass cycle_class_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ZeroPair& z);
nlohmann::json to_json(const MdPair& p);
nlohmann::json to_json(const SearchReport& r);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const ClassificationOutcome& o);
nlohmann::json table_json(int n, const std::vector<std::vector<ClassificationOutcome>>& table);

}  // namespace schubert
