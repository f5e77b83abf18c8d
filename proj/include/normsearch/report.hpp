#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "normsearch/pell_norm.hpp"
#include "normsearch/remarks.hpp"
#include "normsearch/search.hpp"

// Canonical report documents: JSON objects with sorted keys, big numbers as
// decimal strings, no timing or scheduling data, so equal inputs give equal bytes.
namespace normsearch::report {

using Json = nlohmann::json;

Json to_json(const QuadNum& q);
Json to_json(const IntPair& p);
Json to_json(const PellData& p);
Json to_json(const SolutionOrbit& o);
Json to_json(const UnitPowerForm& f);
Json to_json(const BinetForm& b);
Json to_json(const DegeneracyVerdict& v);
Json to_json(const DependenceVerdict& v);
Json to_json(const HypothesisReport& h);
Json to_json(const PairSearchReport& r);
Json to_json(const SUnitSearchReport& r);
Json to_json(const std::vector<VanishingSum>& v);
Json to_json(const SchlickeweiBound& b);
Json to_json(const std::vector<PartitionReport>& parts, long dependence_bound);
Json to_json(const RemarkReport& r);

Json integers(const std::vector<Integer>& v);

// Two-space indented, newline-terminated.
std::string dump(const Json& doc);

}  // namespace normsearch::report
