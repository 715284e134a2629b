#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "wpi/gt_module.hpp"
#include "wpi/relations.hpp"
#include "wpi/yangian_tensor.hpp"

namespace wpi {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Throws InputError naming `source`, line and column on malformed text.
Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::string& path);
/// Two-space indented, newline-terminated.
std::string dump(const Json& j);

/// Rejects documents carrying a "v" other than 1.
void check_version(const Json& j, const std::string& what);

Json scalar_to_json(const Scalar& x);
/// Accepts "p/q" strings and JSON integers.
Scalar scalar_from_json(const Json& j);

Json to_json(const Pyramid& pi);
Pyramid pyramid_from_json(const Json& j);

Json to_json(const TriIndex& t);
TriIndex triple_from_json(const Json& j);
/// "k,i,j".
TriIndex parse_triple(std::string_view text);

Json to_json(const Relation& r);
Json to_json(const RelationSet& c);
RelationSet relations_from_json(const Json& j, const Pyramid& pi);

/// {"pyramid": ..., "entries": [{"k","i","j","class","offset"}, ...]}, one
/// entry per triple in any order.
Json to_json(const Tableau& l);
Tableau tableau_from_json(const Json& j);

/// Nonzero entries only: [{"k","i","j","z"}, ...].
Json delta_to_json(const Pyramid& pi, const TableauDelta& d);

/// {"weights": [["1","0"], ...], "points": ["0", ...]}; points default to 0.
struct WeightsInput {
  std::vector<GlWeight> weights;
  std::vector<Scalar> points;
};
WeightsInput weights_from_json(const Json& j);
Json to_json(const GlWeight& w);

Json to_json(const AdmissibilityCertificate& cert);
Json to_json(const Pyramid& pi, const VerificationReport& report);
Json to_json(const SingularCount& s);

}  // namespace wpi
