#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "wallforge/flipledger.hpp"

namespace wallforge {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaId = "wallforge/1";

// Enum <-> wire-name mappings.  Parsers throw parse_error on unknown names.
std::string_view wall_kind_name(WallKind k);
WallKind wall_kind_from_name(std::string_view name);
std::string_view wall_tag_name(WallTag t);
WallTag wall_tag_from_name(std::string_view name);
std::string_view actuality_name(Actuality a);
Actuality actuality_from_name(std::string_view name);
std::string_view record_role_name(RecordRole r);
RecordRole record_role_from_name(std::string_view name);

// All rationals cross this boundary as strings "p" / "p/q"; Chern characters
// as their text encoding "r,c1,ch2".  The wall record carries its candidate
// annotations: {"kind","center","radius_sq","pair","tags","candidates"}.
Json wall_to_json(const Wall& w, const std::vector<DestabilizerCandidate>* candidates = nullptr);
Wall wall_from_json(const Json& j);
std::vector<DestabilizerCandidate> candidates_from_wall_json(const Json& j);

Json candidate_to_json(const DestabilizerCandidate& c);
DestabilizerCandidate candidate_from_json(const Json& j);

Json component_to_json(const LocusComponent& c);
LocusComponent component_from_json(const Json& j);

Json record_to_json(const LocusRecord& r);
LocusRecord record_from_json(const Json& j);

Json ledger_to_json(const Int& d, const Int& max_rank, const std::vector<LocusRecord>& records);
std::vector<LocusRecord> ledger_from_json(const Json& j);

Json scan_to_json(const Int& d, const Int& max_rank,
                  const std::vector<DestabilizerCandidate>& candidates);
std::vector<DestabilizerCandidate> scan_from_json(const Json& j);

/// CSV v1 layouts (columns documented in the README).
std::string ledger_to_csv(const std::vector<LocusRecord>& records);
std::string candidates_to_csv(const std::vector<DestabilizerCandidate>& candidates);

/// SVG rendering of nested walls in the upper half-plane.  The only place in
/// the engine where rationals become floating point; coordinates are emitted
/// at fixed 1e-6 precision so output is byte-deterministic for fixed input.
struct SvgOptions {
  Rational scale = 60;  // pixels per s-axis unit
};

std::string walls_to_svg(const std::vector<LocusRecord>& records, const SvgOptions& options);
std::string wall_to_svg(const Wall& w, const SvgOptions& options);

}  // namespace wallforge
