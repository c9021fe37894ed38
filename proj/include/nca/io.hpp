#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "../../vendor/json.hpp"
#include "nca/adversary.hpp"
#include "nca/matching.hpp"
#include "nca/partition.hpp"

namespace nca {

using Json = nlohmann::ordered_json;

/// Plane {"x","y","w"}, circle {"t","w"}, line {"x","w"}; rationals as strings.
Json point_to_json(const Position& pos, const Rational& weight);
Position position_from_json(const Json& j, Space space);
Rational rational_from_json(const Json& j);

/// Infers the space from the keys of the first record.
struct PointFile {
  Space space = Space::Plane;
  std::vector<WeightedPoint> points;
};
PointFile read_points_jsonl(std::istream& in);
PointFile read_points_file(const std::filesystem::path& path);
void write_points_jsonl(std::ostream& out, const std::vector<WeightedPoint>& points);

OnlineDecision parse_decision(const std::string& text);

Json transcript_step_to_json(const TranscriptStep& step);
void write_transcript_jsonl(std::ostream& out, const std::vector<TranscriptStep>& steps);
struct Transcript {
  Space space = Space::Plane;
  std::vector<TranscriptStep> steps;
};
Transcript read_transcript_jsonl(std::istream& in);

/// Rebuilds the matching a transcript describes, re-checking each decision.
MatchingState replay_transcript(const Transcript& t);

/// Points, current edges, revoked edges and the region split history.
Json snapshot_to_json(const MatchingState& state, const ConvexPartition* regions);

}  // namespace nca
