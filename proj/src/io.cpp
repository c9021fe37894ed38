#include "nca/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "nca/errors.hpp"

namespace nca {

Json point_to_json(const Position& pos, const Rational& weight) {
  Json j;
  switch (pos.space()) {
    case Space::Plane: {
      const auto& [x, y] = pos.as_plane();
      j["x"] = to_string(x);
      j["y"] = to_string(y);
      break;
    }
    case Space::Circle:
      j["t"] = to_string(pos.as_circle().t);
      break;
    case Space::Line:
      j["x"] = to_string(pos.as_line().x);
      break;
  }
  j["w"] = to_string(weight);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  // JSON floats go through their shortest decimal text so "0.1" stays 1/10.
  if (j.is_number_float()) return parse_rational(j.dump());
  throw Error("expected a rational, got " + j.dump());
}

Position position_from_json(const Json& j, Space space) {
  switch (space) {
    case Space::Plane:
      return Position::plane(rational_from_json(j.at("x")), rational_from_json(j.at("y")));
    case Space::Circle:
      return Position::circle(rational_from_json(j.at("t")));
    case Space::Line:
      return Position::line(rational_from_json(j.at("x")));
  }
  throw Error("bad space");
}

namespace {

Space space_of_record(const Json& j) {
  if (j.contains("t")) return Space::Circle;
  if (j.contains("x") && j.contains("y")) return Space::Plane;
  if (j.contains("x")) return Space::Line;
  throw Error("point record has neither t nor x: " + j.dump());
}

}  // namespace

PointFile read_points_jsonl(std::istream& in) {
  PointFile out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const Json j = Json::parse(line);
      const Space s = space_of_record(j);
      if (out.points.empty()) out.space = s;
      else if (s != out.space) throw Error("mixed spaces");
      Rational w = j.contains("w") ? rational_from_json(j.at("w")) : Rational(1);
      if (w <= 0) throw Error("weight must be positive, got " + to_string(w));
      out.points.push_back({out.points.size() + 1, position_from_json(j, s), w});
    } catch (const std::exception& e) {
      throw Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

PointFile read_points_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_points_jsonl(in);
}

void write_points_jsonl(std::ostream& out, const std::vector<WeightedPoint>& points) {
  for (const auto& p : points) out << point_to_json(p.pos, p.weight).dump() << '\n';
}

OnlineDecision parse_decision(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  in >> word;
  if (word == "leave") return Leave{};
  if (word == "match") {
    PointId j = 0;
    if (in >> j) return Match{j};
  } else if (word == "revoke") {
    char c1 = 0, comma = 0, c2 = 0;
    PointId a = 0, b = 0, j = 0;
    std::string m;
    if (in >> c1 >> a >> comma >> b >> c2 >> m >> j && c1 == '{' && comma == ',' && c2 == '}' && m == "match")
      return RevokeAndMatch{Edge(a, b), j};
  }
  throw Error("unparseable decision '" + text + "'");
}

Json transcript_step_to_json(const TranscriptStep& step) {
  Json j;
  j["step"] = step.step;
  j["emit"] = point_to_json(step.pos, step.weight);
  j["decision"] = to_string(step.decision);
  j["state_hash"] = step.state_hash;
  return j;
}

void write_transcript_jsonl(std::ostream& out, const std::vector<TranscriptStep>& steps) {
  for (const auto& s : steps) out << transcript_step_to_json(s).dump() << '\n';
}

Transcript read_transcript_jsonl(std::istream& in) {
  Transcript t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const Json j = Json::parse(line);
      const Json& e = j.at("emit");
      const Space s = space_of_record(e);
      if (t.steps.empty()) t.space = s;
      t.steps.push_back(TranscriptStep{j.at("step").get<std::size_t>(), position_from_json(e, s),
                                       rational_from_json(e.at("w")),
                                       parse_decision(j.at("decision").get<std::string>()),
                                       j.at("state_hash").get<std::uint64_t>()});
    } catch (const std::exception& e) {
      throw Error("transcript line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return t;
}

MatchingState replay_transcript(const Transcript& t) {
  bool revokes = false;
  for (const auto& s : t.steps) revokes |= std::holds_alternative<RevokeAndMatch>(s.decision);
  MatchingState state(t.space, revokes ? MatchMode::Revocable : MatchMode::Irrevocable);
  for (const auto& s : t.steps) {
    const PointId p = state.add_point(s.pos, s.weight).id;
    if (const auto* m = std::get_if<Match>(&s.decision)) {
      state.apply_match(p, m->partner);
    } else if (const auto* r = std::get_if<RevokeAndMatch>(&s.decision)) {
      state.apply_revoke(r->revoked.a, r->revoked.b);
      state.apply_match(p, r->partner);
    }
    if (state.hash() != s.state_hash) throw Error("state hash mismatch at step " + std::to_string(s.step));
  }
  return state;
}

Json snapshot_to_json(const MatchingState& state, const ConvexPartition* regions) {
  Json j;
  j["space"] = to_string(state.space());
  Json pts = Json::array();
  for (const auto& p : state.points()) pts.push_back(point_to_json(p.pos, p.weight));
  j["points"] = std::move(pts);
  Json edges = Json::array();
  for (const auto& e : state.edges()) edges.push_back({e.a, e.b});
  j["edges"] = std::move(edges);
  Json revoked = Json::array();
  for (const auto& r : state.revoked()) revoked.push_back({r.edge.a, r.edge.b});
  j["revoked"] = std::move(revoked);
  Json regs = Json::array();
  if (regions) {
    for (RegionId r = 0; r < regions->region_count(); ++r) {
      const Region& reg = regions->region(r);
      if (!reg.constraint) continue;
      regs.push_back({{"id", r},
                      {"parent", *reg.parent},
                      {"a", reg.constraint->a},
                      {"b", reg.constraint->b},
                      {"side", reg.constraint->side == Side::Positive ? 1 : -1}});
    }
  }
  j["regions"] = std::move(regs);
  return j;
}

}  // namespace nca
