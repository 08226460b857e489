#include "gsc/sequence_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gsc/errors.hpp"

namespace gsc {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void malformed(const std::string& what) {
  throw ParseError(ParseError::Kind::malformed_file, "sequence file: " + what);
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end) malformed(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

Pattern pattern_from_json(const ordered_json& j) {
  if (j.is_string()) return parse_pattern(j.get<std::string>());
  if (j.is_array()) {
    std::string text;
    for (const auto& row : j) {
      if (!row.is_string()) malformed("pattern rows must be strings");
      if (!text.empty()) text += '\n';
      text += row.get<std::string>();
    }
    return parse_pattern(text);
  }
  malformed("a pattern must be a string or an array of rows");
}

LevelSpec level_from_json(const ordered_json& j) {
  if (!j.is_object()) malformed("each level must be an object");
  if (!j.contains("patterns") || !j["patterns"].is_array() || j["patterns"].empty())
    malformed("each level needs a nonempty \"patterns\" array");
  for (const auto& [key, value] : j.items())
    if (key != "patterns" && key != "assignment") malformed("unknown level key \"" + key + "\"");
  LevelSpec level;
  for (const auto& p : j["patterns"]) level.patterns.push_back(pattern_from_json(p));
  if (j.contains("assignment")) {
    if (!j["assignment"].is_string()) malformed("\"assignment\" must be a string");
    level.assignment = parse_assignment(j["assignment"].get<std::string>());
  }
  try {
    level.validate();
  } catch (const PreconditionError& e) {
    malformed(e.what());
  }
  return level;
}

std::vector<LevelSpec> levels_from_json(const ordered_json& j, const char* key) {
  if (!j.is_array()) malformed(std::string("\"") + key + "\" must be an array");
  std::vector<LevelSpec> out;
  for (const auto& level : j) out.push_back(level_from_json(level));
  return out;
}

ordered_json level_to_json(const LevelSpec& level) {
  ordered_json j;
  j["patterns"] = ordered_json::array();
  for (const auto& p : level.patterns) j["patterns"].push_back(serialize_pattern(p));
  j["assignment"] = assignment_string(level.assignment);
  return j;
}

}  // namespace

Assignment parse_assignment(std::string_view text) {
  if (text == "cyclic") return CyclicAssignment{};
  if (text.starts_with("uniform:")) return UniformAssignment{parse_u64(text.substr(8), "uniform index")};
  if (text.starts_with("seeded:")) return SeededAssignment{parse_u64(text.substr(7), "seed")};
  if (text.starts_with("explicit:")) {
    ordered_json list;
    try {
      list = ordered_json::parse(text.substr(9));
    } catch (const nlohmann::json::exception&) {
      malformed("explicit assignment must be a JSON list of indices");
    }
    if (!list.is_array()) malformed("explicit assignment must be a JSON list of indices");
    ExplicitAssignment a;
    for (const auto& v : list) {
      if (!v.is_number_unsigned()) malformed("explicit indices must be non-negative integers");
      a.indices.push_back(v.get<std::size_t>());
    }
    return a;
  }
  malformed("unknown assignment '" + std::string(text) + "'");
}

std::string assignment_string(const Assignment& a) {
  struct Visitor {
    std::string operator()(const UniformAssignment& u) const { return "uniform:" + std::to_string(u.index); }
    std::string operator()(const CyclicAssignment&) const { return "cyclic"; }
    std::string operator()(const ExplicitAssignment& e) const {
      std::string s = "explicit:[";
      for (std::size_t i = 0; i < e.indices.size(); ++i) s += (i ? "," : "") + std::to_string(e.indices[i]);
      return s + "]";
    }
    std::string operator()(const SeededAssignment& s) const { return "seeded:" + std::to_string(s.seed); }
  };
  return std::visit(Visitor{}, a);
}

SequenceSpec parse_sequence(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) malformed("top level must be an object");
  for (const auto& [key, value] : j.items())
    if (key != "version" && key != "levels" && key != "cycle" && key != "generator")
      malformed("unknown key \"" + key + "\"");
  if (!j.contains("version") || j["version"] != 1) malformed("\"version\" must be 1");

  SequenceSpec spec;
  if (j.contains("levels")) spec.prefix = levels_from_json(j["levels"], "levels");
  if (j.contains("cycle")) spec.cycle = levels_from_json(j["cycle"], "cycle");
  if (j.contains("generator")) {
    const auto& g = j["generator"];
    if (!g.is_object() || !g.contains("name") || !g["name"].is_string()) malformed("generator needs a \"name\"");
    GeneratorTag tag{g["name"].get<std::string>(), {}};
    if (g.contains("params")) {
      if (!g["params"].is_object()) malformed("generator \"params\" must be an object");
      for (const auto& [key, value] : g["params"].items()) {
        if (!value.is_number_integer()) malformed("generator parameters must be integers");
        tag.params[key] = value.get<std::int64_t>();
      }
    }
    spec.generator = std::move(tag);
  }
  try {
    spec.validate();
  } catch (const PreconditionError& e) {
    malformed(e.what());
  }
  return spec;
}

SequenceSpec load_sequence(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sequence(buf.str());
}

std::string serialize_sequence(const SequenceSpec& spec) {
  ordered_json j;
  j["version"] = 1;
  j["levels"] = ordered_json::array();
  for (const auto& l : spec.prefix) j["levels"].push_back(level_to_json(l));
  if (!spec.cycle.empty()) {
    j["cycle"] = ordered_json::array();
    for (const auto& l : spec.cycle) j["cycle"].push_back(level_to_json(l));
  }
  if (spec.generator) {
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : spec.generator->params) params[k] = v;
    j["generator"] = {{"name", spec.generator->name}, {"params", params}};
  }
  return j.dump(2) + "\n";
}

}  // namespace gsc
