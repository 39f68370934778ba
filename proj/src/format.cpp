#include "persuasion/format.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "persuasion/error.hpp"

namespace persuasion {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void semantic(const std::string& what) { throw Error(Errc::semantic_error, what); }

void check_keys(const Json& obj, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) semantic("unknown key \"" + key + "\"");
  }
  for (const auto& key : allowed) {
    if (!obj.contains(key)) semantic("missing key \"" + key + "\"");
  }
}

std::size_t index_value(const Json& v, const std::string& field) {
  if (!v.is_number_unsigned()) semantic("field \"" + field + "\": expected a non-negative integer index");
  return v.get<std::size_t>();
}

Rational rational_value(const Json& v, const std::string& field) {
  if (!v.is_string()) semantic("field \"" + field + "\": expected a \"num/den\" string");
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const Error& e) {
    semantic("field \"" + field + "\": " + e.what());
  }
}

EventSet index_set(const Json& v, std::size_t universe, const std::string& field) {
  if (!v.is_array()) semantic("field \"" + field + "\": expected an array of indices");
  EventSet out(universe);
  for (const auto& item : v) {
    const std::size_t i = index_value(item, field);
    if (i >= universe) {
      semantic("field \"" + field + "\": index " + std::to_string(i) + " out of range (universe size " +
               std::to_string(universe) + ")");
    }
    out.insert(i);
  }
  return out;
}

PersuasionInstance persuasion_from_json(const Json& doc) {
  check_keys(doc, {"type", "outcomes", "weights", "facts", "focal", "threshold"});
  const auto& outcomes = doc["outcomes"];
  const auto& weights = doc["weights"];
  if (!outcomes.is_array()) semantic("field \"outcomes\": expected an array of labels");
  if (!weights.is_array()) semantic("field \"weights\": expected an array of rationals");
  std::vector<std::string> labels;
  for (const auto& o : outcomes) {
    if (!o.is_string()) semantic("field \"outcomes\": labels must be strings");
    labels.push_back(o.get<std::string>());
  }
  std::vector<Rational> ws;
  for (const auto& w : weights) ws.push_back(rational_value(w, "weights"));

  std::optional<ProbabilitySpace> space;
  try {
    space = make_space(std::move(labels), std::move(ws));
  } catch (const Error& e) {
    switch (e.code()) {
      case Errc::weights_not_summing_to_one: semantic(std::string("normalization invariant violated: ") + e.what());
      case Errc::negative_weight: semantic(std::string("non-negativity invariant violated: ") + e.what());
      case Errc::duplicate_label: semantic(std::string("unique-label invariant violated: ") + e.what());
      default: semantic(std::string("fields \"outcomes\"/\"weights\": ") + e.what());
    }
  }

  const std::size_t n = space->size();
  const auto& facts_json = doc["facts"];
  if (!facts_json.is_array()) semantic("field \"facts\": expected an array of index arrays");
  std::vector<EventSet> facts;
  for (std::size_t i = 0; i < facts_json.size(); ++i) {
    facts.push_back(index_set(facts_json[i], n, "facts[" + std::to_string(i) + "]"));
  }
  EventSet focal = index_set(doc["focal"], n, "focal");
  Rational threshold = rational_value(doc["threshold"], "threshold");
  PersuasionInstance inst{std::move(*space), std::move(focal), std::move(facts), std::move(threshold)};
  try {
    validate(inst);
  } catch (const Error& e) {
    semantic(std::string("field \"threshold\": ") + e.what());
  }
  return inst;
}

ExactCoverInstance exact_cover_from_json(const Json& doc) {
  check_keys(doc, {"type", "universe", "blocks"});
  ExactCoverInstance xc;
  xc.universe_size = index_value(doc["universe"], "universe");
  const auto& blocks = doc["blocks"];
  if (!blocks.is_array()) semantic("field \"blocks\": expected an array of index arrays");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    xc.blocks.push_back(index_set(blocks[i], xc.universe_size, "blocks[" + std::to_string(i) + "]"));
  }
  return xc;
}

Json index_array(const EventSet& s) {
  Json arr = Json::array();
  s.for_each([&](std::size_t i) { arr.push_back(i); });
  return arr;
}

std::string render(const std::vector<std::pair<std::string, Json>>& fields) {
  std::string out = "{\n";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    out += "  " + Json(fields[i].first).dump() + ": " + fields[i].second.dump();
    out += i + 1 < fields.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

AnyInstance parse_instance(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_and_column(text, byte);
    throw SyntaxError(line, column, "malformed JSON");
  }
  if (!doc.is_object()) throw SyntaxError(1, 1, "top level must be a JSON object");
  if (!doc.contains("type") || !doc["type"].is_string()) semantic("missing string key \"type\"");
  const auto type = doc["type"].get<std::string>();
  if (type == "persuasion") return persuasion_from_json(doc);
  if (type == "exact_cover") return exact_cover_from_json(doc);
  semantic("field \"type\": unknown instance type \"" + type + "\"");
}

PersuasionInstance parse_persuasion(std::string_view text) {
  auto any = parse_instance(text);
  if (auto* p = std::get_if<PersuasionInstance>(&any)) return std::move(*p);
  semantic("field \"type\": expected \"persuasion\"");
}

ExactCoverInstance parse_exact_cover(std::string_view text) {
  auto any = parse_instance(text);
  if (auto* p = std::get_if<ExactCoverInstance>(&any)) return std::move(*p);
  semantic("field \"type\": expected \"exact_cover\"");
}

std::string serialize_instance(const PersuasionInstance& instance) {
  Json outcomes = instance.space.labels();
  Json weights = Json::array();
  for (const auto& w : instance.space.weights()) weights.push_back(w.str());
  Json facts = Json::array();
  for (const auto& f : instance.facts) facts.push_back(index_array(f));
  return render({{"type", "persuasion"},
                 {"outcomes", outcomes},
                 {"weights", weights},
                 {"facts", facts},
                 {"focal", index_array(instance.focal)},
                 {"threshold", instance.threshold.str()}});
}

std::string serialize_instance(const ExactCoverInstance& instance) {
  Json blocks = Json::array();
  for (const auto& b : instance.blocks) blocks.push_back(index_array(b));
  return render({{"type", "exact_cover"}, {"universe", instance.universe_size}, {"blocks", blocks}});
}

std::string serialize_instance(const AnyInstance& instance) {
  return std::visit([](const auto& inst) { return serialize_instance(inst); }, instance);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace persuasion
