#include "braidquot/presentation_json.hpp"

#include <json.hpp>

namespace braidquot {

using ordered_json = nlohmann::ordered_json;

std::string to_json(Presentation const &p)
{
  ordered_json doc;
  doc["label"] = p.label();

  auto gens = ordered_json::array();
  for (auto const &g : p.generators())
    gens.push_back(g.display_name);
  doc["generators"] = std::move(gens);

  auto rels = ordered_json::array();
  for (auto const &r : p.relators())
    rels.push_back(std::vector<int>(r.begin(), r.end()));
  doc["relators"] = std::move(rels);

  return doc.dump();
}

Presentation presentation_from_json(std::string_view text)
{
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (nlohmann::json::parse_error const &e) {
    throw JsonFormatError(std::string("malformed JSON: ") + e.what());
  }

  if (!doc.is_object())
    throw JsonFormatError("presentation must be a JSON object");
  for (auto const *key : {"label", "generators", "relators"}) {
    if (!doc.contains(key))
      throw JsonFormatError(std::string("missing key: ") + key);
  }
  if (!doc["label"].is_string())
    throw JsonFormatError("label must be a string");
  if (!doc["generators"].is_array())
    throw JsonFormatError("generators must be an array");
  if (!doc["relators"].is_array())
    throw JsonFormatError("relators must be an array");

  std::vector<std::string> names;
  for (auto const &g : doc["generators"]) {
    if (!g.is_string())
      throw JsonFormatError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }

  std::vector<Word> relators;
  for (auto const &r : doc["relators"]) {
    if (!r.is_array())
      throw JsonFormatError("each relator must be an array of integers");
    std::vector<Letter> letters;
    for (auto const &x : r) {
      if (!x.is_number_integer())
        throw JsonFormatError("relator letters must be integers");
      auto v = x.get<long long>();
      if (v == 0 || v > static_cast<long long>(names.size()) ||
          -v > static_cast<long long>(names.size()))
        throw JsonFormatError("relator letter " + std::to_string(v) +
                              " references an unknown generator");
      letters.push_back(static_cast<Letter>(v));
    }
    relators.emplace_back(std::move(letters));
  }

  try {
    return Presentation(doc["label"].get<std::string>(), std::move(names),
                        std::move(relators));
  } catch (std::invalid_argument const &e) {
    throw JsonFormatError(e.what());
  }
}

} // namespace braidquot
