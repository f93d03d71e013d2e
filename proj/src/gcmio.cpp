#include "wm/gcmio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace wm {

Gcm load_gcm_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::ParseError, std::string("matrix file: ") + e.what());
  }
  if (!doc.is_object())
    fail(Errc::ParseError, "matrix file must contain a single object");
  for (const auto& item : doc.items())
    if (item.key() != "A" && item.key() != "name")
      fail(Errc::ParseError, "unknown key \"" + item.key() + "\"");
  if (!doc.contains("A") || !doc["A"].is_array())
    fail(Errc::ParseError, "key \"A\" must map to a list of rows");
  std::vector<std::vector<Entry>> rows;
  const size_t n = doc["A"].size();
  for (const auto& row : doc["A"]) {
    if (!row.is_array() || row.size() != n)
      fail(Errc::ParseError, "ragged or non-square rows under \"A\"");
    std::vector<Entry> r;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        fail(Errc::ParseError, "matrix entries must be integers");
      r.push_back(v.get<Entry>());
    }
    rows.push_back(std::move(r));
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string())
      fail(Errc::ParseError, "key \"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  return Gcm::validate(rows, name);
}

Gcm load_gcm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_gcm_text(buf.str());
}

}  // namespace wm
