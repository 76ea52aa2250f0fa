#include "meshperm/io.hpp"

#include <json.hpp>

#include "meshperm/error.hpp"

namespace meshperm {

using nlohmann::ordered_json;

std::string table_to_json(const JointTable& t, std::string_view q1, std::string_view q2,
                          TableSource source) {
  ordered_json doc;
  doc["n"] = t.n();
  doc["q1"] = q1;
  doc["q2"] = q2;
  doc["counts"] = t.matrix();
  if (source != TableSource::unspecified) {
    doc["source"] = source == TableSource::closed_form ? "closed_form" : "brute_force";
  }
  return doc.dump(2) + "\n";
}

TableDocument table_from_json(std::string_view text) {
  try {
    const auto doc = ordered_json::parse(text);
    TableDocument out;
    out.table = JointTable(doc.at("n").get<int>(),
                           doc.at("counts").get<std::vector<std::vector<Count>>>());
    out.q1 = doc.at("q1").get<std::string>();
    out.q2 = doc.at("q2").get<std::string>();
    if (doc.contains("source")) {
      const auto s = doc["source"].get<std::string>();
      if (s == "closed_form") {
        out.source = TableSource::closed_form;
      } else if (s == "brute_force") {
        out.source = TableSource::brute_force;
      } else {
        throw ParseError("unknown table source '" + s + "'");
      }
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad table document: ") + e.what());
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("bad table document: ") + e.what());
  }
}

std::string table_to_csv(const JointTable& t) {
  std::string out = "k,l,count\n";
  for (int k = 0; k < t.rows(); ++k) {
    for (int l = 0; l < t.cols(); ++l) {
      if (const Count c = t.at(k, l); c != 0) {
        out += std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(c) + "\n";
      }
    }
  }
  return out;
}

std::string report_to_json(const BijectionReport& r) {
  ordered_json doc;
  doc["map"] = r.map;
  doc["pair"] = r.pair;
  doc["n"] = r.n;
  doc["pass"] = r.pass;
  doc["counterexample"] = r.counterexample ? ordered_json(*r.counterexample) : ordered_json(nullptr);
  ordered_json stats = ordered_json::object();
  for (const auto& [key, value] : r.stats) stats[key] = value;
  doc["stats"] = stats;
  return doc.dump(2) + "\n";
}

}  // namespace meshperm
