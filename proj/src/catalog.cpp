#include "meshperm/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "meshperm/error.hpp"

namespace meshperm {

namespace detail {
extern const char* const kBuiltinCatalog;
}

std::string_view to_string(Family f) {
  return f == Family::symmetric ? "symmetric" : "minus_antipodal";
}

std::string_view to_string(Status s) { return s == Status::proven ? "proven" : "conjectured"; }

std::string_view to_string(Method m) {
  switch (m) {
    case Method::complement_reverse: return "complement_reverse";
    case Method::element_swap: return "element_swap";
    case Method::recurrence: return "recurrence";
    case Method::closed_form: return "closed_form";
    case Method::conjecture: return "conjecture";
  }
  return "";
}

namespace {

int id_number(std::string_view id, char table) {
  if (id.size() < 2 || id[0] != table) return 0;
  int number = 0;
  const auto [ptr, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), number);
  if (ec != std::errc() || ptr != id.data() + id.size() || id[1] == '0') return 0;
  return number;
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

}  // namespace

Method method_for_id(std::string_view id) {
  if (const int s = id_number(id, 'S'); s >= 1 && s <= 22) {
    if (s <= 8) return Method::complement_reverse;
    if (s <= 18) return Method::element_swap;
    if (s <= 20) return Method::recurrence;
    return Method::conjecture;
  }
  if (const int a = id_number(id, 'A'); a >= 1 && a <= 36) {
    if (a <= 16) return Method::complement_reverse;
    if (a <= 24) return Method::closed_form;
    return Method::recurrence;
  }
  throw InvalidInput("unknown pair id '" + std::string(id) + "'");
}

LoadedCatalog parse_catalog(std::string_view text) {
  LoadedCatalog out;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;
    if (words.size() != 6) {
      throw ParseError("expected 6 fields, found " + std::to_string(words.size()), line_no);
    }
    PatternPair pair;
    pair.id = words[0];
    try {
      pair.method = method_for_id(pair.id);
    } catch (const InvalidInput& e) {
      throw ParseError(e.what(), line_no);
    }
    if (!seen.insert(pair.id).second) throw InvariantError(pair.id, "listed twice");

    if (words[1] == "symmetric") {
      pair.family = Family::symmetric;
    } else if (words[1] == "minus_antipodal") {
      pair.family = Family::minus_antipodal;
    } else {
      throw ParseError("unknown family '" + words[1] + "'", line_no);
    }
    pair.frame = words[2];
    if (words[3] == "proven") {
      pair.status = Status::proven;
    } else if (words[3] == "conjectured") {
      pair.status = Status::conjectured;
    } else {
      throw ParseError("unknown status '" + words[3] + "'", line_no);
    }

    auto read_pattern = [&](const std::string& word, const char* slot) {
      ParsedPattern parsed;
      try {
        parsed = parse_pattern_text(word);
      } catch (const Error& e) {
        throw ParseError(std::string(slot) + ": " + e.what(), line_no);
      }
      if (parsed.duplicate_boxes > 0) {
        out.warnings.push_back({line_no, pair.id,
                                std::string(slot) + ": dropped " +
                                    std::to_string(parsed.duplicate_boxes) + " duplicate box" +
                                    (parsed.duplicate_boxes == 1 ? "" : "es")});
      }
      return parsed.pattern;
    };
    pair.q1 = read_pattern(words[4], "q1");
    pair.q2 = read_pattern(words[5], "q2");

    if (pair.q1.tau() != Permutation::parse("123")) throw InvariantError(pair.id, "q1 must be on 123");
    if (pair.q2.tau() != Permutation::parse("321")) throw InvariantError(pair.id, "q2 must be on 321");
    for (const MeshPattern* q : {&pair.q1, &pair.q2}) {
      const ShadingClass cls = classify_shading(*q);
      if (pair.family == Family::symmetric && !cls.symmetric) {
        throw InvariantError(pair.id, "shading " + q->to_string() + " is not symmetric");
      }
      if (pair.family == Family::minus_antipodal && !cls.minus_antipodal) {
        throw InvariantError(pair.id, "shading " + q->to_string() + " is not minus-antipodal");
      }
    }
    if (pair.family == Family::symmetric &&
        !std::ranges::equal(pair.q1.shading(), pair.q2.shading())) {
      throw InvariantError(pair.id, "symmetric pair needs identical shadings");
    }
    const bool conjectured = pair.method == Method::conjecture;
    if (conjectured != (pair.status == Status::conjectured)) {
      throw InvariantError(pair.id, conjectured ? "must be marked conjectured"
                                                : "only S21 and S22 are conjectured");
    }
    out.pairs.push_back(std::move(pair));
  }
  return out;
}

LoadedCatalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read catalog " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_catalog(buffer.str());
}

std::string_view builtin_catalog_text() { return detail::kBuiltinCatalog; }

const std::vector<PatternPair>& builtin_catalog() {
  static const std::vector<PatternPair> pairs = parse_catalog(builtin_catalog_text()).pairs;
  return pairs;
}

const PatternPair& find_pair(const std::vector<PatternPair>& catalog, std::string_view id) {
  const auto it = std::ranges::find(catalog, id, &PatternPair::id);
  if (it == catalog.end()) throw InvalidInput("unknown pair id '" + std::string(id) + "'");
  return *it;
}

std::vector<std::vector<const PatternPair*>> frames(const std::vector<PatternPair>& catalog) {
  std::vector<std::vector<const PatternPair*>> groups;
  std::map<std::string, std::size_t> index;
  for (const PatternPair& p : catalog) {
    auto [it, fresh] = index.try_emplace(p.frame, groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(&p);
  }
  return groups;
}

bool DerivationReport::pass() const {
  return std::ranges::all_of(chains, &ChainResult::pass);
}

const std::vector<DerivationChain>& documented_chains() {
  static const std::vector<DerivationChain> chains = {
      {"figure pattern c,r,i",
       "123|0,0;1,2;2,1;3,1",
       {{"c", "321|0,3;1,1;2,2;3,2"}, {"r", "123|0,2;1,2;2,1;3,3"}, {"i", "123|2,0;2,1;1,2;3,3"}}},
      {"S9 to S10", "S9", {{"cr", "S10"}}},
      {"S11 to S12", "S11", {{"cr", "S12"}}},
      {"S13 to S14", "S13", {{"c", "S14"}}},
      {"S15 to S16", "S15", {{"cr", "S16"}}},
      {"S17 to S18", "S17", {{"cr", "S18"}}},
      {"S19 to S20", "S19", {{"c", ""}, {"r", "S20"}}},
      {"S21 to S22", "S21", {{"c", ""}, {"r", "S22"}}},
      {"A1 row", "A1", {{"r", "A3"}, {"i", "A4"}, {"c", "A2"}}},
      {"A5 row", "A5", {{"r", "A7"}, {"i", "A8"}, {"c", "A6"}}},
      {"A9 row", "A9", {{"c", "A10"}, {"i", "A11"}, {"r", "A12"}}},
      {"A13 row", "A13", {{"c", "A15"}, {"i", "A16"}, {"r", "A14"}}},
      {"A17 by c,r,c", "A17", {{"c", "A18"}, {"r", "A22"}, {"c", "A21"}}},
      {"A17 by i,r,c,r", "A17", {{"i", "A19"}, {"r", "A20"}, {"c", "A23"}, {"r", "A24"}}},
      {"A25 by r,c,r", "A25", {{"r", "A32"}, {"c", "A27"}, {"r", "A28"}}},
      {"A25 by i,c,r,c", "A25", {{"i", "A30"}, {"c", "A29"}, {"r", "A31"}, {"c", "A26"}}},
      {"A33 by cr", "A33", {{"cr", "A34"}}},
      {"A33 by i,cr", "A33", {{"i", "A35"}, {"cr", "A36"}}},
      {"tilde pattern complement",
       "21|0,1;1,1;2,1;2,2",
       {{"c", "12|0,1;1,1;2,1;2,0"}}},
  };
  return chains;
}

MeshPattern apply_ops(const MeshPattern& p, std::string_view ops) {
  MeshPattern out = p;
  for (char op : ops) {
    switch (op) {
      case 'c': out = complement_pattern(out); break;
      case 'r': out = reverse_pattern(out); break;
      case 'i': out = inverse_pattern(out); break;
      default: throw InvalidInput(std::string("unknown pattern operation '") + op + "'");
    }
  }
  return out;
}

namespace {

bool is_pattern_text(std::string_view s) { return s.find('|') != std::string_view::npos; }

ChainResult run_chain(const DerivationChain& chain, const std::vector<PatternPair>& catalog) {
  ChainResult result{chain.name, true, ""};
  std::vector<MeshPattern> running;
  if (is_pattern_text(chain.start)) {
    running.push_back(MeshPattern::parse(chain.start));
  } else {
    const PatternPair& source = find_pair(catalog, chain.start);
    running = {source.q1, source.q2};
  }
  std::string path = chain.start;
  for (const ChainStep& step : chain.steps) {
    for (MeshPattern& p : running) p = apply_ops(p, step.ops);
    path += " -" + step.ops + "->";
    if (step.expected.empty()) continue;
    path += " " + step.expected;
    bool ok = false;
    if (is_pattern_text(step.expected)) {
      ok = running.size() == 1 && running[0] == MeshPattern::parse(step.expected);
    } else {
      const PatternPair& target = find_pair(catalog, step.expected);
      if (running.size() == 2) {
        ok = (running[0] == target.q1 && running[1] == target.q2) ||
             (running[0] == target.q2 && running[1] == target.q1);
      }
    }
    if (!ok) {
      result.pass = false;
      std::string got;
      for (const MeshPattern& p : running) got += (got.empty() ? "" : " ") + p.to_string();
      result.detail = "mismatch at " + step.expected + ": got " + got;
      return result;
    }
  }
  result.detail = path;
  return result;
}

}  // namespace

DerivationReport validate_symmetry_derivations(const std::vector<PatternPair>& catalog) {
  DerivationReport report;
  for (const DerivationChain& chain : documented_chains()) {
    try {
      report.chains.push_back(run_chain(chain, catalog));
    } catch (const Error& e) {
      report.chains.push_back({chain.name, false, e.what()});
    }
  }
  for (const PatternPair& p : catalog) {
    if (p.method != Method::complement_reverse) continue;
    ChainResult r{p.id + " internal", false, ""};
    if (complement_pattern(p.q1) == p.q2) {
      r.pass = true;
      r.detail = "q2 = complement of q1";
    } else if (reverse_pattern(p.q1) == p.q2) {
      r.pass = true;
      r.detail = "q2 = reverse of q1";
    } else {
      r.detail = "q2 is neither the complement nor the reverse of q1";
    }
    report.chains.push_back(std::move(r));
  }
  return report;
}

}  // namespace meshperm
