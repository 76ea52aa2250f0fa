#include "meshperm/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>

#include "meshperm/bijections.hpp"
#include "meshperm/catalog.hpp"
#include "meshperm/checks.hpp"
#include "meshperm/closed_forms.hpp"
#include "meshperm/dist.hpp"
#include "meshperm/error.hpp"
#include "meshperm/io.hpp"
#include "meshperm/mesh.hpp"

namespace meshperm::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> ids;
  std::string current;
  for (char ch : text + ",") {
    if (ch == ',') {
      if (!current.empty()) ids.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  return ids;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path.string());
  file << text;
}

std::string render_report(const CheckReport& report, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const CheckLine& l : report.lines) {
      doc.push_back({{"name", l.name}, {"pass", l.pass}, {"fatal", l.fatal}, {"detail", l.detail}});
    }
    nlohmann::ordered_json wrapped;
    wrapped["pass"] = report.pass();
    wrapped["checks"] = doc;
    return wrapped.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = "name,pass,fatal,detail\n";
    for (const CheckLine& l : report.lines) {
      out += l.name + "," + (l.pass ? "true" : "false") + "," + (l.fatal ? "true" : "false") +
             ",\"" + l.detail + "\"\n";
    }
    return out;
  }
  std::string out;
  for (const CheckLine& l : report.lines) {
    const char* tag = l.pass ? "PASS" : (l.fatal ? "FAIL" : "NOTE");
    out += std::string(tag) + "  " + l.name + ": " + l.detail + "\n";
  }
  out += report.pass() ? "all asserted checks pass\n" : "some asserted checks failed\n";
  return out;
}

std::string render_table(const JointTable& t, const PatternPair& p, Format format,
                         TableSource source) {
  if (format == Format::csv) return table_to_csv(t);
  return table_to_json(t, p.q1.to_string(), p.q2.to_string(), source);
}

JointTable table_of(const BivarPoly& poly, int n) {
  JointTable t(n);
  for (int i = 0; i < poly.x_degree_bound(); ++i) {
    for (int j = 0; j < poly.y_degree_bound(); ++j) t.add(i, j, poly.coefficient(i, j));
  }
  return t;
}

// Closed-form table of the pair's frame, if one exists.
std::optional<JointTable> closed_form_table(const PatternPair& p, int n, int limit) {
  if (n < 2) return std::nullopt;
  if (p.frame == "S19-S20") return thm21_tables(n).total();
  if (p.frame == "A17-A24") return thm32_table(n);
  if (p.frame == "A33-A36") return table_of(thm34_polynomial(n), n);
  if (p.frame == "A25-A32" && n >= 3) {
    const PatternPair& a25 = find_pair(builtin_catalog(), "A25");
    return thm33_tables(n, split_distribution(3, a25.q1, a25.q2, classify_by_max_position, limit))
        .total();
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of mesh patterns 123 and 321", "meshperm"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string pairs_text = "all";
  std::string format_text = "text";
  std::optional<int> n_flag;
  app.add_option("--n", n_flag, "Largest n (default 7)");
  app.add_option("--pairs", pairs_text, "Comma-separated pair ids, or all");
  app.add_option("--format", format_text, "json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", config.out_path, "Output path");
  app.add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--strict", config.strict, "Treat conjecture failures as errors");

  std::string perm_text;
  std::string pattern_text;
  auto* count = app.add_subcommand("count", "Count occurrences of a pattern");
  count->add_option("perm", perm_text, "Permutation, e.g. 23154")->required();
  count->add_option("pattern", pattern_text, "Pattern, e.g. \"123|0,0;1,2\"")->required();

  std::string pair_id;
  std::optional<int> n_positional;
  auto* table = app.add_subcommand("table", "Joint distribution of a pair");
  table->add_option("pair", pair_id, "Pair id")->required();
  table->add_option("n", n_positional, "Permutation length");

  app.add_subcommand("verify", "Joint symmetry and frame checks");
  app.add_subcommand("crosscheck", "Closed forms against brute force");

  std::string map_text;
  auto* bijection = app.add_subcommand("bijection", "Check a swap map exhaustively");
  bijection->add_option("pair", pair_id, "Pair id")->required();
  bijection->add_option("--map", map_text, "Map id (default: the pair's own)");

  std::string catalog_path;
  auto* catalog = app.add_subcommand("catalog", "Catalog tools");
  auto* validate = catalog->add_subcommand("validate", "Validate a catalog");
  catalog->require_subcommand(1);
  validate->add_option("file", catalog_path, "Catalog file (default: built in)");

  bool closed_form = false;
  auto* exporter = app.add_subcommand("export", "Write tables for the selected pairs");
  exporter->add_flag("--closed-form", closed_form, "Also write closed-form tables");

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    config.format = format_text == "json" ? Format::json
                    : format_text == "csv" ? Format::csv
                                           : Format::text;
    if (pairs_text != "all") config.pairs = split_ids(pairs_text);
    const int limit = default_capacity();
    if (n_flag) config.n_max = *n_flag;
    if (config.n_max < 0 || config.n_max > limit) throw CapacityError(config.n_max, limit);
    const std::vector<PatternPair>& builtin = builtin_catalog();
    for (const std::string& id : config.pairs) find_pair(builtin, id);
    const DistributionOptions options{config.workers, limit};

    auto emit = [&](const std::string& text) {
      if (config.out_path.empty()) {
        out << text;
      } else {
        write_file(config.out_path, text);
      }
    };

    if (*count) {
      const Permutation pi = Permutation::parse(perm_text);
      const MeshPattern pat = parse_pattern_text(pattern_text).pattern;
      out << count_occurrences(pi, pat) << "\n";
      return kExitPass;
    }

    if (*table) {
      const PatternPair& p = find_pair(builtin, pair_id);
      const int n = n_positional ? *n_positional : config.n_max;
      check_capacity(n, limit);
      const JointTable t = joint_distribution(n, p.q1, p.q2, options);
      if (!config.out_path.empty()) {
        write_file(config.out_path, render_table(t, p, config.format == Format::csv ? Format::csv
                                                                                    : Format::json,
                                                 TableSource::brute_force));
        out << to_polynomial(t).to_string() << "\n";
      } else if (config.format == Format::text) {
        out << to_polynomial(t).to_string() << "\n";
      } else {
        out << render_table(t, p, config.format, TableSource::brute_force);
      }
      return kExitPass;
    }

    if (app.got_subcommand("verify")) {
      TableCache cache(builtin, options);
      const CheckReport report =
          run_verify(cache, VerifyOptions{config.n_max, config.pairs, config.strict});
      emit(render_report(report, config.format));
      return report.pass() ? kExitPass : kExitFailure;
    }

    if (app.got_subcommand("crosscheck")) {
      TableCache cache(builtin, options);
      const CheckReport report = run_crosscheck(cache, config.n_max);
      emit(render_report(report, config.format));
      return report.pass() ? kExitPass : kExitFailure;
    }

    if (*bijection) {
      const PatternPair& p = find_pair(builtin, pair_id);
      SwapMap map;
      if (!map_text.empty()) {
        map = parse_swap_map(map_text);
      } else if (auto m = default_map_for(p)) {
        map = *m;
      } else {
        throw UsageError("pair " + p.id + " has no map; pass --map");
      }
      const int n = n_flag ? *n_flag : 6;
      const BijectionReport report = verify_swap_bijection(map, n, p, limit);
      emit(report_to_json(report));
      return report.pass ? kExitPass : kExitFailure;
    }

    if (*validate) {
      LoadedCatalog loaded;
      try {
        loaded = catalog_path.empty() ? parse_catalog(builtin_catalog_text())
                                      : load_catalog(catalog_path);
      } catch (const ParseError& e) {
        err << "catalog line " << e.line() << ": " << e.what() << "\n";
        return kExitFailure;
      } catch (const InvariantError& e) {
        err << "catalog pair " << e.pair_id() << ": " << e.what() << "\n";
        return kExitFailure;
      }
      for (const CatalogWarning& w : loaded.warnings) {
        err << "warning: line " << w.line << " (" << w.pair_id << "): " << w.message << "\n";
      }
      const DerivationReport chains = validate_symmetry_derivations(loaded.pairs);
      CheckReport report;
      report.add({"catalog size", loaded.pairs.size() == 58,
                  std::to_string(loaded.pairs.size()) + " pairs", true});
      for (const ChainResult& c : chains.chains) report.add({c.name, c.pass, c.detail, true});
      emit(render_report(report, config.format));
      return report.pass() ? kExitPass : kExitFailure;
    }

    if (*exporter) {
      std::vector<const PatternPair*> selected;
      if (config.pairs.empty()) {
        for (const PatternPair& p : builtin) selected.push_back(&p);
      } else {
        for (const std::string& id : config.pairs) selected.push_back(&find_pair(builtin, id));
      }
      const Format format = config.format == Format::csv ? Format::csv : Format::json;
      const std::string ext = format == Format::csv ? ".csv" : ".json";
      std::string combined;
      auto put = [&](const std::string& name, const std::string& text) {
        if (config.out_path.empty()) {
          combined += text;
        } else {
          write_file(std::filesystem::path(config.out_path) / (name + ext), text);
        }
      };
      for (const PatternPair* p : selected) {
        for (int n = 2; n <= config.n_max; ++n) {
          const JointTable t = joint_distribution(n, p->q1, p->q2, options);
          put(p->id + "-n" + std::to_string(n) + "-brute_force",
              render_table(t, *p, format, TableSource::brute_force));
          if (!closed_form) continue;
          if (const auto closed = closed_form_table(*p, n, limit)) {
            put(p->id + "-n" + std::to_string(n) + "-closed_form",
                render_table(*closed, *p, format, TableSource::closed_form));
          }
        }
      }
      if (config.out_path.empty()) out << combined;
      return kExitPass;
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace meshperm::cli
