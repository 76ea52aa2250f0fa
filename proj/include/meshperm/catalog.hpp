#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "meshperm/mesh.hpp"

namespace meshperm {

enum class Family { symmetric, minus_antipodal };
enum class Status { proven, conjectured };
enum class Method { complement_reverse, element_swap, recurrence, closed_form, conjecture };

std::string_view to_string(Family f);
std::string_view to_string(Status s);
std::string_view to_string(Method m);

struct PatternPair {
  std::string id;
  MeshPattern q1;
  MeshPattern q2;
  Family family = Family::symmetric;
  std::string frame;
  Status status = Status::proven;
  Method method = Method::complement_reverse;
};

struct CatalogWarning {
  int line = 0;
  std::string pair_id;
  std::string message;
};

struct LoadedCatalog {
  std::vector<PatternPair> pairs;
  std::vector<CatalogWarning> warnings;
};

// Method tag of a known pair id (S1..S22, A1..A36). Throws InvalidInput for
// any other id.
Method method_for_id(std::string_view id);

// Throws ParseError (with line number) on malformed lines and
// InvariantError (with the pair id) when an entry breaks a pair invariant.
LoadedCatalog parse_catalog(std::string_view text);
LoadedCatalog load_catalog(const std::filesystem::path& path);

std::string_view builtin_catalog_text();
// S1..S22 then A1..A36.
const std::vector<PatternPair>& builtin_catalog();

// Throws InvalidInput naming the id if it is absent.
const PatternPair& find_pair(const std::vector<PatternPair>& catalog, std::string_view id);

// Pairs grouped by frame, frames and members in catalog order.
std::vector<std::vector<const PatternPair*>> frames(const std::vector<PatternPair>& catalog);

// One documented chain of pattern operations. start is a pair id (the
// whole pair is carried along) or a pattern text. ops uses c, r, i; an
// expected target is a pair id or a pattern text, or empty for an
// intermediate step.
struct ChainStep {
  std::string ops;
  std::string expected;
};

struct DerivationChain {
  std::string name;
  std::string start;
  std::vector<ChainStep> steps;
};

struct ChainResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct DerivationReport {
  std::vector<ChainResult> chains;
  bool pass() const;
};

const std::vector<DerivationChain>& documented_chains();

MeshPattern apply_ops(const MeshPattern& p, std::string_view ops);

// Recomputes every documented chain, and for each complement_reverse pair
// confirms q2 is the complement or the reverse of q1.
DerivationReport validate_symmetry_derivations(const std::vector<PatternPair>& catalog);

}  // namespace meshperm
