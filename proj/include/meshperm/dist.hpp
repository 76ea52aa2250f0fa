#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "meshperm/checked.hpp"
#include "meshperm/mesh.hpp"
#include "meshperm/permutation.hpp"

namespace meshperm {

// T[k][l]: number of n-permutations with k occurrences of q1 and l of q2.
// Dimensions follow the largest observed counts; trailing zero rows and
// columns are never stored, so equal tables compare equal.
class JointTable {
 public:
  JointTable() = default;
  explicit JointTable(int n) : n_(n) {}
  // Throws InvalidInput on negative or ragged input.
  JointTable(int n, std::vector<std::vector<Count>> counts);

  int n() const { return n_; }
  int rows() const { return static_cast<int>(counts_.size()); }
  int cols() const { return cols_; }

  // Zero outside the stored range, including negative indices.
  Count at(int k, int l) const;
  void add(int k, int l, Count v);

  // Rectangular rows() x cols() matrix.
  std::vector<std::vector<Count>> matrix() const;
  Count total() const;

  bool operator==(const JointTable&) const = default;

 private:
  void trim();

  int n_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Count>> counts_;
};

// Polynomial in x and y with exact integer coefficients, indexed
// [degree in x][degree in y]. Canonical: no trailing zero rows or columns.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<std::vector<Count>> coefficients);

  static BivarPoly constant(Count c);
  static BivarPoly x();
  static BivarPoly y();

  Count coefficient(int i, int j) const;
  int x_degree_bound() const { return static_cast<int>(coeffs_.size()); }
  int y_degree_bound() const;
  bool is_zero() const { return coeffs_.empty(); }

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;

  // Value at y = 1, as coefficients of x^0, x^1, ...
  std::vector<Count> at_y_one() const;

  // Terms by descending total degree, then descending x-degree:
  // "x^2 + y^2 + 6x + 6y + 10". The zero polynomial renders as "0".
  std::string to_string() const;

  bool operator==(const BivarPoly&) const = default;

 private:
  void trim();
  std::vector<std::vector<Count>> coeffs_;
};

struct DistributionOptions {
  int workers = 1;
  int limit = default_capacity();
};

JointTable joint_distribution(int n, const MeshPattern& q1, const MeshPattern& q2,
                              const DistributionOptions& options = {});

// Part of the joint distribution over permutations whose first entry is
// first_entry.
JointTable joint_distribution_partial(int n, int first_entry, const MeshPattern& q1,
                                      const MeshPattern& q2, int limit = default_capacity());

// Elementwise sum. Throws InvalidInput if the tables are for different n.
// An empty table (no entries) is the identity.
JointTable merge(const JointTable& a, const JointTable& b);

bool is_jointly_symmetric(const JointTable& t);

enum class Axis { first, second };
std::vector<Count> marginal(const JointTable& t, Axis axis);

BivarPoly to_polynomial(const JointTable& t);

// Index c of the result: number of n-permutations with exactly c
// occurrences of q.
std::vector<Count> occurrence_distribution(int n, const MeshPattern& q,
                                           int limit = default_capacity());

Count avoider_count(int n, const MeshPattern& q, int limit = default_capacity());

// A joint table split into up to three disjoint classes of permutations.
struct SplitTable {
  int n = 0;
  std::array<JointTable, 3> parts;
  JointTable total() const;
};

// Maps a permutation to its class index 0..2.
using SplitClassifier = std::function<int(const Permutation&)>;

// 0 when p_1 > p_2, 1 when p_1 < p_2. Requires n >= 2.
int classify_by_first_two(const Permutation& p);
// 0 when p_1 = n, 1 when p_n = n, 2 otherwise. Requires n >= 2.
int classify_by_max_position(const Permutation& p);

SplitTable split_distribution(int n, const MeshPattern& q1, const MeshPattern& q2,
                              const SplitClassifier& classify,
                              int limit = default_capacity());

}  // namespace meshperm
