#include "meshperm/dist.hpp"

#include <algorithm>
#include <thread>

#include "meshperm/error.hpp"

namespace meshperm {

JointTable::JointTable(int n, std::vector<std::vector<Count>> counts) : n_(n) {
  std::size_t width = counts.empty() ? 0 : counts.front().size();
  for (const auto& row : counts) {
    if (row.size() != width) throw InvalidInput("joint table rows differ in length");
    for (Count c : row) {
      if (c < 0) throw InvalidInput("joint table entries must be nonnegative");
    }
  }
  counts_ = std::move(counts);
  cols_ = static_cast<int>(width);
  trim();
}

Count JointTable::at(int k, int l) const {
  if (k < 0 || l < 0 || k >= rows() || l >= static_cast<int>(counts_[k].size())) return 0;
  return counts_[k][l];
}

void JointTable::add(int k, int l, Count v) {
  if (k < 0 || l < 0) throw InvalidInput("negative joint table index");
  if (v == 0) return;
  if (k >= rows()) counts_.resize(k + 1);
  if (l >= cols_) cols_ = l + 1;
  for (auto& row : counts_) row.resize(cols_, 0);
  const Count updated = checked_add(counts_[k][l], v);
  if (updated < 0) throw InvalidInput("joint table entry would become negative");
  counts_[k][l] = updated;
  trim();
}

std::vector<std::vector<Count>> JointTable::matrix() const { return counts_; }

Count JointTable::total() const {
  Count sum = 0;
  for (const auto& row : counts_) {
    for (Count c : row) sum = checked_add(sum, c);
  }
  return sum;
}

void JointTable::trim() {
  while (!counts_.empty() &&
         std::all_of(counts_.back().begin(), counts_.back().end(), [](Count c) { return c == 0; })) {
    counts_.pop_back();
  }
  int width = 0;
  for (const auto& row : counts_) {
    for (int l = static_cast<int>(row.size()) - 1; l >= width; --l) {
      if (row[l] != 0) {
        width = l + 1;
        break;
      }
    }
  }
  cols_ = counts_.empty() ? 0 : width;
  for (auto& row : counts_) row.resize(cols_);
}

BivarPoly::BivarPoly(std::vector<std::vector<Count>> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

using Grid = std::vector<std::vector<Count>>;

BivarPoly BivarPoly::constant(Count c) { return BivarPoly(Grid{{c}}); }
BivarPoly BivarPoly::x() { return BivarPoly(Grid{{0}, {1}}); }
BivarPoly BivarPoly::y() { return BivarPoly(Grid{{0, 1}}); }

Count BivarPoly::coefficient(int i, int j) const {
  if (i < 0 || j < 0 || i >= x_degree_bound() || j >= static_cast<int>(coeffs_[i].size())) {
    return 0;
  }
  return coeffs_[i][j];
}

int BivarPoly::y_degree_bound() const {
  std::size_t w = 0;
  for (const auto& row : coeffs_) w = std::max(w, row.size());
  return static_cast<int>(w);
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  const int rows = std::max(x_degree_bound(), o.x_degree_bound());
  const int cols = std::max(y_degree_bound(), o.y_degree_bound());
  std::vector<std::vector<Count>> c(rows, std::vector<Count>(cols, 0));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) c[i][j] = checked_add(coefficient(i, j), o.coefficient(i, j));
  }
  return BivarPoly(std::move(c));
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  return *this + o * constant(-1);
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  const int rows = x_degree_bound() + o.x_degree_bound() - 1;
  const int cols = y_degree_bound() + o.y_degree_bound() - 1;
  std::vector<std::vector<Count>> c(rows, std::vector<Count>(cols, 0));
  for (int i = 0; i < x_degree_bound(); ++i) {
    for (int j = 0; j < static_cast<int>(coeffs_[i].size()); ++j) {
      if (coeffs_[i][j] == 0) continue;
      for (int a = 0; a < o.x_degree_bound(); ++a) {
        for (int b = 0; b < static_cast<int>(o.coeffs_[a].size()); ++b) {
          c[i + a][j + b] = checked_add(c[i + a][j + b], checked_mul(coeffs_[i][j], o.coeffs_[a][b]));
        }
      }
    }
  }
  return BivarPoly(std::move(c));
}

std::vector<Count> BivarPoly::at_y_one() const {
  std::vector<Count> out(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (Count c : coeffs_[i]) out[i] = checked_add(out[i], c);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string BivarPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  const int max_total = x_degree_bound() + y_degree_bound();
  for (int total = max_total; total >= 0; --total) {
    for (int i = std::min(total, x_degree_bound() - 1); i >= 0; --i) {
      const int j = total - i;
      const Count c = coefficient(i, j);
      if (c == 0) continue;
      const Count magnitude = c < 0 ? -c : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      std::string monomial;
      if (i > 0) monomial += i == 1 ? "x" : "x^" + std::to_string(i);
      if (j > 0) monomial += j == 1 ? "y" : "y^" + std::to_string(j);
      if (magnitude != 1 || monomial.empty()) out += std::to_string(magnitude);
      out += monomial;
    }
  }
  return out;
}

void BivarPoly::trim() {
  for (auto& row : coeffs_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

JointTable joint_distribution_partial(int n, int first_entry, const MeshPattern& q1,
                                      const MeshPattern& q2, int limit) {
  JointTable table(n);
  for (const Permutation& pi : SnRange(n, first_entry, limit)) {
    auto [k, l] = joint_counts(pi, q1, q2);
    table.add(static_cast<int>(k), static_cast<int>(l), 1);
  }
  return table;
}

JointTable joint_distribution(int n, const MeshPattern& q1, const MeshPattern& q2,
                              const DistributionOptions& options) {
  check_capacity(n, options.limit);
  if (options.workers < 1) throw InvalidInput("worker count must be at least 1");
  if (n == 0) {
    JointTable table(0);
    table.add(0, 0, 1);
    return table;
  }
  std::vector<JointTable> parts(n, JointTable(n));
  if (options.workers == 1) {
    for (int first = 1; first <= n; ++first) {
      parts[first - 1] = joint_distribution_partial(n, first, q1, q2, options.limit);
    }
  } else {
    std::vector<std::jthread> pool;
    const int workers = std::min(options.workers, n);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (int first = w + 1; first <= n; first += workers) {
          parts[first - 1] = joint_distribution_partial(n, first, q1, q2, options.limit);
        }
      });
    }
  }
  JointTable total(n);
  for (const JointTable& part : parts) total = merge(total, part);
  return total;
}

JointTable merge(const JointTable& a, const JointTable& b) {
  if (a.n() != b.n()) {
    throw InvalidInput("cannot merge tables for n = " + std::to_string(a.n()) + " and n = " +
                       std::to_string(b.n()));
  }
  JointTable out = a;
  for (int k = 0; k < b.rows(); ++k) {
    for (int l = 0; l < b.cols(); ++l) out.add(k, l, b.at(k, l));
  }
  return out;
}

bool is_jointly_symmetric(const JointTable& t) {
  const int size = std::max(t.rows(), t.cols());
  for (int k = 0; k < size; ++k) {
    for (int l = k + 1; l < size; ++l) {
      if (t.at(k, l) != t.at(l, k)) return false;
    }
  }
  return true;
}

std::vector<Count> marginal(const JointTable& t, Axis axis) {
  const bool first = axis == Axis::first;
  std::vector<Count> out(first ? t.rows() : t.cols(), 0);
  for (int k = 0; k < t.rows(); ++k) {
    for (int l = 0; l < t.cols(); ++l) {
      Count& slot = out[first ? k : l];
      slot = checked_add(slot, t.at(k, l));
    }
  }
  return out;
}

BivarPoly to_polynomial(const JointTable& t) { return BivarPoly(t.matrix()); }

std::vector<Count> occurrence_distribution(int n, const MeshPattern& q, int limit) {
  std::vector<Count> out;
  for (const Permutation& pi : SnRange(n, limit)) {
    const auto c = static_cast<std::size_t>(count_occurrences(pi, q));
    if (c >= out.size()) out.resize(c + 1, 0);
    ++out[c];
  }
  return out;
}

Count avoider_count(int n, const MeshPattern& q, int limit) {
  Count count = 0;
  for (const Permutation& pi : SnRange(n, limit)) {
    if (count_occurrences(pi, q) == 0) ++count;
  }
  return count;
}

JointTable SplitTable::total() const {
  JointTable out(n);
  for (const JointTable& part : parts) {
    if (part.rows() > 0) out = merge(out, part);
  }
  return out;
}

int classify_by_first_two(const Permutation& p) {
  if (p.size() < 2) throw InvalidInput("classify_by_first_two needs n >= 2");
  return p.at(1) > p.at(2) ? 0 : 1;
}

int classify_by_max_position(const Permutation& p) {
  const int n = p.size();
  if (n < 2) throw InvalidInput("classify_by_max_position needs n >= 2");
  if (p.at(1) == n) return 0;
  if (p.at(n) == n) return 1;
  return 2;
}

SplitTable split_distribution(int n, const MeshPattern& q1, const MeshPattern& q2,
                              const SplitClassifier& classify, int limit) {
  SplitTable split{n, {JointTable(n), JointTable(n), JointTable(n)}};
  for (const Permutation& pi : SnRange(n, limit)) {
    auto [k, l] = joint_counts(pi, q1, q2);
    const int part = classify(pi);
    if (part < 0 || part > 2) throw InternalError("split classifier returned " + std::to_string(part));
    split.parts[part].add(static_cast<int>(k), static_cast<int>(l), 1);
  }
  return split;
}

}  // namespace meshperm
