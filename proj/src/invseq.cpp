#include "meshperm/invseq.hpp"

#include <charconv>

#include "meshperm/error.hpp"

namespace meshperm {

InversionSequence::InversionSequence(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] > static_cast<int>(i)) {
      throw InvalidInput("entry " + std::to_string(i + 1) + " of an inversion sequence must lie in [0," +
                         std::to_string(i) + "], got " + std::to_string(entries_[i]));
    }
  }
}

InversionSequence InversionSequence::parse(std::string_view text) {
  std::vector<int> entries;
  if (text.empty()) return InversionSequence();
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw ParseError("bad inversion sequence entry '" + std::string(token) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return InversionSequence(std::move(entries));
}

std::string InversionSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

InversionSequenceRange::InversionSequenceRange(int n, int limit) : n_(n) {
  check_capacity(n, limit);
}

InversionSequenceRange::iterator InversionSequenceRange::begin() const {
  iterator it;
  it.current_.entries_.assign(n_, 0);
  it.done_ = false;
  return it;
}

InversionSequenceRange::iterator& InversionSequenceRange::iterator::operator++() {
  auto& e = current_.entries_;
  for (int i = static_cast<int>(e.size()) - 1; i >= 0; --i) {
    if (e[i] < i) {
      ++e[i];
      return *this;
    }
    e[i] = 0;
  }
  done_ = true;
  return *this;
}

int vincular_stat(const InversionSequence& e) {
  int count = 0;
  for (int j = 1; j < e.size(); ++j) {
    if (e.at(j) == e.at(j + 1) && e.at(j) != 0) ++count;
  }
  return count;
}

std::vector<Count> I_distribution(int n, int limit) {
  std::vector<Count> out;
  for (const InversionSequence& e : enumerate_inversion_sequences(n, limit)) {
    const auto k = static_cast<std::size_t>(vincular_stat(e));
    if (k >= out.size()) out.resize(k + 1, 0);
    ++out[k];
  }
  return out;
}

Count count_I(int n, int k, int limit) {
  const std::vector<Count> d = I_distribution(n, limit);
  return k >= 0 && k < static_cast<int>(d.size()) ? d[k] : 0;
}

Count thm36_recurrence(int n, int k, int limit) {
  if (n < 0) throw InvalidInput("thm36_recurrence needs n >= 0");
  if (k < 0) return 0;
  if (n < 4) return count_I(n, k, limit);
  Count v = checked_mul(n - 1, thm36_recurrence(n - 1, k, limit));
  v = checked_add(v, thm36_recurrence(n - 1, k - 1, limit));
  v = checked_add(v, thm36_recurrence(n - 2, k, limit));
  return checked_sub(v, thm36_recurrence(n - 2, k - 1, limit));
}

}  // namespace meshperm
