#pragma once

#include <string>
#include <string_view>

#include "meshperm/bijections.hpp"
#include "meshperm/dist.hpp"

namespace meshperm {

enum class TableSource { unspecified, closed_form, brute_force };

// {"n", "q1", "q2", "counts"} plus "source" unless unspecified. counts has
// one row per k and one column per l.
std::string table_to_json(const JointTable& t, std::string_view q1, std::string_view q2,
                          TableSource source = TableSource::unspecified);

struct TableDocument {
  JointTable table;
  std::string q1;
  std::string q2;
  TableSource source = TableSource::unspecified;
};

// Throws ParseError on malformed documents.
TableDocument table_from_json(std::string_view text);

// Header "k,l,count", then one row per nonzero entry in (k,l) order.
std::string table_to_csv(const JointTable& t);

std::string report_to_json(const BijectionReport& r);

}  // namespace meshperm
