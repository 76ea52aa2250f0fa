#include <gtest/gtest.h>

#include <json.hpp>

#include "meshperm/error.hpp"
#include "meshperm/io.hpp"

using namespace meshperm;

TEST(TableJson, Shape) {
  const JointTable t(3, {{4, 1}, {1, 0}});
  const auto doc = nlohmann::json::parse(table_to_json(t, "123|", "321|"));
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["q1"], "123|");
  EXPECT_EQ(doc["q2"], "321|");
  EXPECT_EQ(doc["counts"], nlohmann::json::parse("[[4,1],[1,0]]"));
  EXPECT_FALSE(doc.contains("source"));
  const auto sourced =
      nlohmann::json::parse(table_to_json(t, "a", "b", TableSource::closed_form));
  EXPECT_EQ(sourced["source"], "closed_form");
}

TEST(TableJson, RoundTrip) {
  const JointTable t(4, {{10, 6, 1}, {6, 0, 0}, {1, 0, 0}});
  const TableDocument back =
      table_from_json(table_to_json(t, "123|0,0", "321|0,0", TableSource::brute_force));
  EXPECT_EQ(back.table, t);
  EXPECT_EQ(back.q1, "123|0,0");
  EXPECT_EQ(back.source, TableSource::brute_force);
  EXPECT_THROW(table_from_json("{"), ParseError);
  EXPECT_THROW(table_from_json(R"({"n":2,"q1":"","q2":"","counts":[[-1]]})"), ParseError);
  EXPECT_THROW(table_from_json(R"({"n":2,"q1":"","q2":"","counts":[[1]],"source":"x"})"),
               ParseError);
}

TEST(TableCsv, NonzeroRowsInOrder) {
  const JointTable t(4, {{10, 6, 1}, {6, 0, 0}, {1, 0, 0}});
  EXPECT_EQ(table_to_csv(t), "k,l,count\n0,0,10\n0,1,6\n0,2,1\n1,0,6\n2,0,1\n");
  EXPECT_EQ(table_to_csv(JointTable(3)), "k,l,count\n");
}

TEST(ReportJson, Shape) {
  BijectionReport r{"S9", "S9", 5, true, std::nullopt, {{"permutations", 120}, {"moved", 12}}};
  const std::string text = report_to_json(r);
  const auto doc = nlohmann::json::parse(text);
  EXPECT_EQ(doc["map"], "S9");
  EXPECT_EQ(doc["pass"], true);
  EXPECT_TRUE(doc["counterexample"].is_null());
  EXPECT_EQ(doc["stats"]["permutations"], 120);
  EXPECT_LT(text.find("permutations"), text.find("moved"));
  r.counterexample = "x";
  EXPECT_EQ(nlohmann::json::parse(report_to_json(r))["counterexample"], "x");
}
