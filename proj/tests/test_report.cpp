#include <gtest/gtest.h>

#include <sstream>

#include "proxrem/families.hpp"
#include "proxrem/report.hpp"

using namespace proxrem;

namespace {

bool is_fraction(const Json& j) {
  if (!j.is_string()) return false;
  const auto s = j.get<std::string>();
  const auto slash = s.find('/');
  return slash != std::string::npos && slash > 0 && slash + 1 < s.size();
}

}  // namespace

TEST(Report, InvariantSummaryUsesFractionStrings) {
  const auto j = to_json(invariant_summary(path_graph(6)));
  EXPECT_EQ(j["proximity"], "9/5");
  EXPECT_EQ(j["remoteness"], "3/1");
  for (const auto& x : j["average_distance"]) EXPECT_TRUE(is_fraction(x));
  EXPECT_EQ(j["median"], Json::array({2, 3}));
}

TEST(Report, BoundReportHasNoFloats) {
  const auto j = to_json(bound_report(cycle_graph(9), true));
  std::function<void(const Json&)> walk = [&](const Json& node) {
    EXPECT_FALSE(node.is_number_float());
    if (node.is_structured())
      for (const auto& child : node) walk(child);
  };
  walk(j);
  EXPECT_TRUE(j["holds"].get<bool>());
  EXPECT_EQ(j["bounds"].size(), 6u);
  EXPECT_TRUE(j.contains("chain"));
  for (const auto& link : j["chain"]["proximity"]) {
    EXPECT_TRUE(is_fraction(link["lhs"]));
    EXPECT_TRUE(is_fraction(link["slack"]));
  }
}

TEST(Report, ChainOmittedWhenNotRequested) {
  EXPECT_FALSE(to_json(bound_report(cycle_graph(9), false)).contains("chain"));
}

TEST(Report, GapCsv) {
  std::ostringstream os;
  os << kGapCsvHeader << '\n';
  write_gap_row(os, sharpness_report(ExtremalParams::make(20, 3, 8)));
  EXPECT_EQ(os.str(),
            "n,delta,Delta,case,pi,pi_bound,gap_pi,rho,rho_bound,gap_rho,holds\n"
            "20,3,8,small-Delta,61/19,869/76,625/76,110/19,259/19,149/19,true\n");
}

TEST(Report, LemmaCsvAndJson) {
  const auto r = lemma_sweep(4, 4);
  std::ostringstream os;
  write_lemma_csv(os, r);
  const auto text = os.str();
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "N,L,instances,max_median_distance,proximity_bound,median_slack,max_any_distance,remoteness_bound,"
            "any_slack");
  EXPECT_NE(text.find("\n3,2,3,1/1,1/1,0/1,2/1,2/1,0/1\n"), std::string::npos) << text;
  const auto j = to_json(r);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_TRUE(j["holds"].get<bool>());
}

TEST(Report, LemmaInstanceCsv) {
  std::ostringstream os;
  write_lemma_instances_csv(os, 3, 3);
  // m=1: N in 1..3 gives L rows 0+1+2; m=2: weightings (1,1),(1,2),(2,1) give 0+1+1; m=3: (1,1,1) x 3 trees gives 0.
  std::size_t rows = 0;
  for (char ch : os.str()) rows += ch == '\n';
  EXPECT_EQ(rows, 1u + 3u + 2u);
}
