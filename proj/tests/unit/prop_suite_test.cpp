#include <gtest/gtest.h>

#include "ksym_tools/prop_suite.hpp"

namespace ksym {
namespace {

TEST(PropSuite, SmallRunPassesEveryLabel) {
  const props::Report r = props::run({.seed = 3, .trials = 12, .n_max = 2, .k_max = 3, .jobs = 1});
  for (const auto& f : r.failures) ADD_FAILURE() << f.label << " trial " << f.trial << ": " << f.message;
  EXPECT_TRUE(r.ok());
  for (const std::string& label : props::labels()) {
    ASSERT_TRUE(r.labels.contains(label)) << label;
    EXPECT_GT(r.labels.at(label).pass, 0u) << label;
  }
}

TEST(PropSuite, ReportIsIndependentOfThreadCount) {
  const props::Report a = props::run({.seed = 9, .trials = 6, .n_max = 2, .k_max = 2, .jobs = 1});
  const props::Report b = props::run({.seed = 9, .trials = 6, .n_max = 2, .k_max = 2, .jobs = 3});
  EXPECT_EQ(props::to_json(a), props::to_json(b));
}

TEST(PropSuite, TrialSeedsDiffer) {
  EXPECT_NE(props::trial_seed(0, 0), props::trial_seed(0, 1));
  EXPECT_NE(props::trial_seed(0, 0), props::trial_seed(1, 0));
  EXPECT_EQ(props::trial_seed(4, 2), props::trial_seed(4, 2));
}

}  // namespace
}  // namespace ksym
