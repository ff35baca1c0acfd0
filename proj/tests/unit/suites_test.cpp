#include <gtest/gtest.h>

#include <vector>

#include "skeldet/exact_linalg.hpp"
#include "skeldet/suites.hpp"

namespace skeldet {
namespace {

void expect_consistent(const VerificationReport& report) {
  std::size_t failed = 0;
  for (std::size_t i = 0; i < report.trials.size(); ++i) {
    EXPECT_EQ(report.trials[i].id, i);
    failed += report.trials[i].pass ? 0 : 1;
  }
  EXPECT_EQ(report.failed(), failed);
  EXPECT_EQ(report.failures().size(), failed);
  const auto j = report_to_json(report, false);
  EXPECT_EQ(j.at("summary").at("total"), report.trials.size());
  EXPECT_EQ(j.at("summary").at("failed"), failed);
}

void expect_green(const VerificationReport& report) {
  expect_consistent(report);
  EXPECT_GT(report.total(), 0u) << report.suite;
  for (const auto* t : report.failures()) {
    ADD_FAILURE() << report.suite << " trial " << t->id << ": " << t->instance.dump()
                  << (t->error ? " error=" + *t->error : "");
  }
}

nlohmann::json stable(const VerificationReport& report) {
  auto j = report_to_json(report, false);
  j.at("summary").erase("elapsed_ms");
  return j;
}

TEST(Suites, MatrixTreeExamples) {
  const std::vector<Multigraph> graphs = {complete_multigraph(3, 1, 1),
                                          complete_multigraph(2, 2, 1), path_graph(3)};
  const auto report = suite_matrix_tree(graphs);
  expect_green(report);
  EXPECT_EQ(*report.trials[0].dim, 16);
  EXPECT_EQ(*report.trials[1].det, 8);
  EXPECT_EQ(*report.trials[2].det, 1);
}

TEST(Suites, MatrixTreeDisconnectedGraph) {
  Multigraph g(3);
  g.set_multiplicity(0, 1, 1);
  g.set_multiplicity(2, 3, 2);
  const std::vector<Multigraph> graphs = {g};
  const auto report = suite_matrix_tree(graphs);
  expect_green(report);
  EXPECT_EQ(*report.trials[0].dim, 0);
}

TEST(Suites, DefaultCorpusGreen) {
  expect_green(suite_matrix_tree(default_matrix_tree_corpus(kDefaultSeed)));
}

TEST(Suites, RcGreen) {
  const auto report = suite_rc(4, 2, 2, 20, 3);
  expect_green(report);
  bool saw_g31 = false;
  for (const auto& t : report.trials) {
    if (t.instance.value("kind", "") == "g_n_r" && t.instance.at("n") == 3 &&
        t.instance.at("r") == 1) {
      saw_g31 = true;
      EXPECT_EQ(*t.dim, 12);
      EXPECT_EQ(*t.det, 12);
      EXPECT_EQ(*t.formula, 12);
    }
  }
  EXPECT_TRUE(saw_g31);
}

TEST(Suites, IneqWitnesses) {
  const auto report = suite_ineq(4, 3, 30, 1);
  expect_green(report);
  EXPECT_EQ(*report.trials[0].dim, 2);
  EXPECT_EQ(*report.trials[0].det, 1);
  EXPECT_EQ(report.trials[0].instance.at("slack"), "1");
  EXPECT_EQ(*report.trials[1].dim, 20);
  EXPECT_EQ(report.trials[1].instance.at("slack"), "0");
  EXPECT_EQ(report.trials[1].relation, Relation::kAtLeast);
}

TEST(Suites, MtFixedExamples) {
  const auto report = suite_mt(4, 6, 20, 2);
  expect_green(report);
  EXPECT_EQ(*report.trials[0].dim, 3);
  EXPECT_EQ(*report.trials[0].det, 3);
  EXPECT_EQ(*report.trials[1].dim, 2);
  EXPECT_EQ(*report.trials[1].det, 1);
  EXPECT_EQ(*report.trials[2].dim, 30);
  EXPECT_EQ(*report.trials[2].det, 30);
  EXPECT_EQ(report.total(), 23u);
}

TEST(Suites, DrawnMatricesAreCertified) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = draw_psd_class_matrix(1 + seed % 5, 6, seed, seed * 7 + 1);
    if (h) {
      EXPECT_TRUE(in_class_gn(*h));
      EXPECT_TRUE(is_psd(*h));
      for (std::size_t i = 0; i < h->order(); ++i) {
        for (std::size_t j = 0; j < h->order(); ++j) {
          EXPECT_LE((*h)(i, j), 6);
        }
      }
    }
  }
}

TEST(Suites, Lemma1Green) { expect_green(suite_lemma1(4, 4)); }

TEST(Suites, DecompGreen) {
  const auto report = suite_decomp(10, 4);
  expect_green(report);
  EXPECT_EQ(*report.trials[0].det, 20);
  EXPECT_EQ(*report.trials[0].formula, 20);
  EXPECT_EQ(*report.trials[1].dim, 20);
  EXPECT_EQ(*report.trials[1].formula, 20);
}

TEST(Suites, SteckGreen) { expect_green(suite_steck(3, 3, 3, 2)); }

TEST(Suites, RemarkGreen) { expect_green(suite_remark(3, 4, 4)); }

TEST(Suites, PropertiesGreen) { expect_green(suite_properties(kDefaultSeed)); }

TEST(Suites, DeterministicGivenSeed) {
  EXPECT_EQ(stable(suite_rc(4, 3, 3, 30, 11)), stable(suite_rc(4, 3, 3, 30, 11)));
  EXPECT_EQ(stable(suite_ineq(5, 3, 30, 11)), stable(suite_ineq(5, 3, 30, 11)));
  EXPECT_EQ(stable(suite_mt(5, 6, 30, 11)), stable(suite_mt(5, 6, 30, 11)));
  EXPECT_EQ(stable(suite_decomp(10, 11)), stable(suite_decomp(10, 11)));
  EXPECT_NE(stable(suite_ineq(5, 3, 30, 11)), stable(suite_ineq(5, 3, 30, 12)));
}

}  // namespace
}  // namespace skeldet
