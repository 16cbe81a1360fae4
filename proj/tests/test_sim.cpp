#include "trs/simulate.hpp"

#include <memory>
#include <sstream>

#include <gtest/gtest.h>

namespace trs {
namespace {

std::shared_ptr<const Field> make_field(unsigned m) {
  return std::make_shared<const Field>(m);
}

NestedTriple desk_triple() {
  return NestedTriple(make_field(4), 15, 11, 9, 5);  // d0 = 11, radius 5
}

TEST(MdsReference, BoundaryValues) {
  EXPECT_TRUE(mds_reference(384, 216, 84));
  EXPECT_FALSE(mds_reference(384, 216, 85));
  EXPECT_TRUE(mds_reference(45, 25, 10));  // d = 21, t = 10
  EXPECT_FALSE(mds_reference(45, 25, 11));
  EXPECT_TRUE(mds_reference(45, 25, 0));
}

TEST(MdsReference, QscTailIsMonotoneAndBounded) {
  EXPECT_EQ(mds_reference_qsc(384, 216, 0.0), 0.0);
  EXPECT_EQ(mds_reference_qsc(384, 216, 1.0), 1.0);
  double prev = 0.0;
  for (double p : {0.01, 0.05, 0.1, 0.2, 0.3, 0.5}) {
    const double v = mds_reference_qsc(384, 216, p);
    EXPECT_GE(v, prev);
    EXPECT_GE(v, 0.0);
    EXPECT_LE(v, 1.0);
    prev = v;
  }
  // Far below the radius the tail is negligible; far above it saturates.
  EXPECT_LT(mds_reference_qsc(384, 216, 0.05), 1e-6);
  EXPECT_GT(mds_reference_qsc(384, 216, 0.5), 0.999);
}

TEST(RunSimulation, WeightZeroAllSucceed) {
  const NestedTriple triple = desk_triple();
  const SimRecord rec =
      run_simulation(triple, ChannelModel::fixed_weight(0), 500, 1);
  EXPECT_EQ(rec.successes, 500u);
  EXPECT_EQ(rec.miscorrections, 0u);
  EXPECT_EQ(rec.failures(), 0u);
  EXPECT_EQ(rec.fer(), 0.0);
  EXPECT_EQ(rec.mds_reference, 0.0);
  EXPECT_GE(rec.mean_decode_seconds, 0.0);
}

TEST(RunSimulation, CountsArePartition) {
  const NestedTriple triple = desk_triple();
  for (std::size_t tau : {std::size_t{4}, std::size_t{7}, std::size_t{12}}) {
    const SimRecord rec =
        run_simulation(triple, ChannelModel::fixed_weight(tau), 400, 99);
    EXPECT_EQ(rec.successes + rec.miscorrections + rec.failures(), 400u);
    EXPECT_GE(rec.fer(), 0.0);
    EXPECT_LE(rec.fer(), 1.0);
  }
}

TEST(RunSimulation, AtRadiusZeroFerDesk) {
  const NestedTriple triple = desk_triple();
  const SimRecord rec =
      run_simulation(triple, ChannelModel::fixed_weight(5), 3000, 7);
  EXPECT_EQ(rec.successes, 3000u);
  EXPECT_EQ(rec.fer(), 0.0);
}

TEST(RunSimulation, BeyondRadiusStrictlyBetweenZeroAndOne) {
  const NestedTriple triple = desk_triple();
  const SimRecord rec =
      run_simulation(triple, ChannelModel::fixed_weight(6), 20000, 11);
  EXPECT_GT(rec.successes, 0u);
  EXPECT_GT(rec.miscorrections + rec.failures(), 0u);
  EXPECT_GT(rec.fer(), 0.0);
  EXPECT_LT(rec.fer(), 1.0);
  // The reference MDS decoder with the same rate still corrects weight 6.
  EXPECT_EQ(rec.mds_reference, 0.0);
}

// Just past the radius the full-scale code still decodes most patterns
// (blocks share positions often at n=128), but no longer all of them.
TEST(RunSimulation, FullScaleJustBeyondRadius) {
  const NestedTriple triple(make_field(8), 128, 98, 82, 36);  // radius 46
  const SimRecord rec =
      run_simulation(triple, ChannelModel::fixed_weight(48), 1000, 4242);
  EXPECT_GT(rec.successes, 0u);
  EXPECT_GT(rec.miscorrections + rec.failures(), 0u);
  EXPECT_GT(rec.fer(), 0.0);
  EXPECT_LT(rec.fer(), 1.0);
}

TEST(RunSimulation, DeterministicGivenSeed) {
  const NestedTriple triple = desk_triple();
  const ChannelModel model = ChannelModel::q_symmetric(0.08);
  const SimRecord r1 = run_simulation(triple, model, 800, 12345);
  const SimRecord r2 = run_simulation(triple, model, 800, 12345);
  EXPECT_EQ(r1.successes, r2.successes);
  EXPECT_EQ(r1.miscorrections, r2.miscorrections);
  EXPECT_EQ(r1.failures_step1, r2.failures_step1);
  EXPECT_EQ(r1.failures_step2, r2.failures_step2);
  EXPECT_EQ(r1.failures_allcand, r2.failures_allcand);
  EXPECT_EQ(csv_row(r1), csv_row(r2));
}

TEST(RunSimulation, FerMonotoneInTauUpToNoise) {
  const NestedTriple triple = desk_triple();
  // 1e5 trials per weight keeps Monte Carlo noise under half a percent.
  const std::uint64_t trials = 100000;
  double prev = -1.0;
  for (std::size_t tau = 0; tau <= 9; ++tau) {
    const SimRecord rec =
        run_simulation(triple, ChannelModel::fixed_weight(tau), trials, 1000 + tau);
    const double fer = rec.fer();
    if (tau <= 5) {
      EXPECT_EQ(fer, 0.0) << "tau=" << tau;  // the guarantee plateau
    }
    EXPECT_GE(fer, prev - 0.005) << "tau=" << tau;
    prev = fer;
  }
}

TEST(Csv, HeaderAndRowShape) {
  const NestedTriple triple = desk_triple();
  const SimRecord fixed =
      run_simulation(triple, ChannelModel::fixed_weight(3), 50, 2);
  const SimRecord qsc =
      run_simulation(triple, ChannelModel::q_symmetric(0.05), 50, 2);
  EXPECT_EQ(csv_header(),
            "model,param,trials,successes,miscorrections,failures,fer,"
            "mds_reference");
  EXPECT_EQ(csv_row(fixed), "fixed,3,50,50,0,0,0,0");
  EXPECT_EQ(csv_row(qsc).substr(0, 9), "qsc,0.05,");

  std::ostringstream os;
  const SimRecord records[] = {fixed, qsc};
  write_csv(os, records);
  const std::string text = os.str();
  EXPECT_EQ(text.find("model,"), 0u);
  EXPECT_NE(text.find("\nfixed,3,"), std::string::npos);
  EXPECT_NE(text.find("\nqsc,"), std::string::npos);
}

}  // namespace
}  // namespace trs
