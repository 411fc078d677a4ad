#include <doctest.h>

#include <cmath>
#include <random>

#include "modeswarm/aiep.hpp"
#include "test_helpers.hpp"

using namespace modeswarm;

TEST_SUITE_BEGIN("aiep");

TEST_CASE("pack layout: dM triangle first, row-major with diagonal") {
  Eigen::MatrixXd dm(2, 2), dk(2, 2);
  dm << 1, 2, 2, 3;
  dk << 4, 5, 5, 6;
  DeltaPair packed = pack(SymMatrix(dm), SymMatrix(dk));
  REQUIRE(packed.packed.size() == 6);
  for (int i = 0; i < 6; ++i) CHECK(packed.packed(i) == i + 1);

  auto [m2, k2] = unpack(packed);
  CHECK((m2.entries() - dm).norm() == 0.0);
  CHECK((k2.entries() - dk).norm() == 0.0);
}

TEST_CASE("zero matrices pack to the zero vector") {
  DeltaPair packed = pack(SymMatrix::zero(4), SymMatrix::zero(4));
  CHECK(packed.packed.size() == 20);
  CHECK(packed.packed.isZero());
  auto [dm, dk] = unpack(packed);
  CHECK(dm.entries().isZero());
  CHECK(dk.entries().isZero());
}

TEST_CASE("pack/unpack round-trip on random symmetric pairs up to N = 12") {
  std::mt19937_64 engine(31);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      SymMatrix dm = helpers::sym(helpers::random_symmetric(n, engine, 2.0));
      SymMatrix dk = helpers::sym(helpers::random_symmetric(n, engine, 2.0));
      auto [m2, k2] = unpack(pack(dm, dk));
      CHECK((m2.entries() - dm.entries()).norm() == 0.0);
      CHECK((k2.entries() - dk.entries()).norm() == 0.0);

      // And the vector-side identity: unpack then pack restores the vector.
      Eigen::VectorXd raw(free_parameter_count(n));
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      for (Eigen::Index i = 0; i < raw.size(); ++i) raw(i) = u(engine);
      DeltaPair delta(raw, n);
      auto [a, b] = unpack(delta);
      CHECK((pack(a, b).packed - raw).norm() == 0.0);
    }
  }
}

TEST_CASE("bad packed length is rejected") {
  CHECK_THROWS_AS(DeltaPair(Eigen::VectorXd::Zero(7), 2), BadLength);
  CHECK_THROWS_AS(pack(SymMatrix::zero(2), SymMatrix::zero(3)), DimensionMismatch);
}

TEST_CASE("free parameter counts match the experiment dimensions") {
  CHECK(free_parameter_count(10) == 110);
  CHECK(free_parameter_count(1) == 2);
  CHECK(free_parameter_count(11) == 132);
  CHECK(free_parameter_count(21) == 462);
  CHECK(free_parameter_count(71) == 5112);
  CHECK(free_parameter_count(201) == 40602);
}

TEST_CASE("objective at zero perturbation") {
  AiepProblem problem(toy_system(), Eigen::Vector2d(2.0, 5.0));
  DeltaPair zero(Eigen::VectorXd::Zero(110), 10);
  const double value = objective(problem, zero);
  // (10.993 - 2)^2 + (19.122 - 5)^2; rounding the eigenvalues to 2 d.p. gives 280.2.
  CHECK(value == doctest::Approx(280.30).epsilon(0.002));
  CHECK(std::abs(value - 280.2) < 0.5);
}

TEST_CASE("targets equal to the unperturbed spectrum give zero objective") {
  SystemPair toy = toy_system();
  Eigen::VectorXd lambda = generalized_eigenvalues(toy.mass, toy.stiffness, 3);
  AiepProblem problem(toy_system(), lambda);
  CHECK(objective(problem, DeltaPair(Eigen::VectorXd::Zero(110), 10)) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("indefinite perturbed mass scores exactly the penalty") {
  AiepProblem problem(toy_system(), Eigen::Vector2d(2.0, 5.0), TargetKind::eigenvalues, 1e12);
  SymMatrix dm = SymMatrix::diagonal(Eigen::VectorXd::Constant(10, -100.0));
  DeltaPair delta = pack(dm, SymMatrix::zero(10));
  CHECK(objective(problem, delta) == 1e12);
}

TEST_CASE("known-solution recovery: forward-solved targets give a near-zero objective") {
  std::mt19937_64 engine(17);
  SystemPair toy = toy_system();
  SymMatrix dm = helpers::sym(0.05 * helpers::random_symmetric(10, engine));
  SymMatrix dk = helpers::sym(2.0 * helpers::random_symmetric(10, engine));
  REQUIRE(is_positive_definite(toy.mass + dm));
  Eigen::VectorXd targets = generalized_eigenvalues(toy.mass + dm, toy.stiffness + dk, 2);

  AiepProblem problem(toy_system(), targets);
  CHECK(objective(problem, pack(dm, dk)) < 1e-10);
}

TEST_CASE("objective is nonnegative") {
  std::mt19937_64 engine(23);
  AiepProblem problem(toy_system(), Eigen::Vector2d(2.0, 5.0));
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::VectorXd raw(110);
    for (int i = 0; i < 110; ++i) raw(i) = u(engine);
    CHECK(objective(problem, DeltaPair(raw, 10)) >= 0.0);
  }
}

TEST_CASE("frequency comparison uses the signed square root") {
  // diag system: M = I, K = diag(-4, 9). Frequencies are (-2, 3).
  Eigen::VectorXd kd(2);
  kd << -4, 9;
  SystemPair base(SymMatrix::identity(2), SymMatrix::diagonal(kd));
  AiepProblem problem(base, Eigen::Vector2d(-2.0, 3.0), TargetKind::frequencies);
  CHECK(objective(problem, DeltaPair(Eigen::VectorXd::Zero(6), 2)) ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("identity embedding reproduces the direct objective") {
  AiepProblem problem(toy_system(), Eigen::Vector2d(2.0, 5.0));
  EmbeddingMap identity;
  identity.ambient_dim = 110;
  identity.embedded_dim = 110;
  identity.box_halfwidth = 1e6;
  identity.matrix = Eigen::MatrixXd::Identity(110, 110);
  Objective embedded = embedded_objective(problem, identity);

  std::mt19937_64 engine(3);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::VectorXd x(110);
    for (int i = 0; i < 110; ++i) x(i) = u(engine);
    CHECK(embedded(x) == doctest::Approx(objective(problem, DeltaPair(x, 10))).epsilon(1e-15));
  }
}

TEST_CASE("embedding dimension must match the parameter count") {
  AiepProblem problem(toy_system(), Eigen::Vector2d(2.0, 5.0));
  EmbeddingMap map = make_embedding(64, 8, 10.0, 1);
  CHECK_THROWS_AS(embedded_objective(problem, map), DimensionMismatch);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(AiepProblem(toy_system(), Eigen::Vector2d(5.0, 2.0)), std::invalid_argument);
  Eigen::VectorXd too_many(11);
  too_many.setLinSpaced(11, 0.0, 10.0);
  CHECK_THROWS_AS(AiepProblem(toy_system(), too_many), DimensionMismatch);
  Eigen::VectorXd bad_mass(2);
  bad_mass << 1.0, -1.0;
  CHECK_THROWS_AS(SystemPair(SymMatrix::diagonal(bad_mass), SymMatrix::identity(2)),
                  NotPositiveDefinite);
}

TEST_SUITE_END();
