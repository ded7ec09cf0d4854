#include <doctest.h>

#include "kpg/ensemble.hpp"
#include "kpg/error.hpp"
#include "kpg/schur.hpp"
#include "support.hpp"

using namespace kpg;

namespace {

TruncSeries p(int i, int order = kDefaultOrder) { return TruncSeries::gen(i, order, Variable::p); }

/// s_n via Newton's identity n s_n = sum_k p_k s_{n-k}, independent of exp.
std::vector<TruncSeries> newton_one_part(int order) {
  std::vector<TruncSeries> s = {TruncSeries::constant(1, order, Variable::p)};
  for (int n = 1; n <= order; ++n) {
    TruncSeries acc(order, Variable::p);
    for (int k = 1; k <= n; ++k) acc += p(k, order) * s[static_cast<std::size_t>(n - k)];
    s.push_back(scale(acc, make_rational(1, n)));
  }
  return s;
}

/// 1 + sum_n c_n s_n with random rational c_n.
TruncSeries random_one_part_tau(int order) {
  std::map<Partition, Rational> c;
  c[Partition{}] = 1;
  for (int n = 1; n <= order; ++n) c[Partition({n})] = testing::random_rational();
  return schur_combination(c, order);
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions_of(0).size() == 1);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(7).size() == 15);
  CHECK(partitions_of(3).front() == Partition({3}));
  CHECK(partitions_of(3).back() == Partition({1, 1, 1}));
  CHECK(to_string(Partition({2, 1})) == "(2,1)");
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
  CHECK_THROWS_AS(Partition({2, 0}), DomainError);
}

TEST_CASE("one-part Schur polynomials") {
  CHECK(schur_one_part(0) == TruncSeries::constant(1, kDefaultOrder, Variable::p));
  CHECK(schur_one_part(2) == scale(p(1) * p(1) + p(2), make_rational(1, 2)));
  CHECK(schur_one_part(3) ==
        scale(pow(p(1), 3) + scale(p(1) * p(2), 3) + scale(p(3), 2), make_rational(1, 6)));
  const auto newton = newton_one_part(8);
  for (int n = 0; n <= 8; ++n) CHECK(schur_one_part(n, 8) == newton[static_cast<std::size_t>(n)]);
  CHECK_THROWS_AS(schur_one_part(5, 4), OutOfTruncationError);
}

TEST_CASE("Jacobi-Trudi") {
  CHECK(schur_jacobi_trudi(Partition({1, 1})) == scale(p(1) * p(1) - p(2), make_rational(1, 2)));
  CHECK(schur_jacobi_trudi(Partition({2, 1})) == scale(pow(p(1), 3) - p(3), make_rational(1, 3)));
  for (int n = 0; n <= 7; ++n) CHECK(schur_jacobi_trudi(Partition(n ? std::vector<int>{n} : std::vector<int>{})) == schur_one_part(n));
  CHECK_THROWS_AS(schur_jacobi_trudi(Partition({3, 2}), 4), OutOfTruncationError);
}

TEST_CASE("Schur polynomials of weight w are homogeneous and independent") {
  for (int w = 1; w <= 6; ++w) {
    std::map<Partition, Rational> c;
    for (const Partition& lambda : partitions_of(w)) {
      CHECK(schur_jacobi_trudi(lambda).homogeneous_part(w) == schur_jacobi_trudi(lambda));
      c[lambda] = testing::random_rational(true);
    }
    CHECK_FALSE(schur_combination(c).is_zero());
  }
}

TEST_CASE("target series") {
  const TruncSeries s = target_series(7);
  CHECK(s.truncated(1) == TruncSeries::constant(1, 7, Variable::p) + p(1));
  CHECK(s.homogeneous_part(2) == p(1) * p(1) + p(2));
  const TruncSeries f3 = log(s).homogeneous_part(3);
  CHECK(f3 == scale(scale(pow(p(1), 3), 4) + scale(p(1) * p(2), 18) + scale(p(3), 16),
                    make_rational(1, 6)));
}

TEST_CASE("KP residual trivia") {
  CHECK(kp1_residual(TruncSeries(7, Variable::p)).vanishes());
  CHECK(kp2_residual(TruncSeries(7, Variable::p)).vanishes());
  CHECK(kp2_residual(p(1)).vanishes());
  CHECK(kp1_residual(TruncSeries(7, Variable::p)).reliable_weight == 3);
  CHECK(kp2_residual(TruncSeries(7, Variable::p)).reliable_weight == 2);
  CHECK_THROWS_AS(kp1_residual(TruncSeries(3, Variable::p)), SizeError);
  CHECK_THROWS_AS(kp2_residual(TruncSeries(4, Variable::p)), SizeError);
  CHECK_THROWS_AS(kp1_residual(TruncSeries(7, Variable::q)), VariableMismatchError);
  // F = p2^2 / 2: F_22 = 1 and nothing else.
  const KpResidual r = kp1_residual(scale(p(2) * p(2), make_rational(1, 2)));
  CHECK(to_string(r.residual) == "1");
}

TEST_CASE("KP residuals vanish on log of the target series") {
  const TruncSeries f = log(target_series(7));
  const KpResidual kp1 = kp1_residual(f);
  const KpResidual kp2 = kp2_residual(f);
  CHECK(kp1.vanishes());
  CHECK(kp1.reliable_weight == 3);
  CHECK(kp2.vanishes());
  CHECK(kp2.reliable_weight == 2);

  const Kp1Terms t = kp1_terms(f);
  CHECK(t.lhs.constant_term() == 15);
  CHECK(t.mixed.constant_term() == make_rational(56, 3));
  CHECK(t.half_square.constant_term() == make_rational(1, 2));
  CHECK(t.quartic_twelfth.constant_term() == make_rational(19, 6));
}

TEST_CASE("residuals never report terms above the reliable weight") {
  for (int trial = 0; trial < 20; ++trial) {
    const int order = testing::uniform(5, 8);
    const TruncSeries f = testing::random_series(order, 10, Variable::p);
    const KpResidual r1 = kp1_residual(f);
    const KpResidual r2 = kp2_residual(f);
    CHECK(r1.reliable_weight == order - 4);
    CHECK(r2.reliable_weight == order - 5);
    CHECK(r1.residual.truncated(r1.reliable_weight) == r1.residual);
    CHECK(r2.residual.truncated(r2.reliable_weight) == r2.residual);
  }
}

TEST_CASE("one-part combinations are tau functions") {
  for (int trial = 0; trial < 15; ++trial) {
    const TruncSeries f = log(random_one_part_tau(7));
    CHECK(kp1_residual(f).vanishes());
    CHECK(kp2_residual(f).vanishes());
  }
}

TEST_CASE("a two-row coefficient breaks KP1") {
  std::map<Partition, Rational> c = {{Partition{}, 1}, {Partition({2}), 1}, {Partition({1, 1}), 1}};
  const KpResidual r = kp1_residual(log(schur_combination(c, 7)));
  CHECK_FALSE(r.vanishes());
}

TEST_CASE("Schur expansion") {
  const auto one = schur_expand(TruncSeries::constant(1, 5, Variable::p));
  CHECK(one == std::map<Partition, Rational>{{Partition{}, 1}});

  const auto s = schur_expand(target_series(5));
  const std::map<Partition, Rational> expected = {{Partition{}, 1},      {Partition({1}), 1},
                                                   {Partition({2}), 2},    {Partition({3}), 8},
                                                   {Partition({4}), 64},   {Partition({5}), 1024}};
  CHECK(s == expected);

  const TruncSeries rescaled = exp(rescaled_connected_series(Invariant::W, 7));
  CHECK(schur_expand(rescaled) == schur_expand(target_series(7)));
  CHECK_THROWS_AS(schur_expand(TruncSeries::constant(1)), VariableMismatchError);
}

TEST_CASE("Schur expansion round trip") {
  for (int trial = 0; trial < 15; ++trial) {
    const int order = testing::uniform(1, 7);
    const TruncSeries tau = testing::random_series(order, 10, Variable::p);
    CHECK(schur_combination(schur_expand(tau), order) == tau);
  }
}
