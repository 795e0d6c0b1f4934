#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "coxext/conditions.hpp"
#include "coxext/errors.hpp"
#include "coxext/statistics.hpp"

using namespace coxext;

TEST_CASE("sequence spec parsing") {
  auto s = parse_sequence_spec("A:n");
  CHECK(s.family == SequenceSpec::Family::An);
  CHECK(s.rank_map(17) == 17);
  s = parse_sequence_spec("B:log3+2");
  CHECK(s.family == SequenceSpec::Family::Bn);
  CHECK(s.rank_map(100) == static_cast<std::uint64_t>(std::ceil(std::pow(std::log(100.0), 3))) + 2);
  s = parse_sequence_spec("I2(5)");
  CHECK(s.family == SequenceSpec::Family::FixedDihedralPower);
  CHECK(s.dihedral_m == 5);
  s = parse_sequence_spec("template=A{N} x I2(5):n");
  CHECK(materialize(s, 4) == parse_descriptor("A4 x I2(5)"));
  CHECK_THROWS_AS(parse_sequence_spec("Q:n"), DomainError);
  CHECK_THROWS_AS(parse_sequence_spec("template=A3"), DomainError);
}

TEST_CASE("log-cube rank map") {
  const auto s = parse_sequence_spec("A:log3");
  // n = e^10 lands just below the exact value, so the ceiling is 1000.
  CHECK(s.rank_map(static_cast<std::uint64_t>(std::exp(10.0))) == 1000);
}

TEST_CASE("n-list shorthand") {
  CHECK(parse_n_list("1e2..1e4x10") == std::vector<std::uint64_t>{100, 1000, 10000});
  CHECK(parse_n_list("3,5,8") == std::vector<std::uint64_t>{3, 5, 8});
  CHECK_THROWS_AS(parse_n_list("0"), DomainError);
}

TEST_CASE("profile of A_100 inversions") {
  const std::uint64_t ns[] = {100};
  const auto p = profile_sequence(parse_sequence_spec("A:n"), ns, Statistic::inv)[0];
  CHECK(p.classical_rank == 100);
  CHECK(p.n_max == 100);
  CHECK(p.sd == doctest::Approx(std::sqrt(29037.5)).epsilon(1e-12));
  CHECK(p.lambda == doctest::Approx(0.29343).epsilon(1e-4));
  CHECK(p.lambda * p.sd == doctest::Approx((p.d_max - 1) / 2));
}

TEST_CASE("profile of dihedral powers") {
  const std::uint64_t ns[] = {40};
  const auto spec = parse_sequence_spec("I2(5):n");
  const auto inv = profile_sequence(spec, ns, Statistic::inv)[0];
  CHECK(inv.total_rank == 80);
  CHECK(inv.inverse_order_sum == doctest::Approx(8.0));
  CHECK(inv.dihedral_norm * inv.dihedral_norm == doctest::Approx(25.0 * 40));
  CHECK(inv.sd * inv.sd == doctest::Approx(40 * 27.0 / 12));
  const auto des = profile_sequence(spec, ns, Statistic::des)[0];
  CHECK(des.sd * des.sd == doctest::Approx(8.0));
  CHECK(des.lambda * des.sd <= 1.0 + 1e-12);
}

TEST_CASE("profile matches exact moments of the materialized group") {
  const std::uint64_t ns[] = {6};
  const auto spec = parse_sequence_spec("template=D{N} x I2(7) x A3:n");
  for (auto stat : {Statistic::inv, Statistic::des}) {
    const auto p = profile_sequence(spec, ns, stat)[0];
    const auto m = moments(materialize(spec, 6), stat);
    CHECK(p.mean == doctest::Approx(m.mean_f));
    CHECK(p.sd * p.sd == doctest::Approx(m.var_f));
    CHECK(p.total_rank == materialize(spec, 6).rank());
  }
}

TEST_CASE("condition verdicts on classical families") {
  const auto ns = parse_n_list("100,1000,10000,100000");
  for (const char* fam : {"A:n", "B:n", "D:n"}) {
    const auto prof = profile_sequence(parse_sequence_spec(fam), ns, Statistic::inv);
    CHECK(check_growth(prof, ConditionId::rank_growth).verdict == Verdict::satisfied);
    CHECK(check_growth(prof, ConditionId::inv_classical).verdict == Verdict::satisfied);
  }
  const auto slow = profile_sequence(parse_sequence_spec("A:log2"), ns, Statistic::inv);
  CHECK(check_growth(slow, ConditionId::rank_growth).verdict == Verdict::violated);
  const auto cube = profile_sequence(parse_sequence_spec("A:log3"), ns, Statistic::inv);
  CHECK(check_growth(cube, ConditionId::rank_growth).verdict == Verdict::violated);
}

TEST_CASE("des_variance reports both readings") {
  const auto ns = parse_n_list("100,1000,10000,100000");
  const auto prof = profile_sequence(parse_sequence_spec("A:n"), ns, Statistic::des);
  const auto rep = check_growth(prof, ConditionId::des_variance);
  CHECK(rep.verdict == Verdict::satisfied);
  REQUIRE(rep.alt_ratios.size() == 4);
  CHECK(rep.alt_ratios[0] == doctest::Approx(rep.ratios[0]));
  CHECK_FALSE(rep.note.empty());
}

TEST_CASE("dihedral power conditions on fixed powers and on a doubling schedule") {
  const auto ns = parse_n_list("10,100,1000,10000");
  const auto spec = parse_sequence_spec("I2(7):n");
  const auto inv = check_growth(profile_sequence(spec, ns, Statistic::inv), ConditionId::dihedral_power_inv);
  CHECK(inv.verdict == Verdict::satisfied);
  for (double r : inv.ratios) CHECK(r == doctest::Approx(1.0));
  const auto des = check_growth(profile_sequence(spec, ns, Statistic::des), ConditionId::dihedral_power_des);
  CHECK(des.verdict == Verdict::satisfied);
  for (double r : des.ratios) CHECK(r == doctest::Approx(7.0));

  const std::string path = "test_schedule_doubling.txt";
  {
    std::ofstream f(path);
    mpz_class m = 1;
    for (int i = 1; i <= 1000; ++i) {
      m *= 2;
      f << m.get_str() << '\n';
    }
  }
  const auto sched = parse_sequence_spec("schedule=" + path);
  std::remove(path.c_str());
  const auto rep = check_growth(profile_sequence(sched, parse_n_list("10,30,100,300,1000"), Statistic::inv),
                                ConditionId::dihedral_power_inv);
  CHECK(rep.verdict == Verdict::violated);
  CHECK(rep.slope == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("check_growth preconditions") {
  const auto prof = profile_sequence(parse_sequence_spec("A:n"), parse_n_list("10,20,30,40"), Statistic::inv);
  CHECK_THROWS_AS(check_growth(prof, ConditionId::rank_growth), DomainError);
  const auto few = profile_sequence(parse_sequence_spec("A:n"), parse_n_list("10,1000,100000"), Statistic::inv);
  CHECK_THROWS_AS(check_growth(few, ConditionId::rank_growth), DomainError);
}

TEST_CASE("norm form check") {
  auto nf = norm_form_check(std::vector<mpz_class>{5, 5, 5, 5});
  CHECK(nf.ratio == 1.0);
  CHECK(nf.ratio_squared == 1);
  nf = norm_form_check(std::vector<mpz_class>{2, 2, 2, 100});
  CHECK(nf.lhs == 100.0);
  CHECK(nf.rhs == doctest::Approx(50.02999100539596).epsilon(1e-14));
  CHECK(nf.ratio == doctest::Approx(1.9988010789211326).epsilon(1e-14));
  CHECK(nf.ratio_squared >= 1);
  CHECK_THROWS_AS(norm_form_check(std::vector<mpz_class>{}), DomainError);
}

TEST_CASE("condition names") {
  CHECK(parse_condition("dihedral_power_des") == ConditionId::dihedral_power_des);
  CHECK(to_string(ConditionId::inv_dihedral) == "inv_dihedral");
  CHECK_THROWS_AS(parse_condition("nope"), DomainError);
}
