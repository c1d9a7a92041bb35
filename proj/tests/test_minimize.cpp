#include <doctest.h>

#include <random>

#include "gr1core/errors.hpp"
#include "gr1core/minimize.hpp"
#include "gr1core/realizability.hpp"
#include "gr1core/solver.hpp"
#include "support/fixtures.hpp"
#include "support/random_criteria.hpp"

using namespace gr1core;

namespace {

Criterion superset_of(ElementSet required) {
  return Criterion([required](const ElementSet& s) {
    return required.subset_of(s);
  });
}

}  // namespace

TEST_CASE("memoized criterion answers repeats and dominated queries") {
  Criterion raw = superset_of({2, 4});
  Criterion memo = memoize(raw);

  CHECK(memo.check({2, 4}));
  CHECK(memo.check({2, 4}));
  CHECK(memo.stats().actual_checks == 1);
  CHECK(memo.stats().memo_hits == 1);

  // Superset of a stored positive.
  CHECK(memo.check({1, 2, 4}));
  CHECK(memo.stats().actual_checks == 1);

  // Subset of a stored negative.
  CHECK(!memo.check({1, 2, 3}));
  CHECK(memo.stats().actual_checks == 2);
  CHECK(!memo.check({2, 3}));
  CHECK(memo.stats().actual_checks == 2);
  CHECK(memo.stats().memo_hits == 3);
}

TEST_CASE("ddmin finds the unique core") {
  Criterion c = superset_of({2, 4});
  CHECK(ddmin({1, 2, 3, 4}, c) == ElementSet{2, 4});
}

TEST_CASE("ddmin on a singleton returns it") {
  Criterion c = superset_of({1});
  CHECK(ddmin({1}, c) == ElementSet{1});
}

TEST_CASE("ddmin rejects inputs that fail the criterion") {
  Criterion c = superset_of({2, 4});
  CHECK_THROWS_AS(ddmin({1, 3}, c), PreconditionError);
}

TEST_CASE("quickxplain finds unique cores") {
  Criterion c1 = superset_of({2, 4});
  CHECK(quickxplain({1, 2, 3, 4}, c1) == ElementSet{2, 4});

  Criterion c2 = superset_of({3, 5, 8});
  CHECK(quickxplain({1, 2, 3, 4, 5, 6, 7, 8}, c2) == ElementSet{3, 5, 8});
}

TEST_CASE("quickxplain output is one of the valid cores") {
  Criterion c([](const ElementSet& s) {
    return s.contains(1) || ElementSet{2, 3}.subset_of(s);
  });
  ElementSet result = quickxplain({1, 2, 3, 4}, c);
  bool expected = result == ElementSet{1} || result == ElementSet{2, 3};
  CHECK(expected);
  CHECK(validate_core(result, c));
}

TEST_CASE("linear_min scans in ID order") {
  Criterion c([](const ElementSet& s) {
    return s.contains(2) || s.contains(4);
  });
  // 1 removed, 2 removed ({3,4} still passes), 3 removed, 4 kept.
  CHECK(linear_min({1, 2, 3, 4}, c) == ElementSet{4});

  Criterion nonempty([](const ElementSet& s) { return !s.empty(); });
  CHECK(linear_min({1, 2}, nonempty) == ElementSet{2});

  Criterion has5([](const ElementSet& s) { return s.contains(5); });
  CHECK(linear_min({5}, has5) == ElementSet{5});
}

TEST_CASE("min_with_base with an empty base is the plain algorithm") {
  std::mt19937 rng(5);
  for (int round = 0; round < 40; ++round) {
    auto rc = testing::random_criterion(rng, 8, 3);
    for (MinAlg alg : {MinAlg::ddmin, MinAlg::quickxplain, MinAlg::linear}) {
      Criterion a(rc.fn());
      Criterion b(rc.fn());
      CHECK(minimize(alg, rc.universe, a) ==
            min_with_base(alg, rc.universe, {}, rc.universe, b));
    }
  }
}

TEST_CASE("a base containing a core yields an empty remainder") {
  Criterion c = superset_of({2, 4});
  ElementSet base{2, 4, 5};
  CHECK(min_with_base(MinAlg::ddmin, {1, 2, 3, 4, 5, 6}, base, {1, 3, 6}, c)
            .empty());
}

TEST_CASE("a base under all cores extends to a core") {
  std::mt19937 rng(17);
  for (int round = 0; round < 60; ++round) {
    auto rc = testing::random_criterion(rng, 8, 3);
    ElementSet base = rc.true_intersection();
    ElementSet rest = rc.universe.minus(base);
    Criterion c(rc.fn());
    ElementSet extension =
        min_with_base(MinAlg::ddmin, rc.universe, base, rest, c);
    Criterion fresh(rc.fn());
    CHECK(validate_core(base.unioned(extension), fresh));
  }
}

TEST_CASE("min_with_base rejects violated preconditions") {
  Criterion c = superset_of({2});
  CHECK_THROWS_AS(min_with_base(MinAlg::ddmin, {1, 2}, {1}, {1, 2}, c),
                  PreconditionError);
  CHECK_THROWS_AS(min_with_base(MinAlg::ddmin, {1, 3}, {1}, {3}, c),
                  PreconditionError);
}

TEST_CASE("incremental composition of two halves is a core") {
  std::mt19937 rng(23);
  for (int round = 0; round < 60; ++round) {
    auto rc = testing::random_criterion(rng, 9, 3);
    ElementSet first_half, second_half;
    for (ElementId id : rc.universe)
      (rng() % 2 ? first_half : second_half).insert(id);

    Criterion c(rc.fn());
    ElementSet a_min = min_with_base(MinAlg::ddmin, rc.universe, second_half,
                                     first_half, c);
    ElementSet b_min = min_with_base(MinAlg::ddmin, rc.universe, a_min,
                                     second_half, c);
    Criterion fresh(rc.fn());
    CHECK(validate_core(a_min.unioned(b_min), fresh));
  }
}

TEST_CASE("every minimizer output passes the core validator") {
  std::mt19937 rng(31);
  for (int round = 0; round < 80; ++round) {
    auto rc = testing::random_criterion(rng, 9, 4);
    for (MinAlg alg : {MinAlg::ddmin, MinAlg::quickxplain, MinAlg::linear}) {
      Criterion c(rc.fn());
      ElementSet core = minimize(alg, rc.universe, c);
      Criterion fresh(rc.fn());
      CHECK(validate_core(core, fresh));
    }
  }
}

TEST_CASE("memoization never changes minimizer results") {
  std::mt19937 rng(47);
  for (int round = 0; round < 60; ++round) {
    auto rc = testing::random_criterion(rng, 9, 4);
    for (MinAlg alg : {MinAlg::ddmin, MinAlg::quickxplain, MinAlg::linear}) {
      Criterion plain(rc.fn());
      Criterion memo = memoize(Criterion(rc.fn()));
      CHECK(minimize(alg, rc.universe, plain) ==
            minimize(alg, rc.universe, memo));
    }
  }
}

TEST_CASE("ddmin stays within the quadratic check budget") {
  std::mt19937 rng(61);
  for (int round = 0; round < 40; ++round) {
    auto rc = testing::random_criterion(rng, 10, 4);
    Criterion c(rc.fn());
    ddmin(rc.universe, c);
    const std::uint64_t n = rc.universe.size();
    CHECK(c.stats().actual_checks <= n * n + 4 * n);
  }
}

TEST_CASE("ddmin on the lift guarantees returns one of the published cores") {
  Gr1Problem p = testing::load_fixture("lift.spc");
  auto ctx = std::make_shared<RealizabilityContext>();
  ctx->problem = &p;
  ctx->assumption_ids = p.assumption_universe;
  Criterion check = memoize(make_unrealizability_criterion(ctx));

  ElementSet core = ddmin(p.guarantee_universe, check);
  CHECK(validate_core(core, check));
  std::vector<int> lines = testing::lines_of(p, core);
  const std::vector<std::vector<int>> published = {
      {21, 27, 36}, {21, 27, 37},     {27, 35, 36},
      {27, 35, 37}, {27, 36, 37},     {24, 27, 30, 37}};
  CHECK(std::find(published.begin(), published.end(), lines) !=
        published.end());
}
