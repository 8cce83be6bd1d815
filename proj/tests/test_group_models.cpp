#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hopf/group_models.hpp"

using namespace hopf;

namespace {
const ScalarMode Q = rational_mode();
}

TEST_CASE("built-in groups validate") {
  for (const FiniteGroup& g : small_groups(8)) {
    INFO(g.name);
    CHECK(validate_group(g).ok());
  }
  CHECK(small_groups(8).size() == 14);
  CHECK(small_groups(6).size() == 8);
}

TEST_CASE("group_algebra k[C2]") {
  HopfAlgebra a = group_algebra(cyclic_group(2), Q);
  CHECK(a.dim() == 2);
  CHECK(check_hopf(a).ok());
  // S = id on C2 since every element is its own inverse
  CHECK(a.antipode == LinMap::identity(a.space(), Q));
}

TEST_CASE("group_algebra k[S3]: noncommutative mult, cocommutative comult") {
  FiniteGroup s3 = symmetric_group3();
  HopfAlgebra a = group_algebra(s3, Q);
  CHECK(a.dim() == 6);
  CHECK(check_hopf(a).ok());

  bool noncomm = false;
  for (size_t i = 0; i < 6 && !noncomm; ++i)
    for (size_t j = 0; j < 6; ++j)
      if (a.b.alg.mult.col(i * 6 + j) != a.b.alg.mult.col(j * 6 + i)) noncomm = true;
  CHECK(noncomm);

  // tau o Delta = Delta
  for (size_t i = 0; i < 6; ++i) {
    Tensor d = sweedler(a.b.coa, i, 2);
    CHECK(d.permute({1, 0}) == d);
  }
}

TEST_CASE("group_algebra k[C1] is the ground field") {
  HopfAlgebra a = group_algebra(cyclic_group(1), Q);
  CHECK(a.dim() == 1);
  CHECK(check_hopf(a).ok());
  CHECK(a.b.alg.mult.at(0, 0).is_one());
}

TEST_CASE("invalid group data refused") {
  FiniteGroup bad = cyclic_group(3);
  bad.table[1][2] = 1;  // breaks the Latin square
  CHECK(!validate_group(bad).ok());
  CHECK_THROWS_AS(group_algebra(bad, Q), std::invalid_argument);
}

TEST_CASE("grouplike carrier of the piecewise magma") {
  PointedMagma x = piecewise_magma(2);
  CHECK(x.op(1, 1) == 1);  // x . x = x
  FinBialgebra h = grouplike_carrier(x, Q);
  CHECK(check_coalgebra(h.coa).ok());
  // Delta and eps are algebra maps automatically for group-likes
  CHECK(is_algebra_map(h.coa.counit,
                       h.alg,
                       FinAlgebra{ground_space(),
                                  LinMap::identity(ground_space(), Q),
                                  {Scalar::one(Q)},
                                  true}));
}

TEST_CASE("eps algebra map fails only off group-likes") {
  // eps of a group-like basis is 1; any table operation preserves that
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> pick(0, 3);
  for (int t = 0; t < 10; ++t) {
    PointedMagma x;
    x.n = 4;
    x.unit = 0;
    x.table.assign(4, std::vector<int>(4, 0));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        x.table[a][b] = (a == 0) ? b : (b == 0 ? a : pick(rng));
    FinBialgebra h = grouplike_carrier(x, Q);
    CHECK(check_coalgebra(h.coa).ok());  // coassociativity for random magma
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) {
        Vec prod = h.alg.mult.col(i * 4 + j);
        CHECK(h.coa.counit.apply(prod)[0].is_one());
      }
  }
}

TEST_CASE("coalgebra maps on group-likes are exactly the table maps") {
  FinBialgebra h = grouplike_carrier(piecewise_magma(3), Q);
  HopfAlgebra a = group_algebra(cyclic_group(2), Q);
  // a table map lands on group-likes: coalgebra map
  LinMap tab(h.space(), a.space(), Q);
  tab.at(0, 0) = Scalar::one(Q);
  tab.at(1, 1) = Scalar::one(Q);
  tab.at(0, 2) = Scalar::one(Q);
  CHECK(is_coalgebra_map(tab, h.coa, a.b.coa));
  // a map sending a group-like to a sum of two is not
  LinMap bad = tab;
  bad.at(0, 1) = Scalar::one(Q);
  CHECK(!is_coalgebra_map(bad, h.coa, a.b.coa));
  // nor is a scaled table map (counit breaks)
  LinMap scaled = tab;
  scaled.at(1, 1) = Scalar::rational(2, 1);
  CHECK(!is_coalgebra_map(scaled, h.coa, a.b.coa));
}

TEST_CASE("validate_gset") {
  FiniteGroup c2 = cyclic_group(2);

  RightGSet trivial;
  trivial.x = piecewise_magma(3);
  trivial.act.assign(3, {0, 0});
  for (int x = 0; x < 3; ++x)
    for (int g = 0; g < 2; ++g) trivial.act[x][g] = x;
  CHECK(validate_gset(trivial, c2).ok());

  // X = {1, x}: the only action fixing the base point is trivial
  int valid = 0;
  for (int a = 0; a < 2; ++a) {
    RightGSet d;
    d.x = piecewise_magma(2);
    d.act = {{0, 0}, {1, a}};
    if (validate_gset(d, c2).ok()) ++valid;
  }
  CHECK(valid == 1);

  // broken compatibility (x <| g) <| h = x <| (gh) caught with a witness
  FiniteGroup c4 = cyclic_group(4);
  RightGSet bad;
  bad.x = piecewise_magma(3);
  bad.act.assign(3, std::vector<int>(4, 0));
  bad.act[0] = {0, 0, 0, 0};
  bad.act[1] = {1, 2, 1, 2};
  bad.act[2] = {2, 1, 2, 1};
  bad.act[1][2] = 2;  // now (1 <| g) <| g != 1 <| g^2
  Report r = validate_gset(bad, c4);
  CHECK(!r.ok());
  const CheckItem* item = r.find("gset.compat");
  REQUIRE(item != nullptr);
  CHECK(!item->pass);
  CHECK(item->witness.has_value());
}
