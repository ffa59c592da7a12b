#include <doctest.h>

#include "lefdec/config.hpp"
#include "lefdec/errors.hpp"
#include "lefdec/isotypic.hpp"
#include "lefdec/tensor.hpp"

using namespace lefdec;

namespace {

PolarizedData siegel(int g) { return preset("siegel", {.g = g}).data; }
PolarizedData cm() { return preset("cm", {.d = 1}).data; }
PolarizedData cm_gauss() {
  return preset("cm", {.d = 1,
                       .min_poly = std::vector<Rational>{
                           Rational(1), Rational(0), Rational(1)}})
      .data;
}

OperatorSpan full_matrix_algebra(const Field* f, int n) {
  std::vector<Mat> units;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat u(f, n, n);
      u.set(i, j, f->one());
      units.push_back(std::move(u));
    }
  return OperatorSpan::from_mats(f, n, units);
}

}  // namespace

TEST_SUITE_BEGIN("isotypic");

TEST_CASE("center of a full matrix algebra is the scalars") {
  const Field* f = &Field::rationals();
  OperatorSpan alg = full_matrix_algebra(f, 3);
  OperatorSpan center = center_basis(alg);
  CHECK(center.dim() == 1);
  CHECK(center.contains(Mat::identity(f, 3)));
}

TEST_CASE("commutative algebras are their own center") {
  OperatorSpan cent = centralizer_basis(siegel(1), 2);  // span{Id, P}
  OperatorSpan center = center_basis(cent);
  CHECK(center.dim() == 2);
  CHECK(center.equals(cent));
}

TEST_CASE("the compressed (2,2) algebra has a two-dimensional center") {
  WitnessedSpan bir = bir_algebra(siegel(1), 2, 2);
  OperatorSpan alg = bir.to_operator_span();
  REQUIRE(alg.dim() == 10);
  CHECK(center_basis(alg).dim() == 2);
}

TEST_CASE("primitive idempotents of the tensor-square algebra at g = 1") {
  PolarizedData data = siegel(1);
  OperatorSpan cent = centralizer_basis(data, 2);
  auto idems = primitive_idempotents(cent);
  REQUIRE(idems.size() == 2);
  CHECK(rank_of(idems[0]) == 1);
  CHECK(rank_of(idems[1]) == 3);
  Mat p = projector_P(data.phi());
  CHECK(idems[0] == p);
  CHECK(idems[1] == Mat::identity(data.field(), 4) - p);
}

TEST_CASE("cm tensor square needs the gaussian field") {
  {
    OperatorSpan cent = centralizer_basis(cm(), 2);
    try {
      primitive_idempotents(cent);
      FAIL("expected SplittingFieldRequired");
    } catch (const SplittingFieldRequired& e) {
      // an irreducible quadratic must split
      CHECK(e.must_split().find("y^2") != std::string::npos);
    }
  }
  {
    OperatorSpan cent = centralizer_basis(cm_gauss(), 2);
    auto idems = primitive_idempotents(cent);
    REQUIRE(idems.size() == 3);
    CHECK(rank_of(idems[0]) == 1);
    CHECK(rank_of(idems[1]) == 1);
    CHECK(rank_of(idems[2]) == 2);
    Mat sum(cent.field(), 4, 4);
    for (const Mat& e : idems) sum = sum + e;
    CHECK(sum == Mat::identity(cent.field(), 4));
  }
}

TEST_CASE("decompose at (2, 2) for the split datum") {
  DecompositionReport rep = decompose(siegel(1), 2, 2);
  CHECK(rep.cor_princ.pass());
  CHECK(rep.certificates.all());
  REQUIRE(rep.components.size() == 2);
  CHECK(rep.components[0].rank == 3);
  CHECK(rep.components[1].rank == 3);
  // the trivially-acted isotypic piece carries the twist tag
  CHECK(rep.components[0].twist == -1);
  CHECK(!rep.components[1].twist.has_value());
  CHECK(rep.wedge_dim == 6);
}

TEST_CASE("decompose output is seed-independent") {
  DecompositionReport a = decompose(siegel(1), 2, 2, 0);
  DecompositionReport b = decompose(siegel(1), 2, 2, 12345);
  REQUIRE(a.components.size() == b.components.size());
  for (size_t k = 0; k < a.components.size(); ++k)
    CHECK(a.components[k].idempotent == b.components[k].idempotent);
}

TEST_CASE("decompose at (2, 1) finds the twist line") {
  DecompositionReport rep = decompose(siegel(1), 2, 1);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].rank == 1);
  CHECK(rep.components[0].twist == -1);
  CHECK(rep.certificates.all());
}

TEST_CASE("vanishing exterior powers give the empty report") {
  DecompositionReport rep = decompose(siegel(1), 3, 1);
  CHECK(rep.wedge_dim == 0);
  CHECK(rep.components.empty());
  CHECK(rep.certificates.all());
  DecompositionReport rep2 = decompose(siegel(1), 5, 2);
  CHECK(rep2.components.empty());
}

TEST_CASE("decompose for the cm datum over the gaussian field") {
  DecompositionReport rep = decompose(cm_gauss(), 2, 2);
  CHECK(rep.certificates.all());
  REQUIRE(rep.components.size() == 3);
  CHECK(rep.components[0].rank == 1);
  CHECK(rep.components[1].rank == 1);
  CHECK(rep.components[2].rank == 4);
  // over Q the same decomposition must be refused
  CHECK_THROWS_AS(decompose(cm(), 2, 2), SplittingFieldRequired);
}

TEST_CASE("witnesses evaluate back to the idempotents") {
  PolarizedData data = siegel(1);
  DecompositionReport rep = decompose(data, 2, 2);
  PolarizedData pd = product_data(data, 2);
  Mat anti = antisymmetrizer(pd.field(), 2, pd.m());
  for (const auto& comp : rep.components) {
    Mat raw = eval_combo(comp.witness, pd, 2);
    CHECK(compress_to_wedge(anti * raw * anti, pd.m(), 2) == comp.idempotent);
  }
}

TEST_CASE("exhausted retries raise CenterNotSeparated") {
  OperatorSpan cent = centralizer_basis(siegel(1), 2);
  CHECK_THROWS_AS(primitive_idempotents(cent, 0, 0), CenterNotSeparated);
}

TEST_CASE("intertwiners") {
  PolarizedData data = siegel(1);
  OperatorSpan cent = centralizer_basis(data, 2);
  auto idems = primitive_idempotents(cent);
  REQUIRE(idems.size() == 2);
  // p = q: trivial intertwiner exists
  auto self = intertwiner(cent, idems[0], idems[0]);
  REQUIRE(self.has_value());
  CHECK(self->v * self->u * idems[0] == idems[0]);
  // different ranks: no intertwiner
  CHECK(!intertwiner(cent, idems[0], idems[1]).has_value());
  // non-idempotent arguments are rejected
  CHECK_THROWS_AS(
      intertwiner(cent, idems[0] * Field::rationals().from_int(2), idems[1]),
      InvalidParams);
}

TEST_CASE("equal-rank conjugate components admit no intertwiner") {
  // the two rank-1 wedge components of the cm datum carry opposite torus
  // weights, so no algebra element connects them despite the equal ranks
  PolarizedData data = cm_gauss();
  WitnessedSpan bir = bir_algebra(data, 2, 2);
  OperatorSpan alg = bir.to_operator_span();
  auto idems = primitive_idempotents(alg);
  REQUIRE(idems.size() == 3);
  REQUIRE(rank_of(idems[0]) == 1);
  REQUIRE(rank_of(idems[1]) == 1);
  CHECK(!intertwiner(alg, idems[0], idems[1]).has_value());
}

TEST_CASE("fine splitting separates the trivial-representation copies") {
  PolarizedData data = siegel(1);
  DecompositionReport rep = decompose(data, 2, 2, 0, Budgets{}, true);
  REQUIRE(rep.fine_components.size() == 2);
  // the rank-3 trivial-isotypic component splits into three rank-1 pieces
  const auto& pieces = rep.fine_components[0];
  REQUIRE(pieces.size() == 3);
  WitnessedSpan bir = bir_algebra(data, 2, 2);
  OperatorSpan alg = bir.to_operator_span();
  Mat sum(alg.field(), 6, 6);
  for (const Mat& p : pieces) {
    CHECK(p * p == p);
    CHECK(rank_of(p) == 1);
    sum = sum + p;
  }
  CHECK(sum == rep.components[0].idempotent);
  for (size_t a = 0; a < pieces.size(); ++a)
    for (size_t b = 0; b < pieces.size(); ++b)
      if (a != b) CHECK((pieces[a] * pieces[b]).is_zero());
  // two copies of the same irreducible: an intertwiner exists
  auto u = intertwiner(alg, pieces[0], pieces[1]);
  CHECK(u.has_value());
}

TEST_SUITE_END();
