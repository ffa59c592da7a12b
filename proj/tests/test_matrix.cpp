#include <doctest.h>

#include <random>

#include "lefdec/errors.hpp"
#include "lefdec/matrix.hpp"
#include "lefdec/span.hpp"

using namespace lefdec;

namespace {

Mat random_mat(const Field& f, int rows, int cols, std::mt19937_64& rng,
               int density_pct = 70) {
  Mat m(&f, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (rng() % 100 >= static_cast<unsigned>(density_pct)) continue;
      long num = static_cast<long>(rng() % 9) - 4;
      if (num) m.set(i, j, f.from_rational(Rational(num)));
    }
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("matrix");

TEST_CASE("rref on the pinned examples") {
  const Field& q = Field::rationals();
  RrefResult r1 = rref(Mat::identity(&q, 2));
  CHECK(r1.rank == 2);
  CHECK(r1.pivot_cols == std::vector<int>{0, 1});

  RrefResult r2 = rref(Mat(&q, 3, 3));
  CHECK(r2.rank == 0);

  Mat m = Mat::from_rows(&q, {{1, 2}, {2, 4}});
  CHECK(rref(m).rank == 1);
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
  const Field& q = Field::rationals();
  const Field gauss({Rational(1), Rational(0), Rational(1)});
  std::mt19937_64 rng(11);
  for (const Field* f : {&q, &gauss}) {
    for (int trial = 0; trial < 30; ++trial) {
      int rows = 1 + static_cast<int>(rng() % 6);
      int cols = 1 + static_cast<int>(rng() % 6);
      Mat m = random_mat(*f, rows, cols, rng);
      RrefResult r = rref(m);
      RrefResult rr = rref(r.reduced);
      CHECK(rr.reduced == r.reduced);
      CHECK(rr.rank == r.rank);
      CHECK(r.rank + static_cast<int>(kernel_basis(m).size()) == cols);
    }
  }
}

TEST_CASE("kernel bases on the pinned examples") {
  const Field& q = Field::rationals();
  CHECK(kernel_basis(Mat::identity(&q, 3)).empty());
  CHECK(kernel_basis(Mat(&q, 2, 2)).size() == 2);
  Mat row = Mat::from_rows(&q, {{1, 1}});
  auto k = kernel_basis(row);
  REQUIRE(k.size() == 1);
  // proportional to (1, -1)
  CHECK(k[0][0] + k[0][1] == q.zero());
  CHECK(!k[0][0].is_zero());
}

TEST_CASE("kernel vectors annihilate") {
  const Field& q = Field::rationals();
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m = random_mat(q, 4, 5, rng);
    for (const auto& v : kernel_basis(m)) {
      auto mv = m.apply(v);
      for (const auto& x : mv) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("minimal polynomials") {
  const Field& q = Field::rationals();
  Poly p1 = min_poly_of(Mat::identity(&q, 3));
  CHECK(p1 == Poly::from_rationals(&q, {-1, 1}));

  Mat proj = Mat::from_rows(&q, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  CHECK(min_poly_of(proj) == Poly::from_rationals(&q, {0, -1, 1}));  // y^2-y

  Mat companion = Mat::from_rows(&q, {{0, -1}, {1, 0}});
  CHECK(min_poly_of(companion) == Poly::from_rationals(&q, {1, 0, 1}));
}

TEST_CASE("minimal polynomial annihilates exactly") {
  const Field& q = Field::rationals();
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Mat m = random_mat(q, n, n, rng);
    Poly p = min_poly_of(m);
    Mat acc(&q, n, n);
    for (int k = p.degree(); k >= 0; --k)
      acc = acc * m + Mat::identity(&q, n) * p.coeff(k);
    CHECK(acc.is_zero());
    CHECK(p.is_monic());
    CHECK(p.degree() <= n);
  }
}

TEST_CASE("matrix algebra identities") {
  const Field& q = Field::rationals();
  std::mt19937_64 rng(19);
  Mat a = random_mat(q, 3, 3, rng), b = random_mat(q, 3, 3, rng);
  Mat c = random_mat(q, 2, 2, rng), d = random_mat(q, 2, 2, rng);
  CHECK(a.kron(c) * b.kron(d) == (a * b).kron(c * d));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK((a + b).trace() == a.trace() + b.trace());
  Mat inv_target = Mat::from_rows(&q, {{2, 1}, {1, 1}});
  CHECK(inv_target * inv_target.inverse() == Mat::identity(&q, 2));
  CHECK_THROWS_AS(Mat::from_rows(&q, {{1, 2}, {2, 4}}).inverse(),
                  NotInvertible);
  CHECK(inv_target.pow(3) == inv_target * inv_target * inv_target);
  CHECK(inv_target.pow(0) == Mat::identity(&q, 2));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("span");

TEST_CASE("span dimensions on the pinned examples") {
  const Field& q = Field::rationals();
  SpanBuilder<> b(&q);
  SparseVec e1{{0, q.one()}};
  SparseVec e2{{1, q.one()}};
  CHECK(b.insert(e1));
  CHECK(!b.insert(e1));
  CHECK(b.dim() == 1);
  CHECK(b.insert(e2));
  CHECK(b.dim() == 2);
  SpanBuilder<> empty(&q);
  CHECK(empty.dim() == 0);
  CHECK(empty.insert(e2));
  CHECK(empty.dim() == 1);
}

TEST_CASE("canonical bases are generating-set independent") {
  const Field& q = Field::rationals();
  auto vec = [&](std::vector<long> entries) {
    SparseVec v;
    for (size_t k = 0; k < entries.size(); ++k)
      if (entries[k])
        v.emplace_back(static_cast<std::int64_t>(k),
                       q.from_rational(Rational(entries[k])));
    return v;
  };
  SpanBuilder<> b1(&q), b2(&q);
  b1.insert(vec({1, 2, 0, 5}));
  b1.insert(vec({0, 1, 1, 1}));
  b2.insert(vec({1, 3, 1, 6}));   // sum
  b2.insert(vec({1, 1, -1, 4}));  // difference
  REQUIRE(b1.dim() == b2.dim());
  for (int k = 0; k < b1.dim(); ++k) {
    CHECK(b1.pivots()[k] == b2.pivots()[k]);
    CHECK(b1.rows()[k].v == b2.rows()[k].v);
  }
}

TEST_CASE("coordinates invert the span") {
  const Field& q = Field::rationals();
  std::mt19937_64 rng(23);
  OperatorSpan span(&q, 3);
  std::vector<Mat> gens;
  for (int t = 0; t < 4; ++t) gens.push_back(random_mat(q, 3, 3, rng));
  for (const Mat& g : gens) span.insert(g);
  for (const Mat& g : gens) {
    auto coords = span.coordinates(g);
    REQUIRE(coords.has_value());
    Mat acc(&q, 3, 3);
    for (int k = 0; k < span.dim(); ++k)
      acc = acc + span.basis()[k] * (*coords)[k];
    CHECK(acc == g);
  }
  bool id_consistent = !span.coordinates(Mat::identity(&q, 3)).has_value() ||
                       span.contains(Mat::identity(&q, 3));
  CHECK(id_consistent);
}

TEST_CASE("operator span equality is subspace equality") {
  const Field& q = Field::rationals();
  Mat a = Mat::from_rows(&q, {{1, 0}, {0, 0}});
  Mat b = Mat::from_rows(&q, {{0, 0}, {0, 1}});
  OperatorSpan s1 = OperatorSpan::from_mats(&q, 2, {a, b});
  OperatorSpan s2 = OperatorSpan::from_mats(&q, 2, {a + b, a - b});
  CHECK(s1.equals(s2));
  CHECK(s1.union_with(s2).dim() == 2);
  OperatorSpan s3 = OperatorSpan::from_mats(&q, 2, {a});
  CHECK(!s1.equals(s3));
  CHECK(s1.contains_span(s3));
  CHECK(!s3.contains_span(s1));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("parallel");

#include "lefdec/parallel.hpp"

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), [&](size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("parallel_for propagates exceptions") {
  CHECK_THROWS_AS(
      parallel_for(64,
                   [](size_t i) {
                     if (i == 13) throw std::runtime_error("boom");
                   }),
      std::runtime_error);
}

TEST_SUITE_END();
