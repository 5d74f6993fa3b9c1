#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zpd/mat.hpp"
#include "zpd/span_basis.hpp"
#include "zpd/tensor.hpp"

using namespace zpd;

namespace {
const GfpField gf(32003);
const RationalField qf;
}  // namespace

TEST_CASE("field axioms hold exactly on randomized scalars") {
  SplitMix64 rng(7);
  for (int it = 0; it < 200; ++it) {
    auto a = random_elem(gf, rng), b = random_elem(gf, rng),
         c = random_elem(gf, rng);
    CHECK(gf.eq(gf.add(gf.add(a, b), c), gf.add(a, gf.add(b, c))));
    CHECK(gf.eq(gf.mul(gf.mul(a, b), c), gf.mul(a, gf.mul(b, c))));
    CHECK(gf.eq(gf.mul(a, gf.add(b, c)), gf.add(gf.mul(a, b), gf.mul(a, c))));
    CHECK(gf.eq(gf.sub(gf.add(a, b), b), a));
    if (!gf.is_zero(a)) CHECK(gf.eq(gf.mul(a, gf.inv(a)), gf.one()));

    auto x = random_elem(qf, rng), y = random_elem(qf, rng);
    CHECK(qf.eq(qf.sub(qf.add(x, y), y), x));
    if (!qf.is_zero(x)) CHECK(qf.eq(qf.mul(x, qf.inv(x)), qf.one()));
  }
}

TEST_CASE("rational parsing stays in lowest terms") {
  auto v = qf.parse("4/6");
  CHECK(qf.to_string(v) == "2/3");
  CHECK(qf.to_string(qf.parse("-3/9")) == "-1/3");
  CHECK(gf.eq(gf.parse("-1"), gf.from_long(32002)));
  CHECK(gf.eq(gf.parse("1/2"), gf.div(gf.one(), gf.from_long(2))));
}

TEST_CASE("matrix units") {
  auto e12 = matrix_unit(gf, 1, 2, 2);
  CHECK(gf.eq(e12.at(0, 1), gf.one()));
  CHECK(gf.is_zero(e12.at(0, 0)));
  CHECK(gf.is_zero(e12.at(1, 0)));
  CHECK(gf.is_zero(e12.at(1, 1)));

  auto e11 = matrix_unit(gf, 1, 1, 2);
  auto e22 = matrix_unit(gf, 2, 2, 2);
  CHECK(e11 * e12 == e12);
  CHECK((e22 * e12).is_zero());
  CHECK_THROWS(matrix_unit(gf, 0, 1, 2));
  CHECK_THROWS(matrix_unit(gf, 1, 3, 2));
}

TEST_CASE("kernel_basis on small matrices") {
  using Vec = std::vector<GfpField::Elem>;
  // identity 2x2: trivial kernel
  CHECK(kernel_basis(gf, {Vec{1, 0}, Vec{0, 1}}, 2).empty());
  // zero 2x2: the whole plane
  auto plane = kernel_basis(gf, {Vec{0, 0}, Vec{0, 0}}, 2);
  CHECK(plane.size() == 2);
  // [[1,1],[0,0]] -> span of (1,-1)
  auto k = kernel_basis(gf, {Vec{1, 1}, Vec{0, 0}}, 2);
  REQUIRE(k.size() == 1);
  CHECK(gf.eq(k[0][1], gf.neg(k[0][0])));
}

TEST_CASE("kernel_basis output annihilates the matrix (randomized)") {
  SplitMix64 rng(11);
  for (int it = 0; it < 50; ++it) {
    int rows = 1 + int(rng.below(4)), cols = 1 + int(rng.below(5));
    std::vector<std::vector<GfpField::Elem>> M(
        rows, std::vector<GfpField::Elem>(cols));
    for (auto& r : M)
      for (auto& x : r) x = random_elem(gf, rng);
    for (const auto& v : kernel_basis(gf, M, cols)) {
      for (const auto& r : M) {
        GfpField::Elem s = 0;
        for (int j = 0; j < cols; ++j) s = gf.add(s, gf.mul(r[j], v[j]));
        CHECK(gf.is_zero(s));
      }
    }
  }
}

TEST_CASE("tensor_flatten basics") {
  // m = 1 is just the row-major entries
  SplitMix64 rng(3);
  auto a = random_mat(gf, 2, rng);
  auto t = tensor_flatten<GfpField>({a});
  CHECK(t.coords == a.data());

  // (e11, e12) has a single coordinate at ((1,1),(1,2))
  auto e11 = matrix_unit(gf, 1, 1, 2), e12 = matrix_unit(gf, 1, 2, 2);
  auto u = tensor_flatten<GfpField>({e11, e12});
  REQUIRE(u.coords.size() == 16);
  for (std::size_t idx = 0; idx < 16; ++idx)
    CHECK(gf.eq(u.coords[idx], idx == 1 ? gf.one() : gf.zero()));
  auto mi = tensor_multi_index(1, 2, 2);
  CHECK(mi[0] == std::pair{0, 0});
  CHECK(mi[1] == std::pair{0, 1});
}

TEST_CASE("tensor_flatten is multilinear in every slot") {
  SplitMix64 rng(5);
  for (int it = 0; it < 20; ++it) {
    int d = 2, m = 3;
    MatTuple<GfpField> t;
    for (int k = 0; k < m; ++k) t.push_back(random_mat(gf, d, rng));
    int slot = int(rng.below(m));
    auto alpha = random_elem(gf, rng);
    auto b = random_mat(gf, d, rng);

    auto scaled = t;
    scaled[slot] = t[slot].scaled(alpha);
    auto lhs = tensor_flatten(scaled).coords;
    auto rhs = tensor_flatten(t).coords;
    for (auto& x : rhs) x = gf.mul(x, alpha);
    CHECK(lhs == rhs);

    auto sum = t;
    sum[slot] = t[slot] + b;
    auto other = t;
    other[slot] = b;
    auto l2 = tensor_flatten(sum).coords;
    auto r1 = tensor_flatten(t).coords, r2 = tensor_flatten(other).coords;
    for (std::size_t i = 0; i < r1.size(); ++i) r1[i] = gf.add(r1[i], r2[i]);
    CHECK(l2 == r1);
  }
}

TEST_CASE("span_insert canonical behavior") {
  SpanBasis<GfpField> b(gf, 3);
  CHECK_FALSE(b.insert({0, 0, 0}));
  CHECK(b.insert({0, 2, 0}));
  CHECK(b.rank() == 1);
  CHECK_FALSE(b.insert({0, 4, 0}));  // 2v after v
  CHECK_THROWS(b.insert({1, 0}));
}

TEST_CASE("span basis is insertion-order independent") {
  SplitMix64 rng(17);
  for (int it = 0; it < 30; ++it) {
    std::vector<std::vector<GfpField::Elem>> vecs;
    for (int k = 0; k < 6; ++k) {
      std::vector<GfpField::Elem> v(5);
      for (auto& x : v) x = GfpField::Elem(rng.below(5));
      vecs.push_back(v);
    }
    SpanBasis<GfpField> a(gf, 5), b(gf, 5);
    for (const auto& v : vecs) a.insert(v);
    for (auto rit = vecs.rbegin(); rit != vecs.rend(); ++rit) b.insert(*rit);
    CHECK(a == b);

    SpanBasis<GfpField> left(gf, 5), right(gf, 5);
    for (std::size_t i = 0; i < vecs.size(); ++i)
      (i % 2 ? left : right).insert(vecs[i]);
    left.merge(right);
    CHECK(left == a);
  }
}

TEST_CASE("annihilator examples and involution") {
  SpanBasis<GfpField> full(gf, 2);
  full.insert({1, 0});
  full.insert({0, 1});
  CHECK(full.annihilator().rank() == 0);

  SpanBasis<GfpField> zero(gf, 2);
  CHECK(zero.annihilator().rank() == 2);

  SpanBasis<GfpField> line(gf, 2);
  line.insert({1, 0});
  auto ann = line.annihilator();
  REQUIRE(ann.rank() == 1);
  CHECK(gf.is_zero(ann.rows()[0][0]));
  CHECK(gf.eq(ann.rows()[0][1], gf.one()));

  SplitMix64 rng(23);
  for (int it = 0; it < 20; ++it) {
    SpanBasis<GfpField> s(gf, 6);
    for (int k = 0; k < 3; ++k) {
      std::vector<GfpField::Elem> v(6);
      for (auto& x : v) x = GfpField::Elem(rng.below(7));
      s.insert(v);
    }
    auto a = s.annihilator();
    CHECK(a.rank() == 6 - s.rank());
    CHECK(a.annihilator() == s);
  }
}

TEST_CASE("subspace_leq") {
  SpanBasis<GfpField> a(gf, 2), b(gf, 2), c(gf, 2);
  a.insert({1, 0});
  b.insert({1, 0});
  c.insert({0, 1});
  CHECK(subspace_leq(a, b));
  CHECK(subspace_leq(SpanBasis<GfpField>(gf, 2), c));
  CHECK_FALSE(subspace_leq(a, c));
}

TEST_CASE("matrix inverse and idempotents") {
  SplitMix64 rng(29);
  for (int it = 0; it < 20; ++it) {
    auto p = random_invertible(gf, 3, rng);
    auto inv = p.inverse();
    REQUIRE(inv);
    CHECK(p * *inv == Mat<GfpField>::identity(gf, 3));
    auto e = random_idempotent(gf, 3, rng);
    CHECK(e * e == e);
  }
  CHECK_FALSE(Mat<GfpField>(gf, 2).inverse());
}
