#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zpd/nullcheck.hpp"
#include "zpd/polyspec.hpp"

using namespace zpd;

namespace {
const GfpField gf(32003);

Mat<GfpField> unit(int i, int j, int d) { return matrix_unit(gf, i, j, d); }

Mat<GfpField> ordered_eval(const MatTuple<GfpField>& w, const Perm& sigma) {
  Mat<GfpField> acc = w[sigma(0)];
  for (int k = 1; k < int(w.size()); ++k) acc = acc * w[sigma(k)];
  return acc;
}
}  // namespace

TEST_CASE("staircase shapes") {
  auto s3 = staircase(gf, 3, 3, StairVariant::Base);
  CHECK(s3.m0 == 2);
  CHECK(s3.units == MatTuple<GfpField>{unit(1, 1, 3), unit(1, 2, 3), unit(2, 2, 3)});

  auto s5 = staircase(gf, 5, 4, StairVariant::Base);
  CHECK(s5.m0 == 3);
  CHECK(s5.units == MatTuple<GfpField>{unit(1, 1, 4), unit(1, 2, 4),
                                       unit(2, 2, 4), unit(2, 3, 4),
                                       unit(3, 3, 4)});

  auto sh = staircase(gf, 3, 3, StairVariant::Shifted);
  CHECK(sh.units == MatTuple<GfpField>{unit(1, 2, 3), unit(2, 2, 3), unit(2, 3, 3)});

  CHECK_THROWS(staircase(gf, 5, 2, StairVariant::Base));   // m0 > d
  CHECK_THROWS(staircase(gf, 5, 3, StairVariant::Shifted)); // m0 + 1 > d
}

TEST_CASE("staircase extraction law, brute force m <= 4") {
  for (int m = 2; m <= 4; ++m) {
    const int d = staircase_m0(m) + 1;
    auto st = staircase(gf, m, d, StairVariant::Base);
    auto target = unit(1, st.m0, d);
    for (const auto& sigma : all_perms(m)) {
      Perm inv = sigma.inverse();
      MatTuple<GfpField> t;
      for (int i = 0; i < m; ++i) t.push_back(st.units[inv(i)]);
      for (const auto& pi : all_perms(m)) {
        auto prod = ordered_eval(t, pi);
        if (pi == sigma)
          CHECK(prod == target);
        else
          CHECK(prod.is_zero());
      }
    }
  }
}

TEST_CASE("support_inclusion") {
  auto gc = polys::generalized_commutator(gf);
  CHECK_FALSE(support_inclusion(gc, gc, 4));

  auto g = gc + parse_poly_spec(gf, "tree:(x2*(x1*x3))");
  auto w = support_inclusion(gc, g, 4);
  REQUIRE(w);
  CHECK(gc.evaluate(w->tuple).is_zero());
  CHECK_FALSE(g.evaluate(w->tuple).is_zero());

  // full-support f admits any g
  MultilinearPoly<GfpField> full(gf, 3);
  for (const auto& sigma : all_perms(3)) full.add_term(sigma, gf.one());
  CHECK_FALSE(support_inclusion(full, gc, 4));
}

TEST_CASE("equivalence classes") {
  auto gc = polys::generalized_commutator(gf);
  CHECK(equivalence_classes(gc).size() == 1);

  MultilinearPoly<GfpField> two(gf, 3);
  two.add_term(Perm(3), gf.one());
  two.add_term(Perm::from_one_line_1based({2, 3, 1}), gf.one());
  CHECK(equivalence_classes(two).size() == 2);

  MultilinearPoly<GfpField> one(gf, 3);
  one.add_term(Perm::from_one_line_1based({2, 1, 3}), gf.from_long(5));
  CHECK(equivalence_classes(one).size() == 1);
}

TEST_CASE("class_lambdas") {
  auto gc = polys::generalized_commutator(gf);
  {
    auto cl = class_lambdas(gc, gc.scaled(gf.from_long(2)));
    CHECK_FALSE(cl.inconsistency);
    REQUIRE(cl.lambdas.size() == 1);
    CHECK(gf.eq(cl.lambdas[0], gf.from_long(2)));
  }
  {
    auto g = parse_poly_spec(gf, "tree:(x1*(x2*x3))+tree:(x3*(x2*x1))");
    auto cl = class_lambdas(gc, g);
    REQUIRE(cl.inconsistency);
    auto [sigma, tau] = *cl.inconsistency;
    CHECK_FALSE(gf.eq(gf.div(g.coeff(sigma), gc.coeff(sigma)),
                      gf.div(g.coeff(compose(tau, sigma)),
                             gc.coeff(compose(tau, sigma)))));
  }
  {
    // The degree-5 family splits into two support classes, and each class
    // mixes both coefficient ratios (1 on the h1 part, beta/alpha on the
    // h2 part, connected by one transposition), so alpha != beta shows up
    // as a within-class inconsistency.
    auto fam = polys::sec2_family(gf, gf.from_long(1), gf.from_long(2));
    auto classes = equivalence_classes(fam.f);
    CHECK(classes.size() == 2);
    for (const auto& cls : classes) CHECK(cls.size() == 8);
    auto cl = class_lambdas(fam.f, fam.g);
    REQUIRE(cl.inconsistency);
    auto [sigma, tau] = *cl.inconsistency;
    CHECK_FALSE(gf.eq(gf.div(fam.g.coeff(sigma), fam.f.coeff(sigma)),
                      gf.div(fam.g.coeff(compose(tau, sigma)),
                             fam.f.coeff(compose(tau, sigma)))));
  }
}

TEST_CASE("case_tuple: the shifted-staircase instance") {
  auto gc = polys::generalized_commutator(gf);
  Perm tau = Perm::from_one_line_1based({3, 2, 1});
  auto t = case_tuple(gc, Perm(3), tau, 3);
  MatTuple<GfpField> expect = {unit(1, 2, 3) + unit(2, 3, 3), unit(2, 2, 3),
                               unit(1, 2, 3) + unit(2, 3, 3)};
  CHECK(t == expect);
  CHECK(gc.evaluate(t).is_zero());
  auto g = parse_poly_spec(gf, "tree:(x1*(x2*x3))+tree:(x3*(x2*x1))");
  CHECK(g.evaluate(t) == unit(1, 3, 3).scaled(gf.from_long(2)));
}

TEST_CASE("case_tuple kills f on random in-support pairs") {
  SplitMix64 rng(61);
  auto perms = all_perms(4);
  auto taus = all_transpositions(4);
  int done = 0;
  while (done < 100) {
    MultilinearPoly<GfpField> f(gf, 4);
    for (const auto& sigma : perms)
      if (rng.below(3) == 0)
        f.add_term(sigma, GfpField::Elem(1 + rng.below(gf.p() - 1)));
    std::optional<std::pair<Perm, Perm>> edge;
    for (const auto& sigma : f.support()) {
      for (const auto& tau : taus)
        if (!gf.is_zero(f.coeff(compose(tau, sigma)))) {
          edge = {sigma, tau};
          break;
        }
      if (edge) break;
    }
    if (!edge) continue;
    auto t = case_tuple(f, edge->first, edge->second, 4);
    CHECK(f.evaluate(t).is_zero());  // also asserted inside case_tuple
    ++done;
  }
}

TEST_CASE("minimal_cross_pair") {
  MultilinearPoly<GfpField> f(gf, 3);
  Perm c3 = Perm::from_one_line_1based({2, 3, 1});
  f.add_term(Perm(3), gf.one());
  f.add_term(c3, gf.one());
  MultilinearPoly<GfpField> g(gf, 3);
  g.add_term(Perm(3), gf.one());
  g.add_term(c3, gf.from_long(2));
  auto cl = class_lambdas(f, g);
  REQUIRE(cl.classes.size() == 2);
  REQUIRE_FALSE(cl.inconsistency);
  auto pair = minimal_cross_pair(cl, gf);
  CHECK(pair.ell == 2);
  CHECK(cayley_distance(pair.sigma1, pair.sigma2) == 2);

  MultilinearPoly<GfpField> single(gf, 3);
  single.add_term(Perm(3), gf.one());
  auto cls = class_lambdas(single, single);
  CHECK_THROWS(minimal_cross_pair(cls, gf));
}

TEST_CASE("build_witness reproduces the two-block odd-cycle tuple") {
  // canonical 3-cycle (3 2 1): W = (e11, e12, e22 - r e11)
  Perm q = Perm::from_one_line_1based({3, 1, 2});
  auto r = gf.from_long(5);
  auto w = build_witness(gf, q, r, 4);
  MatTuple<GfpField> expect = {unit(1, 1, 4), unit(1, 2, 4),
                               unit(2, 2, 4) - unit(1, 1, 4).scaled(r)};
  CHECK(w == expect);
}

TEST_CASE("build_witness zero pattern, exhaustive over S_m for m <= 5") {
  auto ratio = gf.from_long(3);
  for (int m = 2; m <= 5; ++m) {
    const int d = staircase_m0(m) + 1;
    for (const auto& q : all_perms(m)) {
      if (q.is_identity()) continue;
      auto w = build_witness(gf, q, ratio, d);
      const int ell = cayley_distance(Perm(m), q);
      // Identity traversal gives a single first-row matrix unit...
      auto target = ordered_eval(w, Perm(m));
      int hits = 0;
      for (int j = 0; j < d; ++j) {
        if (gf.is_zero(target.at(0, j))) continue;
        CHECK(gf.eq(target.at(0, j), gf.one()));
        ++hits;
      }
      CHECK(hits == 1);
      for (int i = 1; i < d; ++i)
        for (int j = 0; j < d; ++j) CHECK(gf.is_zero(target.at(i, j)));
      // ...and the quotient traversal gives exactly -ratio times it.
      CHECK(ordered_eval(w, q) == target.scaled(gf.neg(ratio)));
      for (const auto& sigma : all_perms(m)) {
        if (sigma == Perm(m) || sigma == q) continue;
        if (ordered_eval(w, sigma).is_zero()) continue;
        CHECK(cayley_distance(Perm(m), sigma) < ell);
        CHECK(cayley_distance(q, sigma) < ell);
      }
    }
  }
}

TEST_CASE("nullstellensatz_check: proportional and witness routes") {
  auto gc = polys::generalized_commutator(gf);
  NullOptions opts;
  opts.seed = 9;

  auto r1 = nullstellensatz_check(gc, gc.scaled(gf.from_long(2)), 4, opts);
  CHECK(r1.status == NullStatus::Proportional);
  REQUIRE(r1.lambda);
  CHECK(gf.eq(*r1.lambda, gf.from_long(2)));
  CHECK_FALSE(r1.falsifier_found);

  auto g = parse_poly_spec(gf, "tree:(x1*(x2*x3))+tree:(x3*(x2*x1))");
  auto r2 = nullstellensatz_check(gc, g, 4, opts);
  CHECK(r2.status == NullStatus::Witness);
  CHECK(r2.route == "within-class");
  REQUIRE(r2.witness);
  CHECK(gc.evaluate(*r2.witness).is_zero());
  CHECK_FALSE(g.evaluate(*r2.witness).is_zero());
  CHECK(r2.falsifier_found);
}

TEST_CASE("nullstellensatz_check: cross-class route with scattered labels") {
  SplitMix64 rng(71);
  auto perms = all_perms(3);
  NullOptions opts;
  opts.seed = 11;
  opts.falsifier_budget = 300;
  int done = 0;
  while (done < 12) {
    const Perm& sa = perms[rng.below(perms.size())];
    Perm cyc = Perm::from_one_line_1based(
        rng.below(2) ? std::vector<int>{2, 3, 1} : std::vector<int>{3, 1, 2});
    Perm sb = compose(cyc, sa);
    MultilinearPoly<GfpField> f(gf, 3);
    f.add_term(sa, GfpField::Elem(1 + rng.below(100)));
    f.add_term(sb, GfpField::Elem(1 + rng.below(100)));
    auto g = f;
    g.add_term(sb, f.coeff(sb));  // doubles one class
    auto rep = nullstellensatz_check(f, g, 4, opts);
    CHECK(rep.status == NullStatus::Witness);
    CHECK(rep.route == "cross-class");
    REQUIRE(rep.witness);
    CHECK(f.evaluate(*rep.witness).is_zero());
    CHECK_FALSE(g.evaluate(*rep.witness).is_zero());
    ++done;
  }
}

TEST_CASE("nullstellensatz_check: unsupported outside the hypothesis") {
  auto fam = polys::sec2_family(gf, gf.from_long(1), gf.from_long(2));
  auto rep = nullstellensatz_check(fam.f, fam.g, 2);
  CHECK(rep.status == NullStatus::Unsupported);
  CHECK_FALSE(rep.internal_failure);
  CHECK(rep.reason.find("m < 2d - 3") != std::string::npos);
}

TEST_CASE("nullstellensatz_check: proportional property on random f") {
  SplitMix64 rng(83);
  auto perms = all_perms(3);
  NullOptions opts;
  opts.seed = 13;
  opts.crosscheck = false;
  for (int it = 0; it < 20; ++it) {
    MultilinearPoly<GfpField> f(gf, 3);
    for (const auto& sigma : perms)
      if (rng.below(2)) f.add_term(sigma, GfpField::Elem(1 + rng.below(100)));
    if (f.is_zero_poly()) continue;
    auto lam = GfpField::Elem(1 + rng.below(100));
    auto rep = nullstellensatz_check(f, f.scaled(lam), 4, opts);
    CHECK(rep.status == NullStatus::Proportional);
    REQUIRE(rep.lambda);
    CHECK(gf.eq(*rep.lambda, lam));
  }
}

TEST_CASE("reindexing transports witnesses") {
  SplitMix64 rng(97);
  auto perms = all_perms(3);
  NullOptions opts;
  opts.seed = 17;
  opts.crosscheck = false;
  for (int it = 0; it < 10; ++it) {
    auto gc = polys::generalized_commutator(gf);
    auto g = parse_poly_spec(gf, "tree:(x1*(x2*x3))+tree:(x3*(x2*x1))");
    const Perm& psi = perms[rng.below(perms.size())];
    auto rep = nullstellensatz_check(gc.reindex(psi), g.reindex(psi), 4, opts);
    REQUIRE(rep.status == NullStatus::Witness);
    const auto& e = *rep.witness;
    MatTuple<GfpField> transported;
    for (int i = 0; i < 3; ++i) transported.push_back(e[psi(i)]);
    CHECK(gc.evaluate(transported).is_zero());
    CHECK_FALSE(g.evaluate(transported).is_zero());
  }
}

TEST_CASE("random_zero_falsifier") {
  auto gc = polys::generalized_commutator(gf);
  CHECK_FALSE(random_zero_falsifier(gc, gc.scaled(gf.from_long(7)), 3, 200, 1));
  auto g = parse_poly_spec(gf, "tree:(x1*(x2*x3))+tree:(x3*(x2*x1))");
  auto w = random_zero_falsifier(gc, g, 3, 1000, 1);
  REQUIRE(w);
  CHECK(gc.evaluate(*w).is_zero());
  CHECK_FALSE(g.evaluate(*w).is_zero());
}

TEST_CASE("prop41_crosscheck") {
  ZeroGenConfig cfg;
  cfg.seed = 21;
  auto f = polys::cyclic(gf, {gf.one(), gf.one()});
  auto rep = prop41_crosscheck(f, f.scaled(gf.from_long(2)), 2, cfg, 200);
  CHECK(rep.certified);
  CHECK_FALSE(rep.falsifier_found);
  REQUIRE(rep.lambda);
  CHECK(gf.eq(*rep.lambda, gf.from_long(2)));
  CHECK(rep.h_zero_samples == rep.h_samples);
  REQUIRE(rep.h_is_zero_poly);
  CHECK(*rep.h_is_zero_poly);

  auto f3 = polys::cyclic(gf, {gf.one(), gf.one(), gf.one()});
  auto bad = f3 + parse_poly_spec(gf, "tree:(x1*(x2*x3))");
  auto rep2 = prop41_crosscheck(f3, bad, 2, cfg, 100);
  CHECK(rep2.certified);
  CHECK(rep2.falsifier_found);
  CHECK_FALSE(rep2.lambda);
}
