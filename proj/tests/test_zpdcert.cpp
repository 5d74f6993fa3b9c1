#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zpd/polyspec.hpp"
#include "zpd/suites.hpp"

using namespace zpd;

namespace {
const GfpField gf(32003);
const RationalField qf;
}  // namespace

TEST_CASE("zeros_structured enumerates verified unit zeros") {
  auto f = polys::prod2(gf);
  auto zeros = zeros_structured(f, 2, 1 << 20);
  CHECK(zeros.size() <= 16);
  bool has_e11_e22 = false;
  auto e11 = matrix_unit(gf, 1, 1, 2), e22 = matrix_unit(gf, 2, 2, 2);
  for (const auto& z : zeros) {
    CHECK(f.evaluate(z).is_zero());
    if (z[0] == e11 && z[1] == e22) has_e11_e22 = true;
  }
  CHECK(has_e11_e22);

  auto gc = polys::generalized_commutator(gf);
  auto gz = zeros_structured(gc, 2, 1 << 20);
  CHECK(gz.size() <= 64);
  bool has_aba = false;
  auto e12 = matrix_unit(gf, 1, 2, 2);
  for (const auto& z : gz)
    if (z[0] == e11 && z[1] == e12 && z[2] == e11) has_aba = true;
  CHECK(has_aba);
}

TEST_CASE("zeros_kernel emits verified zeros") {
  auto gc = polys::generalized_commutator(gf);
  for (int slot = 0; slot < 3; ++slot) {
    auto zs = zeros_kernel(gc, 2, slot, 4, 99);
    for (const auto& z : zs) CHECK(gc.evaluate(z).is_zero());
  }
  // [x1,x2] with identity fill: the whole of M_d is the kernel.
  auto lie = polys::lie2(gf);
  auto rows = partial_linear_map(lie, {Mat<GfpField>::identity(gf, 3),
                                       Mat<GfpField>::identity(gf, 3)}, 0);
  CHECK(kernel_basis(gf, rows, 9).size() == 9);
}

TEST_CASE("image_span ranks") {
  CHECK(image_span(polys::prod2(gf), 2).rank() == 4);
  CHECK(image_span(polys::prod2(gf), 3).rank() == 9);
  // commutators span sl_d in characteristic zero
  CHECK(image_span(polys::lie2(qf), 2).rank() == 3);
  // the standard identity has image rank 0
  CHECK(image_span(polys::standard(gf, 4), 2).rank() == 0);
}

TEST_CASE("tau_f_space rank equals image rank") {
  SplitMix64 rng(31);
  auto perms = all_perms(3);
  for (int it = 0; it < 10; ++it) {
    MultilinearPoly<GfpField> f(gf, 3);
    for (const auto& sigma : perms)
      if (rng.below(2)) f.add_term(sigma, GfpField::Elem(rng.below(gf.p())));
    CHECK(tau_f_space(f, 2).rank() == image_span(f, 2).rank());
  }
}

TEST_CASE("zero span respects the soundness bound") {
  auto gc = polys::generalized_commutator(gf);
  ZeroGenConfig cfg;
  cfg.seed = 5;
  cfg.stabilization_window = 3;
  auto z = zero_span(gc, 2, cfg);
  auto tau = tau_f_space(gc, 2);
  CHECK(z.rank() + tau.rank() <= 64);
  // every tau row pairs to zero with every zero-span row
  for (const auto& trow : tau.rows())
    for (const auto& zrow : z.rows()) {
      GfpField::Elem s = 0;
      for (std::size_t k = 0; k < zrow.size(); ++k)
        s = gf.add(s, gf.mul(trow[k], zrow[k]));
      CHECK(gf.is_zero(s));
    }
}

TEST_CASE("certify: classical polynomials on M_2") {
  ZeroGenConfig cfg;
  cfg.seed = 42;
  for (const char* spec : {"prod2", "lie2", "jordan2", "gc"}) {
    auto f = parse_poly_spec(gf, spec);
    auto v = certify(f, 2, cfg);
    CHECK(v.status == ZpdStatus::Certified);
    CHECK(v.rank_zero_span == v.target_rank);
  }
}

TEST_CASE("certify is monotone in the budget") {
  ZeroGenConfig small;
  small.seed = 42;
  ZeroGenConfig big = small;
  big.kernel_samples_per_slot *= 2;
  big.kernel_budget_total *= 2;
  auto gc = polys::generalized_commutator(gf);
  CHECK(certify(gc, 2, small).status == ZpdStatus::Certified);
  CHECK(certify(gc, 2, big).status == ZpdStatus::Certified);
}

TEST_CASE("certify flags identities as vacuously determined") {
  ZeroGenConfig cfg;
  cfg.seed = 1;
  auto v = certify(polys::standard(gf, 4), 2, cfg);
  CHECK(v.status == ZpdStatus::Certified);
  CHECK(v.rank_image == 0);
  CHECK(v.note.find("vacuously") != std::string::npos);
}

TEST_CASE("certify refutes the degree-5 family (small windows)") {
  auto fam = polys::sec2_family(gf, gf.from_long(1), gf.from_long(2));
  ZeroGenConfig cfg;
  cfg.seed = 42;
  cfg.stabilization_window = 6;
  cfg.validation_samples = 200;
  auto v = certify(fam.f, 2, cfg);
  CHECK(v.status == ZpdStatus::CandidateNotZpd);
  REQUIRE(v.candidate_functional);
  CHECK(v.rank_zero_span < v.target_rank);
  // the reported functional annihilates freshly sampled zeros
  auto zeros = sample_kernel_zeros(fam.f, 2, 100, 777);
  for (const auto& z : zeros)
    CHECK(gf.is_zero(
        pair_functional(gf, *v.candidate_functional, tensor_flatten(z))));
}

TEST_CASE("sec2_phi vanishes on zeros and escapes the tau space") {
  auto fam = polys::sec2_family(gf, gf.from_long(1), gf.from_long(2));
  auto phi = sec2_phi(gf, 2);
  auto zeros = sample_kernel_zeros(fam.f, 2, 100, 4242);
  for (const auto& z : zeros)
    CHECK(gf.is_zero(pair_functional(gf, phi.coords, tensor_flatten(z))));
  CHECK_FALSE(tau_f_space(fam.f, 2).contains(phi.coords));

  // 5-linearity of the pairing in one slot
  SplitMix64 rng(47);
  MatTuple<GfpField> t;
  for (int k = 0; k < 5; ++k) t.push_back(random_mat(gf, 2, rng));
  auto b = random_mat(gf, 2, rng);
  auto u = t, v = t;
  u[2] = t[2] + b;
  v[2] = b;
  auto lhs = pair_functional(gf, phi.coords, tensor_flatten(u));
  auto rhs = gf.add(pair_functional(gf, phi.coords, tensor_flatten(t)),
                    pair_functional(gf, phi.coords, tensor_flatten(v)));
  CHECK(gf.eq(lhs, rhs));
}

TEST_CASE("restricted certification: sl x full commutator") {
  SubspaceSpec<GfpField> spec;
  spec.slot_bases = {sl_basis(gf, 2), SubspaceSpec<GfpField>::full_basis(gf, 2)};
  spec.slot_names = {"sl", "full"};
  ZeroGenConfig cfg;
  cfg.seed = 3;
  auto v = certify(polys::lie2(gf), 2, cfg, &spec);
  CHECK(v.status == ZpdStatus::Certified);
  CHECK(v.ambient == 12);
}

TEST_CASE("sl basis") {
  auto b2 = sl_basis(gf, 2);
  CHECK(b2.size() == 3);
  for (const auto& mtx : sl_basis(gf, 4)) CHECK(gf.is_zero(mtx.trace()));
}

TEST_CASE("normalization identity for tau-space functionals") {
  auto f = polys::jordan2(gf);
  auto tau = tau_f_space(f, 2);
  for (const auto& phi : tau.rows())
    CHECK(lemma33_identity_holds(f, 2, phi, 25, 99));
}

TEST_CASE("gc lemma suite") {
  for (int d : {2, 3}) {
    auto rep = gc_lemma_suite(gf, d);
    CHECK(rep.self_test_ok);
    for (const auto& fam : rep.families) {
      CHECK(fam.failures == 0);
      if (fam.name == "sum-family-1")
        CHECK(fam.instances == (d == 2 ? 0u : 36u));
      else
        CHECK(fam.instances > 0);
    }
  }
}

TEST_CASE("cyclic relation suite") {
  for (int m : {2, 3}) {
    std::vector<GfpField::Elem> alphas;
    for (int i = 0; i < m; ++i) alphas.push_back(gf.from_long(i + 1));
    auto rep = cyclic_relation_suite(gf, alphas, 3, 7, 5);
    CHECK(rep.failures == 0);
    CHECK(rep.self_test_ok);
    CHECK(rep.relations_checked == 5 * 12);
  }
  // sum of coefficients must be nonzero
  CHECK_THROWS(cyclic_relation_suite(gf, {gf.one(), gf.neg(gf.one())}, 2, 1, 1));
}

TEST_CASE("parallel generation matches sequential generation") {
  auto gc = polys::generalized_commutator(gf);
  ZeroGenConfig seq;
  seq.seed = 42;
  ZeroGenConfig par = seq;
  par.parallel = true;
  auto a = certify(gc, 2, seq);
  auto b = certify(gc, 2, par);
  CHECK(a.status == b.status);
  CHECK(a.rank_zero_span == b.rank_zero_span);
  CHECK(a.gen_structured == b.gen_structured);
  CHECK(a.gen_kernel == b.gen_kernel);
}
