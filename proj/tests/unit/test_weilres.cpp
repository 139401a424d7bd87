#include "doctest.h"

#include "finmat/errors.hpp"
#include "finmat/weilres/weil.hpp"

#include <random>

using namespace finmat;

namespace {

KMatrix intm(const std::vector<std::vector<long>>& r) {
  std::vector<std::vector<QuadElem>> q;
  for (const auto& row : r) {
    q.emplace_back();
    for (long v : row) q.back().emplace_back(v);
  }
  return KMatrix::from_rows(q);
}

CycNum random_elem(std::mt19937& rng, int N) {
  std::uniform_int_distribution<int> d(-3, 3);
  std::vector<Rational> c(N);
  for (auto& x : c) x = d(rng);
  return CycNum::from_powers(N, c);
}

CycMatrix random_matrix(std::mt19937& rng, int N, int n) {
  CycMatrix A(n, std::vector<CycNum>(n));
  for (auto& row : A)
    for (auto& v : row) v = random_elem(rng, N);
  return A;
}

// prod over sigma in Gal(Q(zeta_N)/K) of (x - sigma(a)), lowest coefficient first.
std::vector<CycNum> orbit_poly(const CycNum& a, long N, const FieldDescriptor& K) {
  std::vector<CycNum> p{CycNum(1)};
  for (long k : galois_fixing(N, K)) {
    CycNum r = a.galois(k);
    std::vector<CycNum> q(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= p[i] * r;
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

TEST_CASE("scalar restriction") {
  auto B = quadratic_basis(FieldDescriptor::imag_quadratic(1));
  CHECK(B.m == 2);
  CHECK(res_scalar(CycNum::zeta(4), B) == intm({{0, -1}, {1, 0}}));
  CHECK(res_scalar(CycNum(frac(3, 2)), B) == KMatrix::identity(2).scaled(QuadElem(frac(3, 2))));
  CHECK(res_scalar(CycNum(0), B).is_zero());
  CHECK_THROWS_AS(res_scalar(CycNum::zeta(3), B), Error);
  CHECK_THROWS_AS(make_basis(4, {1}, FieldDescriptor::rationals(), {CycNum(1), CycNum(2)}), Error);
}

TEST_CASE("quaternion generators restrict to rational ones") {
  auto B = quadratic_basis(FieldDescriptor::imag_quadratic(1));
  CycNum i = CycNum::zeta(4);
  CycMatrix a{{0, -1}, {1, 0}}, b{{i, 0}, {0, -i}};
  auto Ra = res_matrix(a, B), Rb = res_matrix(b, B);
  CHECK(Ra == intm({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(Rb == intm({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
  auto el = kgroup_elements({Ra, Rb}, 100);
  CHECK(el.size() == 8);
  int involutions = 0;
  for (const auto& g : el) involutions += (!g.is_identity() && (g * g).is_identity());
  CHECK(involutions == 1);
  CHECK(res_trace_check(a, B));
  CHECK(res_trace_check(b, B));
  CHECK(res_matrix({{1, 0}, {0, 1}}, B).is_identity());
  // Degree-2 character of Q8 on classes (1, -1, i, j, k).
  std::vector<CycNum> chi{2, -2, 0, 0, 0};
  CHECK(res_character(chi, B) == std::vector<CycNum>{4, -4, 0, 0, 0});
  CHECK(res_character({1, 1}, B) == std::vector<CycNum>{2, 2});
}

TEST_CASE("restriction from Q(zeta_7) to Q(sqrt(-7))") {
  auto K = FieldDescriptor::imag_quadratic(7);
  auto B = cyclotomic_basis(7, K);
  CHECK(B.m == 3);
  CycNum z = CycNum::zeta(7);
  CycMatrix D{{z, 0, 0}, {0, z * z, 0}, {0, 0, z * z * z * z}};
  auto R = res_matrix(D, B);
  CHECK(R.rows() == 9);
  CHECK(kgroup_order({R}, 100) == 7);
  CHECK(res_trace_check(D, B));
  auto C3 = cyclotomic_basis(3, FieldDescriptor::rationals());
  CycNum w = CycNum::zeta(3);
  CHECK(res_character({1, w, w * w}, C3) == std::vector<CycNum>{2, -1, -1});
}

TEST_CASE("randomized homomorphism and trace identity") {
  std::mt19937 rng(7);
  struct Ext {
    long N;
    FieldDescriptor K;
  };
  std::vector<Ext> exts{{4, FieldDescriptor::rationals()},       {5, FieldDescriptor::rationals()},
                        {12, FieldDescriptor::imag_quadratic(1)}, {8, FieldDescriptor::imag_quadratic(2)},
                        {7, FieldDescriptor::imag_quadratic(7)},  {12, FieldDescriptor::imag_quadratic(3)},
                        {11, FieldDescriptor::imag_quadratic(11)}};
  int samples = 0;
  for (int s = 0; s < 100; ++s) {
    const auto& e = exts[s % exts.size()];
    auto B = cyclotomic_basis(e.N, e.K);
    int n = 1 + s % 3;
    auto A = random_matrix(rng, static_cast<int>(e.N), n);
    auto C = random_matrix(rng, static_cast<int>(e.N), n);
    CHECK(res_matrix(cyc_mul(A, C), B) == res_matrix(A, B) * res_matrix(C, B));
    CHECK(res_trace_check(A, B));
    // Characteristic polynomial of a multiplication map is the Galois orbit polynomial.
    CycNum a = random_elem(rng, static_cast<int>(e.N));
    auto cp = res_scalar(a, B).charpoly();
    auto op = orbit_poly(a, e.N, e.K);
    REQUIRE(op.size() == cp.size() + 1);
    for (std::size_t k = 0; k < cp.size(); ++k) CHECK(cp[k].to_cyc(e.K) == op[k]);
    ++samples;
  }
  CHECK(samples == 100);
}
