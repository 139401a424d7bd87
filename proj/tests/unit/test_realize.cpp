#include "doctest.h"

#include "finmat/chars/char_table.hpp"
#include "finmat/chars/characters.hpp"
#include "finmat/errors.hpp"
#include "finmat/realize/lattice.hpp"
#include "finmat/realize/realize.hpp"
#include "finmat/realize/structure.hpp"
#include "finmat/schurbound/schur.hpp"

#include "oracles.hpp"

#include <cstdlib>
#include <random>

using namespace finmat;
using finmat::oracle::c2_sl23;

namespace {

MatFp M2(int p, int a, int b, int c, int d) { return MatFp::from_rows(p, {{a, b}, {c, d}}); }


int find_orbit(const std::vector<GaloisOrbit>& orbs, const CharacterTable& T, const Character& want) {
  for (std::size_t o = 0; o < orbs.size(); ++o)
    for (int i : orbs[o].members)
      if (T.rows[i] == want) return static_cast<int>(o);
  return -1;
}

// The rational degree-2 character that is -2 on the central -1 of SL(2,3) and
// +2 on the product of both central involutions.
int chi7_index(const FiniteGroup& G, const CharacterTable& T) {
  auto z = MatFp::from_rows(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 1}});
  auto w = MatFp::from_rows(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  int cz = G.class_of(G.index_of(z)), cw = G.class_of(G.index_of(w));
  for (int i = 0; i < static_cast<int>(T.rows.size()); ++i) {
    if (T.degrees[i] != 2) continue;
    bool rat = true;
    for (const auto& v : T.rows[i].values) rat = rat && v.is_rational();
    if (!rat) continue;
    // Kernel generated by the element with value +2 among the two central involutions.
    if (T.rows[i].values[cw] == CycNum(2) && T.rows[i].values[cz] == CycNum(-2)) return i;
  }
  return -1;
}

bool brute_isotropic(long a, long b) {
  // a x^2 + b y^2 = z^2 nontrivially; Holzer bounds make this search exact.
  long bx = static_cast<long>(std::sqrt(std::abs(b))) + 1, by = static_cast<long>(std::sqrt(std::abs(a))) + 1;
  for (long x = 0; x <= bx; ++x)
    for (long y = 0; y <= by; ++y) {
      if (x == 0 && y == 0) continue;
      long v = a * x * x + b * y * y;
      if (v < 0) continue;
      long z = static_cast<long>(std::llround(std::sqrt(static_cast<double>(v))));
      if (z * z == v) return true;
    }
  return false;
}

}  // namespace

TEST_CASE("Hilbert symbols") {
  CHECK(hilbert_symbol(-1, -1, 2) == -1);
  CHECK(hilbert_symbol(-1, -1, 0) == -1);
  CHECK(hilbert_symbol(-1, -1, 3) == 1);
  CHECK(hilbert_symbol(2, 3, 3) == -1);
  CHECK(hilbert_symbol(5, 3, 5) == -1);
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int t = 0; t < 200; ++t) {
    long a = d(rng), b = d(rng);
    if (a == 0 || b == 0) continue;
    // Product formula.
    int prod = hilbert_symbol(a, b, 0);
    for (long p : prime_divisors(std::abs(2 * a * b))) prod *= hilbert_symbol(a, b, p);
    CHECK(prod == 1);
    if (std::abs(a) <= 12 && std::abs(b) <= 12) CHECK(quaternion_splits(a, b, FieldDescriptor::rationals()) == brute_isotropic(a, b));
  }
  CHECK(!quaternion_splits(-1, -1, FieldDescriptor::rationals()));
  CHECK(quaternion_splits(-1, -1, FieldDescriptor::imag_quadratic(19)));
  CHECK(quaternion_splits(-1, -1, FieldDescriptor::imag_quadratic(1)));
  CHECK(!quaternion_splits(-1, -1, FieldDescriptor::imag_quadratic(7)));
}

TEST_CASE("projectors") {
  auto C3 = FiniteGroup::from_matrices({M2(7, 2, 0, 0, 2)});
  auto T = character_table(C3);
  auto Q = FieldDescriptor::rationals();
  auto orbs = galois_orbits(T, Q);
  auto e0 = isotypic_idempotent(C3, T, orbs[0], Q);
  for (const auto& x : e0) CHECK(x == QuadElem(frac(1, 3)));
  auto P0 = isotypic_projector(C3, e0);
  CHECK(P0.rank() == 1);
  auto e1 = isotypic_idempotent(C3, T, orbs[1], Q);
  CHECK(projector_checks(C3, e1));
  auto P1 = isotypic_projector(C3, e1);
  CHECK(P1 * P1 == P1);
  CHECK(P1.rank() == 2);
  // Averaging the order-3 rotation gives zero: no trivial constituent.
  auto M = KMatrix::from_rows({{0, 1}, {-1, -1}});
  CHECK((KMatrix::identity(2) + M + M * M).is_zero());
  CHECK_THROWS_AS(spin_up(C3, {RegVec(3)}, Q), DegenerateComponent);
}

TEST_CASE("orbit modules and Schur indices") {
  auto Q = FieldDescriptor::rationals();
  auto C3 = FiniteGroup::from_matrices({M2(7, 2, 0, 0, 2)});
  auto T3 = character_table(C3);
  auto o3 = galois_orbits(T3, Q);
  auto r = realize_orbit(C3, T3, o3, 1, Q, 3);
  REQUIRE(r.module);
  CHECK(r.module->dim == 2);
  auto cp = r.module->images[C3.generators()[0]].charpoly();
  CHECK(cp == std::vector<QuadElem>{1, 1});

  auto Q8 = FiniteGroup::from_matrices({M2(5, 0, 4, 1, 0), M2(5, 2, 0, 0, 3)});
  auto T8 = character_table(Q8);
  auto o8 = galois_orbits(T8, Q);
  int last = static_cast<int>(o8.size()) - 1;
  auto rq = realize_orbit(Q8, T8, o8, last, Q, 4);
  CHECK(rq.schur == 2);
  REQUIRE(rq.module);
  CHECK(rq.module->dim == 4);
  auto Ki = FieldDescriptor::imag_quadratic(1);
  auto oi = galois_orbits(T8, Ki);
  auto ri = realize_orbit(Q8, T8, oi, static_cast<int>(oi.size()) - 1, Ki, 3);
  CHECK(ri.schur == 1);
  REQUIRE(ri.module);
  CHECK(ri.module->dim == 2);
  CHECK(ri.module->afforded == T8.rows.back());
  for (int o = 0; o < static_cast<int>(o8.size()); ++o)
    if (T8.degrees[o8[o].members[0]] == 1) CHECK(schur_index(Q8, T8, o8, o, Q) == 1);
}

TEST_CASE("C2 x SL(2,3): Schur indices of the rational degree-2 character") {
  auto G = c2_sl23();
  auto T = character_table(G);
  int i7 = chi7_index(G, T);
  REQUIRE(i7 >= 0);
  struct Row {
    long d;
    int m;
  };
  for (auto [d, m] : std::vector<Row>{{0, 2}, {19, 1}, {7, 2}, {11, 1}, {43, 1}, {1, 1}, {2, 1}, {3, 1}}) {
    auto K = d == 0 ? FieldDescriptor::rationals() : FieldDescriptor::imag_quadratic(d);
    auto orbs = galois_orbits(T, K);
    int o = find_orbit(orbs, T, T.rows[i7]);
    REQUIRE(o >= 0);
    auto r = realize_orbit(G, T, orbs, o, K, 3);
    CHECK_MESSAGE(r.schur == m, "d = " << d);
    if (m == 1) {
      REQUIRE(r.module);
      CHECK(r.module->afforded == T.rows[i7]);
      CHECK(r.module->dim == 2);
    }
  }
}

TEST_CASE("assembly") {
  auto K = FieldDescriptor::imag_quadratic(19);
  auto G = c2_sl23();
  auto T = character_table(G);
  auto orbs = galois_orbits(T, K);
  std::vector<OrbitRealization> mods;
  std::vector<int> m;
  for (int o = 0; o < static_cast<int>(orbs.size()); ++o) {
    int d0 = T.degrees[orbs[o].members[0]] * static_cast<int>(orbs[o].members.size());
    if (d0 > 3) {
      mods.emplace_back();
      m.push_back(1);
      continue;
    }
    mods.push_back(realize_orbit(G, T, orbs, o, K, 3));
    m.push_back(mods.back().schur);
  }
  auto cands = candidate_sums(T, orbs, 3, m);
  REQUIRE(!cands.empty());
  int sl48 = 0;
  for (const auto& c : cands) {
    auto R = assemble(G, T, orbs, c, mods, K);
    CHECK(R.order == 48);
    CHECK(R.n == 3);
    CHECK(R.is_sl == determinant_trivial(T, orbs, c, m));
    sl48 += R.is_sl;
  }
  // Every faithful 3-dim sum sends the central involution of both factors to -I.
  CHECK(sl48 == 0);

  auto C1 = FiniteGroup::from_matrices({MatFp::identity(5, 1)});
  auto T1 = character_table(C1);
  auto o1 = galois_orbits(T1, K);
  std::vector<OrbitRealization> m1{realize_orbit(C1, T1, o1, 0, K, 3)};
  auto c1 = candidate_sums(T1, o1, 3, {1});
  auto R1 = assemble(C1, T1, o1, c1[0], m1, K);
  CHECK(R1.order == 1);
  CHECK(R1.is_sl);
  CHECK(R1.generators[0].is_identity());
}

TEST_CASE("structure labels") {
  auto lab = [](std::vector<MatFp> g) { return iso_label(FiniteGroup::from_matrices(g)); };
  CHECK(lab({MatFp::identity(5, 2)}) == "C1");
  CHECK(lab({M2(7, 2, 0, 0, 4)}) == "C3");
  CHECK(lab({M2(7, 6, 0, 0, 1), M2(7, 1, 0, 0, 6)}) == "C2^2");
  CHECK(lab({M2(5, 2, 0, 0, 4), M2(5, 1, 0, 0, 4)}) == "C2xC4");
  CHECK(lab({M2(7, 3, 0, 0, 1), M2(7, 1, 0, 0, 6)}) == "C2xC6");
  CHECK(lab({M2(5, 0, 4, 1, 0), M2(5, 2, 0, 0, 3)}) == "Q8");
  CHECK(lab({M2(3, 1, 1, 0, 1), M2(3, 1, 0, 1, 1)}) == "SL(2,3)");
  CHECK(lab({M2(3, 1, 1, 0, 1), M2(3, 1, 0, 1, 1), M2(3, 2, 0, 0, 1)}) == "GL(2,3)");
  CHECK(iso_label(c2_sl23()) == "C2xSL(2,3)");
  // D6 has order 12 and is not reported as C2xS3.
  CHECK(lab({M2(7, 3, 0, 0, 5), M2(7, 0, 1, 1, 0)}) == "D6");
  CHECK(lab({M2(7, 2, 0, 0, 4), M2(7, 0, 1, 1, 0)}) == "S3");
  CHECK(lab({M2(7, 2, 0, 0, 4), M2(7, 0, 1, 1, 0), M2(7, 6, 0, 0, 6), MatFp::from_rows(7, {{6, 0}, {0, 6}})}) == "D6");
  auto s3xc2sq = FiniteGroup::from_matrices({MatFp::from_rows(7, {{2, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                                            MatFp::from_rows(7, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
                                            MatFp::from_rows(7, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 6, 0}, {0, 0, 0, 1}}),
                                            MatFp::from_rows(7, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 6}})});
  CHECK(iso_label(s3xc2sq) == "C2^2xS3");
  CHECK(abelian_label({2, 2, 4}) == "C2^2xC4");
}

TEST_CASE("lattice: reduction and integral conjugation") {
  auto Q = FieldDescriptor::rationals();
  RealizedSubgroup R;
  R.field = Q;
  R.n = 2;
  // diag(1/2,1) * swap * diag(2,1)
  R.generators = {KMatrix::from_rows({{0, QuadElem(frac(1, 2))}, {2, 0}})};
  R.order = 2;
  auto I = integral_conjugate(R);
  CHECK(I.generators[0].is_integral(Q));
  CHECK(I.generators[0].trace() == QuadElem(0));
  CHECK(I.generators[0] * I.generators[0] == KMatrix::identity(2));
  // Non-integral at 3, yet reduction through the stable lattice stays injective.
  RealizedSubgroup R3 = R;
  R3.generators = {KMatrix::from_rows({{0, QuadElem(frac(1, 3))}, {3, 0}})};
  CHECK(reduction_check(R3, ReductionPrime{3, 3, 1, 1, -1}));

  RealizedSubgroup Pm = R;
  Pm.generators = {KMatrix::identity(2).scaled(QuadElem(-1))};
  CHECK(reduction_check(Pm, ReductionPrime{3, 3, 1, 1, -1}));
  // -I is trivial mod 2.
  CHECK(!reduction_check(Pm, ReductionPrime{2, 2, 1, 1, -1}));
  RealizedSubgroup triv = R;
  triv.generators = {KMatrix::identity(3)};
  CHECK(reduction_check(triv, ReductionPrime{3, 3, 1, 1, -1}));

  auto K19 = FieldDescriptor::imag_quadratic(19);
  RealizedSubgroup R19 = R;
  R19.field = K19;
  CHECK_THROWS_AS(integral_conjugate(R19), UnsupportedField);

  // Q(i): conjugate the 2x2 Q8 generators by diag(1+i, 1).
  auto Ki = FieldDescriptor::imag_quadratic(1);
  QuadElem i = QuadElem::sqrt_elem(Ki), one(1);
  KMatrix Dm = KMatrix::from_rows({{one + i, 0}, {0, 1}});
  KMatrix a = KMatrix::from_rows({{i, 0}, {0, -i}}), b = KMatrix::from_rows({{0, -1}, {1, 0}});
  RealizedSubgroup Ri;
  Ri.field = Ki;
  Ri.n = 2;
  Ri.generators = {Dm * a * Dm.inverse(), Dm * b * Dm.inverse()};
  CHECK(!Ri.generators[1].is_integral(Ki));
  auto Ii = integral_conjugate(Ri);
  for (const auto& g : Ii.generators) CHECK(g.is_integral(Ki));
  CHECK(kgroup_order(Ii.generators, 100) == 8);
  CHECK(Ii.generators[0].trace() == Ri.generators[0].trace());
}

TEST_CASE("the order-48 group over Q(sqrt(-19)) reduces injectively mod the prime above 5") {
  auto K = FieldDescriptor::imag_quadratic(19);
  QuadElem s = QuadElem::sqrt_elem(K), h(frac(1, 2));
  QuadElem p = (s + 3) * h, m = (s - 3) * h;
  QuadElem hn3 = (-s + 3) * h, hn1 = (-s - 1) * h;
  // The displayed second generator has a non-unit determinant and is left out; the rest
  // already generate the order-48 group.
  std::vector<KMatrix> gens{KMatrix::from_rows({{1, 0, 0}, {0, -2, m}, {0, p, 3}}),
                            KMatrix::from_rows({{-1, 0, 0}, {0, hn3, hn1}, {0, -3, m}}),
                            KMatrix::from_rows({{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}),
                            KMatrix::identity(3).scaled(QuadElem(-1))};
  RealizedSubgroup R;
  R.field = K;
  R.n = 3;
  R.generators = gens;
  R.order = kgroup_order(R.generators, 1000);
  CHECK(R.order == 48);
  auto rp = reduction_prime(K, schur_number(3, K));
  CHECK(rp.p == 5);
  CHECK(reduction_check(R, rp));
  auto red = reduce_generators(R.generators, K, rp);
  auto Gp = FiniteGroup::from_matrices(red);
  CHECK(Gp.order() == R.order);
  CHECK(iso_label(Gp) == "C2xSL(2,3)");
}
