#include "doctest.h"
#include "finmat/schurbound/schur.hpp"

#include <numeric>
#include <set>

using namespace finmat;

namespace {

// Oracle: zeta_M lies in K(zeta_base) iff it is fixed by every sigma_k fixing K and zeta_base.
bool root_in_extension(const FieldDescriptor& K, long M, long base) {
  long L = std::lcm(M, K.conductor);
  CycNum z = CycNum::zeta(static_cast<int>(M));
  for (long k = 1; k < L; ++k) {
    if (std::gcd(k, L) != 1 || K.galois_sign(k) != 1 || k % base != 1 % base) continue;
    if (z.galois(k) != z) return false;
  }
  return true;
}

long oracle_m(const FieldDescriptor& K, long l) {
  if (l == 2) {
    long m0 = 2;
    while (root_in_extension(K, 1L << (m0 + 1), 4)) ++m0;
    if (m0 >= 3) return m0;
    return root_in_extension(K, 4, 1) ? 2 : 1;
  }
  long d = 1, M = l * l;
  while (root_in_extension(K, M, l)) {
    ++d;
    M *= l;
  }
  return d;
}

long oracle_t(const FieldDescriptor& K, long l) {
  long base = l;
  if (l == 2) {
    if (oracle_m(K, 2) < 3) return 1;
    base = 4;
  }
  std::set<long> img;
  long L = std::lcm(base, K.conductor);
  for (long k = 1; k < L; ++k)
    if (std::gcd(k, L) == 1 && K.galois_sign(k) == 1) img.insert(k % base);
  return static_cast<long>(img.size());
}

long oracle_exponent(long n, long l, long m, long t) {
  long e = (l == 2) ? n - n / t + m * (n / t) : m * (n / t);
  long pw = l;
  while (pw * t <= n) {
    e += n / (pw * t);
    pw *= l;
  }
  return e;
}

std::vector<FieldDescriptor> all_fields() {
  std::vector<FieldDescriptor> out{FieldDescriptor::rationals()};
  for (long d : {1L, 2L, 3L, 7L, 11L, 19L, 43L, 67L, 163L}) out.push_back(FieldDescriptor::imag_quadratic(d));
  return out;
}

}  // namespace

TEST_CASE("m, t local invariants") {
  auto Q = FieldDescriptor::rationals();
  CHECK(m_of(Q, 3) == 1);
  CHECK(m_of(FieldDescriptor::imag_quadratic(3), 3) == 1);
  CHECK(m_of(FieldDescriptor::imag_quadratic(7), 7) == 1);
  CHECK(m2_of(FieldDescriptor::real_quadratic(2)) == 3);
  CHECK(m2_of(FieldDescriptor::imag_quadratic(1)) == 2);
  CHECK(m2_of(FieldDescriptor::imag_quadratic(19)) == 1);
  CHECK(m2_of(FieldDescriptor::imag_quadratic(2)) == 3);
  CHECK(t_of(Q, 3) == 2);
  CHECK(t_of(FieldDescriptor::imag_quadratic(7), 7) == 3);
  CHECK(t_of(FieldDescriptor::imag_quadratic(1), 2) == 1);
  CHECK_THROWS(m_of(Q, 2));
}

TEST_CASE("local data agrees with a Galois oracle") {
  for (const auto& K : all_fields()) {
    for (long l : {2L, 3L, 5L, 7L, 11L, 13L}) {
      long m = (l == 2) ? m2_of(K) : m_of(K, l);
      CHECK(m == oracle_m(K, l));
      CHECK(t_of(K, l) == oracle_t(K, l));
    }
    for (long n = 1; n <= 5; ++n) {
      auto B = schur_number(n, K);
      Integer v = 1;
      for (const auto& loc : B.locals) {
        CHECK(loc.exponent == oracle_exponent(n, loc.l, oracle_m(K, loc.l), oracle_t(K, loc.l)));
        for (long i = 0; i < loc.exponent; ++i) v *= loc.l;
      }
      CHECK(v == B.value);
    }
  }
}

TEST_CASE("Schur numbers") {
  auto Q = FieldDescriptor::rationals();
  CHECK(schur_number(2, Q).value == 24);
  CHECK(schur_number(3, FieldDescriptor::imag_quadratic(1)).value == 384);
  CHECK(schur_number(4, Q).value == 5760);
  CHECK(schur_number(3, FieldDescriptor::imag_quadratic(7)).value == 336);
  CHECK(schur_number(3, FieldDescriptor::imag_quadratic(3)).value == 1296);
  CHECK(schur_number(3, FieldDescriptor::imag_quadratic(2)).value == 96);
  for (long d : {11L, 19L, 43L, 67L, 163L}) CHECK(schur_number(3, FieldDescriptor::imag_quadratic(d)).value == 48);
}

TEST_CASE("Minkowski bound") {
  CHECK(minkowski_bound(2) == 24);
  CHECK(minkowski_bound(3) == 48);
  CHECK(minkowski_bound(5) == 11520);
  for (long n = 1; n <= 8; ++n) CHECK(minkowski_bound(n) == schur_number(n, FieldDescriptor::rationals()).value);
}

TEST_CASE("reduction primes") {
  struct Row {
    long d;
    long p;
  };
  for (auto [d, p] : {Row{0, 3}, Row{1, 5}, Row{2, 3}, Row{3, 7}, Row{7, 11}, Row{11, 3}, Row{19, 5}, Row{43, 11},
                      Row{67, 17}, Row{163, 41}}) {
    auto K = d == 0 ? FieldDescriptor::rationals() : FieldDescriptor::imag_quadratic(d);
    auto rp = reduction_prime(K, schur_number(3, K));
    CHECK(rp.p == p);
    CHECK(rp.residue_size == p);
    CHECK(rp.ramification < rp.p - 1);
    CHECK(rp.residue_size >= 3);
    if (d != 0) CHECK((rp.sqrt_residue * rp.sqrt_residue + d) % p == 0);
  }
}
