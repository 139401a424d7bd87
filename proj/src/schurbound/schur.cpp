#include "finmat/schurbound/schur.hpp"

#include "finmat/errors.hpp"

namespace finmat {

namespace {

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long floor_sum(long n, long base, long t) {
  long s = 0;
  for (long pw = base; n / (pw * t) > 0; pw *= base) s += n / (pw * t);
  return s;
}

}  // namespace

long compositum_degree(const FieldDescriptor& K, long N) {
  long inter = (!K.is_rationals() && N % K.conductor == 0) ? 2 : 1;
  return K.degree() * euler_phi(N) / inter;
}

long m_of(const FieldDescriptor& K, long l) {
  if (l == 2 || !is_prime(l)) throw Error("m_of expects an odd prime");
  long base = compositum_degree(K, l);
  long d = 1;
  while (compositum_degree(K, ipow(l, d + 1)) == base) ++d;
  return d;
}

long m2_of(const FieldDescriptor& K) {
  long base = compositum_degree(K, 4);
  long m0 = 2;
  while (compositum_degree(K, ipow(2, m0 + 1)) == base) ++m0;
  if (m0 >= 3) return m0;
  return K.contains_i() ? 2 : 1;
}

long t_of(const FieldDescriptor& K, long l) {
  if (l == 2) return m2_of(K) >= 3 ? compositum_degree(K, 4) / K.degree() : 1;
  return compositum_degree(K, l) / K.degree();
}

SchurBoundBreakdown schur_number(long n, const FieldDescriptor& K) {
  if (n < 1) throw Error("schur_number: n must be positive");
  SchurBoundBreakdown out;
  out.n = n;
  out.K = K;
  out.value = 1;
  long cap = 2 * n * K.degree() + 1;
  for (long l = 2; l <= cap; ++l) {
    if (!is_prime(l)) continue;
    PrimeLocalData loc;
    loc.l = l;
    loc.m = (l == 2) ? m2_of(K) : m_of(K, l);
    loc.t = t_of(K, l);
    long q = n / loc.t;
    if (l == 2)
      loc.exponent = n - q + loc.m * q + floor_sum(n, 2, loc.t);
    else
      loc.exponent = loc.m * q + floor_sum(n, l, loc.t);
    if (loc.exponent == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(l), static_cast<unsigned long>(loc.exponent));
    out.value *= pw;
    out.locals.push_back(loc);
  }
  return out;
}

Integer minkowski_bound(long n) {
  if (n < 1) throw Error("minkowski_bound: n must be positive");
  Integer v = 1;
  for (long p = 2; p <= n + 1; ++p) {
    if (!is_prime(p)) continue;
    long e = 0;
    for (long pw = 1; n / (pw * (p - 1)) > 0; pw *= p) e += n / (pw * (p - 1));
    for (long i = 0; i < e; ++i) v *= p;
  }
  return v;
}

ReductionPrime reduction_prime(const FieldDescriptor& K, const SchurBoundBreakdown& /*bound*/) {
  ReductionPrime rp;
  if (K.is_rationals()) {
    rp.p = 3;
    rp.residue_size = 3;
    return rp;
  }
  // Split primes give F_p residue fields; unramified keeps e = 1 < p - 1 for p >= 3.
  long inert = 0;
  for (long p = 3; p < 100000; p += 2) {
    if (!is_prime(p) || K.discriminant % p == 0) continue;
    int s = kronecker(K.discriminant, p);
    if (s == 1) {
      rp.p = p;
      rp.residue_size = p;
      rp.sqrt_residue = sqrt_mod(K.s2(), p);
      return rp;
    }
    if (inert == 0) inert = p;
  }
  rp.p = inert;
  rp.residue_size = inert * inert;
  rp.residue_degree = 2;
  return rp;
}

}  // namespace finmat
