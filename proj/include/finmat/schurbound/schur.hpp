#pragma once

#include "finmat/numbers/field.hpp"

#include <vector>

namespace finmat {

struct PrimeLocalData {
  long l = 0;
  long m = 0;
  long t = 0;
  long exponent = 0;
};

struct SchurBoundBreakdown {
  long n = 0;
  FieldDescriptor K;
  std::vector<PrimeLocalData> locals;
  Integer value;
};

struct ReductionPrime {
  long p = 0;
  long residue_size = 0;  // q
  long ramification = 1;  // e
  long residue_degree = 1;  // f
  long sqrt_residue = -1;  // image of the stored square root of K in F_p (split primes)
};

// [K * Q(zeta_N) : Q] for the fields handled here.
long compositum_degree(const FieldDescriptor& K, long N);

long m_of(const FieldDescriptor& K, long l);
long m2_of(const FieldDescriptor& K);
long t_of(const FieldDescriptor& K, long l);
SchurBoundBreakdown schur_number(long n, const FieldDescriptor& K);
Integer minkowski_bound(long n);
ReductionPrime reduction_prime(const FieldDescriptor& K, const SchurBoundBreakdown& bound);

}  // namespace finmat
