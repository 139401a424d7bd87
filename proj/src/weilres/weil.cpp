#include "finmat/weilres/weil.hpp"

#include "finmat/errors.hpp"
#include "finmat/numbers/rational.hpp"

#include <numeric>

namespace finmat {

namespace {

bool in_L(const CycNum& a, const ExtensionBasis& B) {
  for (long k : B.fixing)
    if (a.galois(k) != a) return false;
  return true;
}

void finish(ExtensionBasis& B) {
  const int m = static_cast<int>(B.basis.size());
  B.m = m;
  KMatrix G(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) G.at(i, j) = QuadElem::from_cyc(trace_LK(B.basis[i] * B.basis[j], B), B.K);
  B.gram_inverse = G.inverse();
}

}  // namespace

CycNum trace_LK(const CycNum& a, const ExtensionBasis& B) {
  // Tr_{Q(zeta_N)/K} = [Q(zeta_N):L] Tr_{L/K}, and [Q(zeta_N):L] = |fixing|.
  return rel_trace(a, B.conductor, B.K).scaled(frac(1, static_cast<long>(B.fixing.size())));
}

std::vector<QuadElem> coordinates(const CycNum& a, const ExtensionBasis& B) {
  std::vector<QuadElem> t(B.m);
  for (int i = 0; i < B.m; ++i) t[i] = QuadElem::from_cyc(trace_LK(B.basis[i] * a, B), B.K);
  std::vector<QuadElem> c(B.m);
  for (int i = 0; i < B.m; ++i)
    for (int j = 0; j < B.m; ++j) c[i] += B.gram_inverse.at(i, j) * t[j];
  return c;
}

ExtensionBasis make_basis(long N, std::vector<long> fixing, const FieldDescriptor& K, std::vector<CycNum> basis) {
  ExtensionBasis B;
  B.conductor = N;
  B.fixing = std::move(fixing);
  B.K = K;
  B.basis = std::move(basis);
  if (N % K.conductor != 0) throw Error("K is not contained in Q(zeta_N)");
  for (const auto& b : B.basis)
    if (!in_L(b, B)) throw Error("basis element outside L");
  long degL = euler_phi(N) / static_cast<long>(B.fixing.size());
  if (degL % K.degree() != 0 || static_cast<long>(B.basis.size()) != degL / K.degree())
    throw Error("basis has the wrong length for [L:K]");
  try {
    finish(B);
  } catch (const DivisionByZero&) {
    throw Error("basis is not linearly independent over K");
  }
  return B;
}

ExtensionBasis cyclotomic_basis(long N, const FieldDescriptor& K) {
  if (N % K.conductor != 0) throw Error("K is not contained in Q(zeta_N)");
  const long phi = euler_phi(N);
  const long m = phi / K.degree();
  const auto Q = FieldDescriptor::rationals();
  // x -> (Tr(x zeta^j))_j is injective; K-independence of b_i is Q-independence of the
  // images of b_i and sqrt(K) b_i.
  auto image = [&](const CycNum& x) {
    std::vector<QuadElem> v;
    for (long j = 0; j < phi; ++j) v.emplace_back(rel_trace(x.times_zeta(static_cast<int>(N), j), N, Q).rational_value());
    return v;
  };
  std::vector<CycNum> basis;
  std::vector<std::vector<QuadElem>> span;
  for (long k = 0; static_cast<long>(basis.size()) < m && k < N; ++k) {
    CycNum z = CycNum::zeta(static_cast<int>(N), k);
    auto trial = span;
    trial.push_back(image(z));
    if (!K.is_rationals()) trial.push_back(image(z * K.sqrt_value));
    auto reduced = trial;
    if (static_cast<std::size_t>(rref(reduced).size()) == trial.size()) {
      span = std::move(trial);
      basis.push_back(z);
    }
  }
  return make_basis(N, {1}, K, std::move(basis));
}

ExtensionBasis quadratic_basis(const FieldDescriptor& L) {
  if (L.is_rationals()) return make_basis(1, {1}, L, {CycNum(1)});
  long N = L.conductor;
  std::vector<long> fixing;
  for (long k = 1; k < N; ++k)
    if (std::gcd(k, N) == 1 && L.galois_sign(k) == 1) fixing.push_back(k);
  return make_basis(N, std::move(fixing), FieldDescriptor::rationals(), {CycNum(1), L.ring_generator});
}

KMatrix res_scalar(const CycNum& a, const ExtensionBasis& B) {
  if (!in_L(a, B)) throw Error("element outside L");
  KMatrix M(B.m, B.m);
  for (int j = 0; j < B.m; ++j) {
    auto c = coordinates(a * B.basis[j], B);
    for (int i = 0; i < B.m; ++i) M.at(i, j) = c[i];
  }
  return M;
}

KMatrix res_matrix(const CycMatrix& A, const ExtensionBasis& B) {
  const int n = static_cast<int>(A.size()), m = B.m;
  KMatrix R(n * m, n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (A[i][j].is_zero()) continue;
      KMatrix blk = res_scalar(A[i][j], B);
      for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) R.at(i * m + r, j * m + s) = blk.at(r, s);
    }
  return R;
}

bool res_trace_check(const CycMatrix& A, const ExtensionBasis& B) {
  CycNum t;
  for (std::size_t i = 0; i < A.size(); ++i) t += A[i][i];
  return res_matrix(A, B).trace().to_cyc(B.K) == trace_LK(t, B);
}

std::vector<CycNum> res_character(const std::vector<CycNum>& chi, const ExtensionBasis& B) {
  std::vector<CycNum> out;
  for (const auto& v : chi) out.push_back(trace_LK(v, B));
  return out;
}

CycMatrix cyc_mul(const CycMatrix& a, const CycMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  CycMatrix r(n, std::vector<CycNum>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

}  // namespace finmat
