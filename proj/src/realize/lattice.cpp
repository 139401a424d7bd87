#include "finmat/realize/lattice.hpp"

#include "finmat/errors.hpp"

#include <utility>

namespace finmat {

namespace {

using IVec = std::vector<Integer>;

QuadElem omega(const FieldDescriptor& K) {
  if (K.is_rationals()) return QuadElem(1);
  return QuadElem::from_cyc(K.ring_generator, K);
}

// Realification: v in K^n becomes its ring coordinates in Q^{deg n}.
std::vector<Rational> realify(const std::vector<QuadElem>& v, const FieldDescriptor& K) {
  int f = K.degree();
  std::vector<Rational> out(v.size() * f);
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto [x, y] = v[i].ring_coords(K);
    out[i * f] = x;
    if (f == 2) out[i * f + 1] = y;
  }
  return out;
}

KMatrix realify_matrix(const KMatrix& g, const FieldDescriptor& K) {
  int n = g.rows(), f = K.degree();
  QuadElem w = omega(K);
  KMatrix R(n * f, n * f);
  for (int j = 0; j < n; ++j)
    for (int t = 0; t < f; ++t) {
      std::vector<QuadElem> col(n);
      for (int i = 0; i < n; ++i) col[i] = t == 0 ? g.at(i, j) : g.at(i, j) * w;
      auto c = realify(col, K);
      for (int i = 0; i < n * f; ++i) R.at(i, j * f + t) = QuadElem(c[i]);
    }
  return R;
}

// Incremental triangular Z-basis; basis[i] has its leading entry at position i.
class ZLattice {
 public:
  explicit ZLattice(int dim) : dim_(dim), basis_(dim) {}
  void add(IVec v) {
    for (int i = 0; i < dim_; ++i) {
      if (sgn(v[i]) == 0) continue;
      auto& b = basis_[i];
      if (b.empty()) {
        if (sgn(v[i]) < 0)
          for (auto& x : v) x = -x;
        b = std::move(v);
        return;
      }
      // Unimodular 2x2 combination putting gcd(b_i, v_i) in b and zero in v.
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t(), v[i].get_mpz_t());
      Integer bi = b[i] / g, vi = v[i] / g;
      IVec nb(dim_), nv(dim_);
      for (int k = 0; k < dim_; ++k) {
        nb[k] = s * b[k] + t * v[k];
        nv[k] = bi * v[k] - vi * b[k];
      }
      b = std::move(nb);
      v = std::move(nv);
      reduce_below(i);
    }
  }
  bool full() const {
    for (const auto& b : basis_)
      if (b.empty()) return false;
    return true;
  }
  const std::vector<IVec>& basis() const { return basis_; }

 private:
  // Keep entries after each pivot reduced modulo the later pivots.
  void reduce_below(int i) {
    auto& b = basis_[i];
    for (int k = i + 1; k < dim_; ++k) {
      if (basis_[k].empty() || sgn(basis_[k][k]) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), b[k].get_mpz_t(), basis_[k][k].get_mpz_t());
      if (sgn(q) == 0) continue;
      for (int j = k; j < dim_; ++j) b[j] -= q * basis_[k][j];
    }
  }
  int dim_;
  std::vector<IVec> basis_;
};

struct StableLattice {
  int n = 0, f = 1;
  KMatrix basis;                 // columns in realified coordinates
  KMatrix basis_inv;
  std::vector<KMatrix> action;   // B^-1 R(g) B for the requested matrices
  KMatrix omega_action;
};

StableLattice stable_lattice(const std::vector<KMatrix>& elems, const std::vector<KMatrix>& act_on,
                             const FieldDescriptor& K) {
  StableLattice L;
  L.n = elems.front().rows();
  L.f = K.degree();
  int N = L.n * L.f;
  QuadElem w = omega(K);
  std::vector<std::vector<Rational>> gens;
  for (const auto& g : elems)
    for (int j = 0; j < L.n; ++j)
      for (int t = 0; t < L.f; ++t) {
        std::vector<QuadElem> col(L.n);
        for (int i = 0; i < L.n; ++i) col[i] = t == 0 ? g.at(i, j) : g.at(i, j) * w;
        gens.push_back(realify(col, K));
      }
  Integer den = 1;
  for (const auto& v : gens)
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  ZLattice Z(N);
  for (const auto& v : gens) {
    IVec iv(N);
    for (int i = 0; i < N; ++i) {
      Rational s = v[i] * den;
      iv[i] = s.get_num();
    }
    Z.add(std::move(iv));
  }
  if (!Z.full()) throw InvariantViolation("stable lattice is not of full rank");
  L.basis = KMatrix(N, N);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) L.basis.at(i, j) = QuadElem(Rational(Z.basis()[j][i]));
  L.basis_inv = L.basis.inverse();
  for (const auto& g : act_on) L.action.push_back(L.basis_inv * realify_matrix(g, K) * L.basis);
  KMatrix Wr(N, N);
  if (L.f == 2) {
    Wr = realify_matrix(KMatrix::identity(L.n).scaled(w), K);
    L.omega_action = L.basis_inv * Wr * L.basis;
  }
  return L;
}

long mod_int(const QuadElem& x, long p) {
  if (!x.is_rational() || x.a().get_den() != 1) throw InvariantViolation("lattice action is not integral");
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.a().get_num_mpz_t(), static_cast<unsigned long>(p));
  return r.get_si();
}

using FpRows = std::vector<std::vector<long>>;

long inv_mod(long a, long p) {
  long r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// Reduced row echelon form over F_p; returns pivot columns.
std::vector<int> fp_rref(FpRows& rows, long p) {
  std::vector<int> piv;
  std::size_t r = 0;
  int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t k = r;
    while (k < rows.size() && rows[k][c] == 0) ++k;
    if (k == rows.size()) continue;
    std::swap(rows[r], rows[k]);
    long iv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = x * iv % p;
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r || rows[o][c] == 0) continue;
      long m = rows[o][c];
      for (int j = 0; j < cols; ++j) rows[o][j] = ((rows[o][j] - m * rows[r][j]) % p + p) % p;
    }
    piv.push_back(c);
    ++r;
  }
  rows.resize(r);
  return piv;
}

// The subspace pM + (omega - r)M of M/pM, as reduced rows, plus its pivots.
struct PrimeSubspace {
  FpRows rows;
  std::vector<int> pivots;
};

PrimeSubspace prime_subspace(const StableLattice& L, const FieldDescriptor& K, const ReductionPrime& rp) {
  PrimeSubspace S;
  int N = L.n * L.f;
  if (L.f == 1 || rp.residue_degree != 1) return S;
  long r = omega(K).reduce_mod(rp.p, rp.sqrt_residue);
  for (int j = 0; j < N; ++j) {
    std::vector<long> v(N);
    for (int i = 0; i < N; ++i) {
      long x = mod_int(L.omega_action.at(i, j), rp.p);
      if (i == j) x = ((x - r) % rp.p + rp.p) % rp.p;
      v[i] = x;
    }
    S.rows.push_back(std::move(v));
  }
  S.pivots = fp_rref(S.rows, rp.p);
  if (static_cast<int>(S.pivots.size()) != N - L.n) throw InvariantViolation("residue quotient has wrong dimension");
  return S;
}

std::vector<long> reduce_by(std::vector<long> v, const PrimeSubspace& S, long p) {
  for (std::size_t k = 0; k < S.rows.size(); ++k) {
    long m = v[S.pivots[k]];
    if (m == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = ((v[j] - m * S.rows[k][j]) % p + p) % p;
  }
  return v;
}

std::vector<int> complement_positions(const PrimeSubspace& S, int N) {
  std::vector<char> is_piv(N, 0);
  for (int c : S.pivots) is_piv[c] = 1;
  std::vector<int> out;
  for (int i = 0; i < N; ++i)
    if (!is_piv[i]) out.push_back(i);
  return out;
}

QuadElem nearest_integer_quotient(const QuadElem& a, const QuadElem& b, const FieldDescriptor& K) {
  QuadElem x = a / b;
  auto [u, v] = x.ring_coords(K);
  auto fl = [](const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
  };
  Integer u0 = fl(u), v0 = fl(v);
  QuadElem w = omega(K);
  QuadElem best;
  Rational best_norm = -1;
  int vr = K.is_rationals() ? 0 : 2;
  for (int du = -1; du <= 2; ++du)
    for (int dv = -vr / 2; dv <= vr; ++dv) {
      QuadElem q = QuadElem(Rational(u0 + du)) + (K.is_rationals() ? QuadElem(0) : QuadElem(Rational(v0 + dv)) * w);
      QuadElem rem = a - q * b;
      Rational nr = K.is_rationals() ? rem.a() * rem.a() : rem.norm();
      if (best_norm < 0 || nr < best_norm) {
        best_norm = nr;
        best = q;
      }
    }
  Rational nb = K.is_rationals() ? b.a() * b.a() : b.norm();
  if (!(best_norm < nb)) throw InvariantViolation("Euclidean step failed");
  return best;
}

}  // namespace

bool reduction_check(const RealizedSubgroup& R, const ReductionPrime& rp) {
  const auto& K = R.field;
  auto elems = kgroup_elements(R.generators, 200000);
  auto L = stable_lattice(elems, elems, K);
  auto S = prime_subspace(L, K, rp);
  int N = L.n * L.f;
  for (std::size_t e = 1; e < elems.size(); ++e) {
    // g acts trivially on M/PM iff every column of g - 1 lies in the subspace.
    const auto& A = L.action[e];
    for (int j = 0; j < N; ++j) {
      std::vector<long> v(N);
      for (int i = 0; i < N; ++i) v[i] = ((mod_int(A.at(i, j), rp.p) - (i == j)) % rp.p + rp.p) % rp.p;
      v = reduce_by(std::move(v), S, rp.p);
      bool zero = true;
      for (long x : v) zero = zero && x == 0;
      if (!zero) goto nontrivial;
    }
    return false;
  nontrivial:;
  }
  return true;
}

std::vector<MatFp> reduce_generators(const std::vector<KMatrix>& gens, const FieldDescriptor& K,
                                     const ReductionPrime& rp, long cap) {
  auto elems = kgroup_elements(gens, cap);
  auto L = stable_lattice(elems, gens, K);
  auto S = prime_subspace(L, K, rp);
  int N = L.n * L.f;
  auto comp = complement_positions(S, N);
  int q = static_cast<int>(comp.size());
  if (q > kMaxDim) throw UnsupportedBound("reduced dimension exceeds the F_p matrix limit");
  std::vector<MatFp> out;
  for (const auto& A : L.action) {
    std::vector<std::vector<long>> rows(q, std::vector<long>(q));
    for (int j = 0; j < q; ++j) {
      std::vector<long> v(N);
      for (int i = 0; i < N; ++i) v[i] = mod_int(A.at(i, comp[j]), rp.p);
      v = reduce_by(std::move(v), S, rp.p);
      for (int i = 0; i < q; ++i) rows[i][j] = v[comp[i]];
    }
    out.push_back(MatFp::from_rows(static_cast<int>(rp.p), rows));
  }
  return out;
}

KMatrix ok_span_basis(const std::vector<std::vector<QuadElem>>& cols, const FieldDescriptor& K) {
  if (!K.is_euclidean()) throw UnsupportedField("integral conjugation needs a Euclidean ring of integers");
  int n = static_cast<int>(cols.front().size());
  Integer den = 1;
  for (const auto& c : cols)
    for (const auto& x : c) {
      auto [u, v] = x.ring_coords(K);
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), u.get_den_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    }
  QuadElem D{Rational(den)};
  std::vector<std::vector<QuadElem>> basis(n);
  for (auto v : cols) {
    for (auto& x : v) x *= D;
    for (int i = 0; i < n; ++i) {
      if (v[i].is_zero()) continue;
      auto& b = basis[i];
      if (b.empty()) {
        b = v;
        break;
      }
      // Euclid on the pivot entries with unimodular column operations.
      while (!v[i].is_zero()) {
        QuadElem q = nearest_integer_quotient(b[i], v[i], K);
        for (int k = 0; k < n; ++k) b[k] -= q * v[k];
        std::swap(b, v);
      }
    }
  }
  KMatrix B(n, n);
  for (int j = 0; j < n; ++j) {
    if (basis[j].empty()) throw InvariantViolation("O_K span is not of full rank");
    for (int i = 0; i < n; ++i) B.at(i, j) = basis[j][i];
  }
  return B;
}

RealizedSubgroup integral_conjugate(const RealizedSubgroup& R) {
  const auto& K = R.field;
  if (!K.is_euclidean()) throw UnsupportedField("integral conjugation is implemented for Euclidean fields only");
  auto elems = kgroup_elements(R.generators, 200000);
  int n = R.generators.front().rows();
  std::vector<std::vector<QuadElem>> cols;
  for (const auto& g : elems)
    for (int j = 0; j < n; ++j) {
      std::vector<QuadElem> c(n);
      for (int i = 0; i < n; ++i) c[i] = g.at(i, j);
      cols.push_back(std::move(c));
    }
  KMatrix B = ok_span_basis(cols, K);
  KMatrix Bi = B.inverse();
  RealizedSubgroup out = R;
  out.generators.clear();
  for (const auto& g : R.generators) {
    KMatrix h = Bi * g * B;
    if (!h.is_integral(K)) throw InvariantViolation("conjugated generator is not integral");
    out.generators.push_back(std::move(h));
  }
  return out;
}

}  // namespace finmat
