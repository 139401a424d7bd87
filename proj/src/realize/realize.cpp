#include "finmat/realize/realize.hpp"

#include "finmat/errors.hpp"
#include "finmat/numbers/rational.hpp"

#include <algorithm>
#include <array>

namespace finmat {

namespace {

QuadElem in_K(const CycNum& z, const FieldDescriptor& K) { return QuadElem::from_cyc(z, K); }

RegVec act(const FiniteGroup& G, int x, const RegVec& v) {
  RegVec w(v.size());
  for (int y = 0; y < G.order(); ++y)
    if (!v[y].is_zero()) w[G.mul(x, y)] = v[y];
  return w;
}

// Incremental fully reduced echelon basis.
struct Echelon {
  std::vector<RegVec> rows;
  std::vector<int> piv;

  // Reduces v against the basis; returns true and inserts when independent.
  bool add(RegVec v, RegVec* inserted = nullptr) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (v[piv[i]].is_zero()) continue;
      QuadElem f = v[piv[i]];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!rows[i][k].is_zero()) v[k] -= f * rows[i][k];
    }
    int p = -1;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero()) {
        p = static_cast<int>(k);
        break;
      }
    if (p < 0) return false;
    QuadElem inv = v[p].inverse();
    for (auto& x : v) x *= inv;
    for (auto& r : rows) {
      if (r[p].is_zero()) continue;
      QuadElem f = r[p];
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) r[k] -= f * v[k];
    }
    if (inserted) *inserted = v;
    rows.push_back(std::move(v));
    piv.push_back(p);
    return true;
  }

  std::vector<QuadElem> coords(const RegVec& w) const {
    std::vector<QuadElem> c(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) c[i] = w[piv[i]];
    return c;
  }
};

GModuleK module_from(const FiniteGroup& G, const CharacterTable& T, const Echelon& E, const FieldDescriptor& K) {
  GModuleK M;
  M.dim = static_cast<int>(E.rows.size());
  M.basis = E.rows;
  M.images.reserve(G.order());
  for (int x = 0; x < G.order(); ++x) {
    KMatrix r(M.dim, M.dim);
    for (int j = 0; j < M.dim; ++j) {
      auto c = E.coords(act(G, x, E.rows[j]));
      for (int i = 0; i < M.dim; ++i) r.at(i, j) = c[i];
    }
    M.images.push_back(std::move(r));
  }
  M.afforded = character_of(T, M.images, K);
  return M;
}

GModuleK spin_with_table(const FiniteGroup& G, const CharacterTable& T, const std::vector<RegVec>& seeds,
                         const FieldDescriptor& K) {
  Echelon E;
  std::vector<RegVec> todo;
  for (const auto& s : seeds) {
    RegVec ins;
    if (E.add(s, &ins)) todo.push_back(ins);
  }
  if (E.rows.empty()) throw DegenerateComponent("spin-up from zero vectors");
  for (std::size_t i = 0; i < todo.size(); ++i)
    for (int g : G.generators()) {
      RegVec ins;
      if (E.add(act(G, g, todo[i]), &ins)) todo.push_back(ins);
    }
  return module_from(G, T, E, K);
}

std::optional<QuadElem> rational_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num_mpz_t()) || !mpz_perfect_square_p(r.get_den_mpz_t())) return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  Rational q(n, d);
  q.canonicalize();
  return QuadElem(q);
}

std::optional<QuadElem> sqrt_in_K(const QuadElem& z, const FieldDescriptor& K) {
  if (z.is_rational()) {
    if (auto r = rational_sqrt(z.a())) return r;
    if (K.is_rationals()) return std::nullopt;
    if (auto t = rational_sqrt(z.a() / K.s2())) return QuadElem(0, t->a(), K.s2());
    return std::nullopt;
  }
  auto nu = rational_sqrt(z.norm());
  if (!nu) return std::nullopt;
  for (int sgnv : {1, -1}) {
    auto p = rational_sqrt((z.a() + sgnv * nu->a()) / 2);
    if (!p || sgn(p->a()) == 0) continue;
    QuadElem r(p->a(), z.b() / (2 * p->a()), K.s2());
    if (r * r == z) return r;
  }
  return std::nullopt;
}

// Rational u, v, w, t (t != 0) with a u^2 + b v^2 - ab w^2 = s2 t^2: the pure quaternion
// x = u i + v j + w ij of (a,b)_Q then satisfies x^2 = s2 t^2, so K embeds into the algebra.
std::optional<std::array<Rational, 4>> quadratic_embedding(const Rational& a, const Rational& b, long s2) {
  constexpr int kCoef = 60, kDen = 12;
  Rational ab = a * b;
  for (int t = 1; t <= kDen; ++t)
    for (int u = 0; u <= kCoef; ++u)
      for (int v = -kCoef; v <= kCoef; ++v) {
        Rational w2 = (a * u * u + b * v * v - Rational(s2) * t * t) / ab;
        if (sgn(w2) < 0) continue;
        if (auto w = rational_sqrt(w2)) return std::array<Rational, 4>{Rational(u), Rational(v), w->a(), Rational(t)};
      }
  return std::nullopt;
}

// Ring elements x + y*omega with |x|, |y| <= R.
std::vector<QuadElem> small_integers(const FieldDescriptor& K, int R) {
  std::vector<QuadElem> out;
  QuadElem w = K.is_rationals() ? QuadElem(0) : in_K(K.ring_generator, K);
  for (int x = -R; x <= R; ++x)
    for (int y = (K.is_rationals() ? 0 : -R); y <= (K.is_rationals() ? 0 : R); ++y)
      out.push_back(QuadElem(x) + w * QuadElem(y));
  return out;
}

// Minimal polynomial of Y (monic, lowest first) via linear dependence of powers.
std::vector<QuadElem> minimal_poly(const KMatrix& Y) {
  const int n = Y.rows();
  std::vector<KMatrix> pw{KMatrix::identity(n)};
  for (int k = 1; k <= n; ++k) {
    pw.push_back(pw.back() * Y);
    // Solve sum_{i<k} c_i Y^i = -Y^k.
    KMatrix A(n * n, k + 1);
    for (int i = 0; i <= k; ++i)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) A.at(r * n + c, i) = pw[i].at(r, c);
    auto ns = A.nullspace();
    for (const auto& v : ns)
      if (!v[k].is_zero()) {
        std::vector<QuadElem> m(k + 1);
        QuadElem inv = v[k].inverse();
        for (int i = 0; i <= k; ++i) m[i] = v[i] * inv;
        return m;
      }
  }
  throw InvariantViolation("minimal polynomial not found");
}

std::vector<KMatrix> endomorphisms(const GModuleK& V, const FiniteGroup& G) {
  const int d = V.dim;
  std::vector<std::vector<QuadElem>> eq;
  for (int s : G.generators()) {
    const KMatrix& R = V.images[s];
    // (R Y - Y R)_{ij} = sum_k R_ik Y_kj - Y_ik R_kj.
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<QuadElem> row(d * d);
        for (int k = 0; k < d; ++k) {
          row[k * d + j] += R.at(i, k);
          row[i * d + k] -= R.at(k, j);
        }
        eq.push_back(std::move(row));
      }
  }
  KMatrix A(static_cast<int>(eq.size()), d * d);
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < d * d; ++c) A.at(r, c) = eq[r][c];
  std::vector<KMatrix> out;
  for (const auto& v : A.nullspace()) {
    KMatrix Y(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) Y.at(i, j) = v[i * d + j];
    out.push_back(std::move(Y));
  }
  return out;
}

// Proper nonzero G-submodule of V from a singular endomorphism, if a small search finds one.
std::optional<std::vector<RegVec>> split_by_commutant(const GModuleK& V, const FiniteGroup& G, const FieldDescriptor& K) {
  auto E = endomorphisms(V, G);
  if (E.size() <= 1) return std::nullopt;
  const int d = V.dim;
  auto sub_from = [&](const KMatrix& Z) -> std::optional<std::vector<RegVec>> {
    auto ker = Z.nullspace();
    if (ker.empty() || static_cast<int>(ker.size()) == d) return std::nullopt;
    std::vector<RegVec> vs;
    for (const auto& k : ker) {
      RegVec v(V.basis[0].size());
      for (int i = 0; i < d; ++i)
        if (!k[i].is_zero())
          for (std::size_t t = 0; t < v.size(); ++t)
            if (!V.basis[i][t].is_zero()) v[t] += k[i] * V.basis[i][t];
      vs.push_back(std::move(v));
    }
    return vs;
  };
  std::vector<long> c(E.size(), 0);
  for (int R = 1; R <= 2; ++R) {
    std::fill(c.begin(), c.end(), -R);
    while (true) {
      KMatrix Y(d, d);
      for (std::size_t i = 0; i < E.size(); ++i)
        if (c[i]) Y = Y + E[i].scaled(QuadElem(c[i]));
      if (!Y.is_zero()) {
        auto mp = minimal_poly(Y);
        if (mp.size() == 2) {
          // Scalar: nothing to split.
        } else if (mp.size() == 3) {
          QuadElem disc = mp[1] * mp[1] - mp[0] * QuadElem(4);
          if (auto s = sqrt_in_K(disc, K)) {
            QuadElem lam = (-mp[1] + *s) * QuadElem(frac(1, 2));
            if (auto sub = sub_from(Y - KMatrix::identity(d).scaled(lam))) return sub;
          }
        } else {
          if (mp[0].is_zero())
            if (auto sub = sub_from(Y)) return sub;
        }
      }
      std::size_t i = 0;
      while (i < c.size() && ++c[i] > R) c[i++] = -R;
      if (i == c.size()) break;
    }
  }
  return std::nullopt;
}

}  // namespace

GroupAlgebraElem ga_mul(const FiniteGroup& G, const GroupAlgebraElem& a, const GroupAlgebraElem& b) {
  GroupAlgebraElem r(G.order());
  for (int x = 0; x < G.order(); ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < G.order(); ++y)
      if (!b[y].is_zero()) r[G.mul(x, y)] += a[x] * b[y];
  }
  return r;
}

GroupAlgebraElem isotypic_idempotent(const FiniteGroup& G, const CharacterTable& T, const GaloisOrbit& O,
                                     const FieldDescriptor& K) {
  const int deg = T.degrees[O.members[0]];
  std::vector<QuadElem> per_class(T.num_classes());
  for (int c = 0; c < T.num_classes(); ++c)
    per_class[c] = in_K(O.sum.values[c].conj(), K) * QuadElem(frac(deg, G.order()));
  GroupAlgebraElem e(G.order());
  for (int x = 0; x < G.order(); ++x) e[x] = per_class[G.class_of(x)];
  return e;
}

KMatrix isotypic_projector(const FiniteGroup& G, const GroupAlgebraElem& e) {
  KMatrix P(G.order(), G.order());
  for (int y = 0; y < G.order(); ++y)
    for (int x = 0; x < G.order(); ++x) P.at(y, x) = e[G.mul(y, G.inv(x))];
  return P;
}

bool projector_checks(const FiniteGroup& G, const GroupAlgebraElem& e) {
  if (ga_mul(G, e, e) != e) return false;
  for (int s : G.generators())
    for (int x = 0; x < G.order(); ++x)
      if (e[G.conj(x, s)] != e[x]) return false;
  return true;
}

Character character_of(const CharacterTable& T, const std::vector<KMatrix>& images, const FieldDescriptor& K) {
  Character c;
  for (const auto& cl : T.classes) c.values.push_back(images[cl.rep].trace().to_cyc(K));
  return c;
}

GModuleK spin_up(const FiniteGroup& G, const std::vector<RegVec>& seeds, const FieldDescriptor& K) {
  CharacterTable T;
  for (const auto& cl : G.classes()) T.classes.push_back({cl.rep, static_cast<int>(cl.members.size()), cl.order});
  return spin_with_table(G, T, seeds, K);
}

int hilbert_symbol(const Rational& a0, const Rational& b0, long p) {
  if (sgn(a0) == 0 || sgn(b0) == 0) throw Error("Hilbert symbol of zero");
  if (p == 0) return (sgn(a0) < 0 && sgn(b0) < 0) ? -1 : 1;
  // Integral representatives in the same square classes.
  Integer a = a0.get_num() * a0.get_den(), b = b0.get_num() * b0.get_den();
  auto split = [&](Integer x, long& v, Integer& u) {
    v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    u = x;
  };
  long al, be;
  Integer u, w;
  split(a, al, u);
  split(b, be, w);
  auto mod = [](const Integer& x, long m) {
    Integer r = x % m;
    if (r < 0) r += m;
    return r.get_si();
  };
  if (p != 2) {
    long eps = ((p - 1) / 2) % 2;
    int s = (al * be * eps) % 2 ? -1 : 1;
    auto leg = [&](const Integer& x) { return static_cast<int>(pow_mod(mod(x, p), (p - 1) / 2, p) == 1 ? 1 : -1); };
    if (be % 2) s *= leg(u);
    if (al % 2) s *= leg(w);
    return s;
  }
  long u8 = mod(u, 8), w8 = mod(w, 8);
  auto e = [](long x) { return ((x - 1) / 2) % 2; };
  auto om = [](long x) { return ((x * x - 1) / 8) % 2; };
  long t = e(u8) * e(w8) + al * om(w8) + be * om(u8);
  return t % 2 ? -1 : 1;
}

bool quaternion_splits(const Rational& a, const Rational& b, const FieldDescriptor& K) {
  std::vector<long> primes{2};
  for (const Integer& x : {a.get_num(), a.get_den(), b.get_num(), b.get_den()}) {
    Integer y = abs(x);
    if (!y.fits_slong_p()) throw UnsupportedBound("quaternion parameters too large");
    for (long p : prime_divisors(y.get_si()))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  }
  if (K.is_rationals()) {
    if (hilbert_symbol(a, b, 0) == -1) return false;
    for (long p : primes)
      if (hilbert_symbol(a, b, p) == -1) return false;
    return true;
  }
  if (K.kind != FieldDescriptor::Kind::ImagQuadratic) throw UnsupportedField("quaternion splitting over real fields");
  // Local degree 2 at every place except the split primes.
  for (long p : primes)
    if (hilbert_symbol(a, b, p) == -1 && kronecker(K.discriminant, p) == 1) return false;
  return true;
}

OrbitRealization realize_orbit(const FiniteGroup& G, const CharacterTable& T, const std::vector<GaloisOrbit>& orbits,
                               int orbit, const FieldDescriptor& K, int max_dim) {
  const GaloisOrbit& O = orbits[orbit];
  const int chi = O.members[0];
  const int deg = T.degrees[chi];
  const int d0 = deg * static_cast<int>(O.members.size());
  OrbitRealization out;

  // Cyclic subgroup and K-orbit of its linear characters with the smallest left ideal.
  int best_c = 0, best_D = -1;
  std::vector<long> best_L;
  for (int c = 0; c < T.num_classes(); ++c) {
    const int o = T.classes[c].order;
    std::vector<bool> seen(o, false);
    auto fix = galois_fixing(o, K);
    for (int k = 0; k < o; ++k) {
      if (seen[k]) continue;
      std::vector<long> L;
      for (long s : fix) {
        long j = (k * s) % o;
        if (!seen[j]) {
          seen[j] = true;
          L.push_back(j);
        }
      }
      int D = 0;
      for (int i : O.members)
        for (long j : L) D += T.degrees[i] * T.eigen[i][c][j];
      if (D > 0 && (best_D < 0 || D < best_D)) {
        best_D = D;
        best_c = c;
        best_L = L;
      }
    }
  }
  if (best_D % d0 != 0) throw InvariantViolation("ideal dimension not a multiple of the orbit degree");
  const int r = best_D / d0;

  auto build_X = [&]() {
    GroupAlgebraElem eO = isotypic_idempotent(G, T, O, K);
    const int u = T.classes[best_c].rep;
    const int o = T.classes[best_c].order;
    GroupAlgebraElem eL(G.order());
    int w = 0;
    for (int j = 0; j < o; ++j) {
      CycNum s;
      for (long k : best_L) s += CycNum::zeta(o, -static_cast<long>(j) * k);
      eL[w] = in_K(s.scaled(frac(1, o)), K);
      w = G.mul(w, u);
    }
    return ga_mul(G, eO, eL);
  };

  if (r == 1) {
    out.module = spin_with_table(G, T, {build_X()}, K);
    out.method = "cyclic-ideal";
    return out;
  }

  if (deg == 2 && O.members.size() == 1) {
    const Character& ch = T.rows[chi];
    auto val = [&](int x) { return in_K(ch.values[G.class_of(x)], K); };
    bool rational = std::all_of(ch.values.begin(), ch.values.end(), [](const CycNum& v) { return v.is_rational(); });
    // Pure quaternions from g and h: a = u0^2, b = v0^2.
    std::vector<std::pair<int, int>> pairs;
    for (const auto& cl : T.classes) {
      int g = cl.rep;
      QuadElem a = (val(G.mul(g, g)) * QuadElem(2) - val(g) * val(g)) * QuadElem(frac(1, 4));
      if (a.is_zero()) continue;
      for (int h = 0; h < G.order() && pairs.size() < 24; ++h) {
        QuadElem s = val(G.mul(g, h)) - val(g) * val(h) * QuadElem(frac(1, 2));
        QuadElem c = (val(G.mul(h, h)) * QuadElem(2) - val(h) * val(h)) * QuadElem(frac(1, 4));
        QuadElem b = c - s * s * (a * QuadElem(4)).inverse();
        if (!b.is_zero()) pairs.emplace_back(g, h);
      }
      if (pairs.size() >= 24) break;
    }
    if (pairs.empty()) throw InvariantViolation("no quaternion basis for a degree-2 character");
    auto ab = [&](std::pair<int, int> gh) {
      auto [g, h] = gh;
      QuadElem a = (val(G.mul(g, g)) * QuadElem(2) - val(g) * val(g)) * QuadElem(frac(1, 4));
      QuadElem s = val(G.mul(g, h)) - val(g) * val(h) * QuadElem(frac(1, 2));
      QuadElem c = (val(G.mul(h, h)) * QuadElem(2) - val(h) * val(h)) * QuadElem(frac(1, 4));
      QuadElem b = c - s * s * (a * QuadElem(4)).inverse();
      return std::tuple{a, b, s};
    };
    if (rational) {
      auto [a, b, s] = ab(pairs[0]);
      if (!quaternion_splits(a.a(), b.a(), K)) {
        out.schur = 2;
        out.method = "hilbert-ramified";
        if (2 * d0 <= max_dim) out.module = spin_with_table(G, T, {build_X()}, K);
        return out;
      }
    }
    GModuleK V = spin_with_table(G, T, {build_X()}, K);
    auto kernel_module = [&](const KMatrix& Z) -> std::optional<GModuleK> {
      auto ker = Z.nullspace();
      if (ker.size() != 2) return std::nullopt;
      RegVec v(G.order());
      for (int i = 0; i < V.dim; ++i)
        for (int t = 0; t < G.order(); ++t)
          if (!V.basis[i][t].is_zero()) v[t] += ker[0][i] * V.basis[i][t];
      auto M = spin_with_table(G, T, {v}, K);
      if (M.dim != 2) return std::nullopt;
      return M;
    };
    if (rational) {
      auto [a, b, s] = ab(pairs[0]);
      auto [g, h] = pairs[0];
      if (auto e = quadratic_embedding(a.a(), b.a(), K.s2())) {
        KMatrix I = KMatrix::identity(V.dim);
        KMatrix U0 = V.images[g] - I.scaled(val(g) * QuadElem(frac(1, 2)));
        KMatrix W0 = V.images[h] - I.scaled(val(h) * QuadElem(frac(1, 2)));
        KMatrix V0 = W0 - U0.scaled(s * (a * QuadElem(2)).inverse());
        auto& [u, v, w, t] = *e;
        KMatrix X = U0.scaled(QuadElem(u)) + V0.scaled(QuadElem(v)) + (U0 * V0).scaled(QuadElem(w));
        if (auto M = kernel_module(X - I.scaled(QuadElem(t) * QuadElem::sqrt_elem(K)))) {
          out.module = std::move(*M);
          out.method = "quaternion-embedding";
          return out;
        }
      }
    }
    const int R = rational ? 8 : 4;
    for (auto gh : pairs) {
      auto [a, b, s] = ab(gh);
      auto [g, h] = gh;
      KMatrix I = KMatrix::identity(V.dim);
      KMatrix U0 = V.images[g] - I.scaled(val(g) * QuadElem(frac(1, 2)));
      KMatrix W0 = V.images[h] - I.scaled(val(h) * QuadElem(frac(1, 2)));
      KMatrix V0 = W0 - U0.scaled(s * (a * QuadElem(2)).inverse());
      auto ints = small_integers(K, R);
      for (const auto& y2 : ints)
        for (const auto& y3 : ints) {
          if (y2.is_zero() && y3.is_zero()) continue;
          auto y1 = sqrt_in_K(a * y2 * y2 + b * y3 * y3, K);
          if (!y1) continue;
          KMatrix Z = I.scaled(*y1) + U0.scaled(y2) + V0.scaled(y3);
          if (auto M = kernel_module(Z)) {
            out.module = std::move(*M);
            out.method = "quaternion-zero-divisor";
            return out;
          }
        }
      if (rational) break;  // same algebra for every pair; one exhaustive search is enough
    }
    if (rational) throw InvariantViolation("split quaternion algebra but no zero divisor found");
    out.schur = 2;
    out.method = "search-fallback";
    if (2 * d0 <= max_dim) out.module = std::move(V);
    return out;
  }

  // General case: split the ideal with singular endomorphisms.
  GModuleK V = spin_with_table(G, T, {build_X()}, K);
  while (V.dim > d0) {
    auto sub = split_by_commutant(V, G, K);
    if (!sub) break;
    V = spin_with_table(G, T, *sub, K);
  }
  out.schur = V.dim / d0;
  out.method = V.dim == d0 ? "commutant-split" : "commutant-fallback";
  if (V.dim <= max_dim || out.schur == 1) out.module = std::move(V);
  return out;
}

int schur_index(const FiniteGroup& G, const CharacterTable& T, const std::vector<GaloisOrbit>& orbits, int orbit,
                const FieldDescriptor& K) {
  return realize_orbit(G, T, orbits, orbit, K, 0).schur;
}

RealizedSubgroup assemble(const FiniteGroup& G, const CharacterTable& T, const std::vector<GaloisOrbit>& orbits,
                          const CandidateCharacter& cand, const std::vector<OrbitRealization>& modules,
                          const FieldDescriptor& K) {
  std::vector<const GModuleK*> blocks;
  for (const auto& [b, cnt] : cand.summands) {
    if (!modules[b].module) throw Error("missing module for a candidate block");
    for (int k = 0; k < cnt; ++k) blocks.push_back(&*modules[b].module);
  }
  int n = 0;
  for (auto* m : blocks) n += m->dim;
  std::vector<KMatrix> images(G.order(), KMatrix(n, n));
  for (int x = 0; x < G.order(); ++x) {
    int off = 0;
    for (auto* m : blocks) {
      const KMatrix& B = m->images[x];
      for (int i = 0; i < m->dim; ++i)
        for (int j = 0; j < m->dim; ++j) images[x].at(off + i, off + j) = B.at(i, j);
      off += m->dim;
    }
  }
  RealizedSubgroup R;
  R.field = K;
  R.n = n;
  R.character = character_of(T, images, K);
  if (R.character != cand.total) throw CharacterMismatch("assembled character differs from the candidate");
  int trivial = 0;
  for (int x = 0; x < G.order(); ++x) trivial += images[x].is_identity();
  if (trivial != 1) throw UnfaithfulImage("realization has a nontrivial kernel");
  for (int s : G.generators()) R.generators.push_back(images[s]);
  R.order = kgroup_order(R.generators, G.order());
  if (R.order != G.order()) throw UnfaithfulImage("closure order differs from the group order");
  R.is_sl = std::all_of(R.generators.begin(), R.generators.end(), [](const KMatrix& g) { return g.det().is_one(); });
  for (const auto& cl : T.classes) {
    R.class_sizes.push_back(cl.size);
    R.class_orders.push_back(cl.order);
  }
  (void)orbits;
  return R;
}

}  // namespace finmat
