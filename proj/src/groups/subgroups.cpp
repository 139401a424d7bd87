#include "finmat/groups/subgroups.hpp"

#include "finmat/errors.hpp"
#include "finmat/groups/search.hpp"
#include "finmat/numbers/rational.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace finmat {

namespace {

int big_omega(long n) {
  int k = 0;
  for (long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++k;
    }
  return k + (n > 1 ? 1 : 0);
}

// Closure data for a candidate subgroup, enough for fingerprinting and set identity.
struct Light {
  std::vector<MatFp> gens;
  std::vector<MatFp> elems;  // sorted
  std::size_t set_hash = 0;
  std::vector<std::pair<long, long>> fingerprint;  // sorted (order, charpoly) pairs
  std::size_t fp_hash = 0;
};

Light make_light(std::vector<MatFp> gens, std::size_t cap) {
  Light L;
  L.gens = std::move(gens);
  const MatFp id = MatFp::identity(L.gens[0].p, L.gens[0].n);
  std::unordered_set<MatFp, MatFpHash> seen{id};
  std::vector<MatFp> el{id};
  for (std::size_t i = 0; i < el.size(); ++i)
    for (const auto& g : L.gens) {
      MatFp y = el[i] * g;
      if (seen.insert(y).second) {
        if (el.size() >= cap) throw CapExceeded("candidate subgroup exceeds cap");
        el.push_back(y);
      }
    }
  std::sort(el.begin(), el.end());
  for (const auto& m : el) {
    L.set_hash = L.set_hash * 31 + m.hash();
    L.fingerprint.emplace_back(m.order(), charpoly_code(m));
  }
  std::sort(L.fingerprint.begin(), L.fingerprint.end());
  for (const auto& [o, c] : L.fingerprint) L.fp_hash = (L.fp_hash * 1000003) ^ (static_cast<std::size_t>(o) * 7919 + c);
  L.elems = std::move(el);
  return L;
}

struct Rep {
  FiniteGroup G;
  std::vector<long> colors;
  Light light;
};

Rep make_rep(Light L) {
  Rep r;
  r.G = FiniteGroup::from_matrices(L.gens);
  r.colors.resize(r.G.order());
  for (int i = 0; i < r.G.order(); ++i) r.colors[i] = charpoly_code(r.G.matrix(i));
  r.light = std::move(L);
  return r;
}

MatFp vec_to_mat(const fp::Vec& v, int p, int n) {
  MatFp m(p, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<std::uint16_t>(v[i * n + j]);
  return m;
}

// Solutions X of X*h = phi(h)*X over all pairs (h, phi(h)).
std::vector<MatFp> intertwiners(const std::vector<std::pair<MatFp, MatFp>>& pairs, int p, int n) {
  fp::Mat eq;
  for (const auto& [h, ph] : pairs) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        fp::Vec row(n * n, 0);
        for (int k = 0; k < n; ++k) {
          row[i * n + k] = (row[i * n + k] + h.at(k, j)) % p;
          row[k * n + j] = (row[k * n + j] + p - ph.at(i, k)) % p;
        }
        eq.push_back(std::move(row));
      }
  }
  if (eq.empty()) eq.push_back(fp::Vec(n * n, 0));
  std::vector<MatFp> out;
  for (const auto& v : fp::nullspace(eq, p, n * n)) out.push_back(vec_to_mat(v, p, n));
  return out;
}

MatFp combine(const std::vector<MatFp>& basis, const std::vector<long>& c) {
  MatFp m(basis[0].p, basis[0].n);
  int p = m.p, n = m.n;
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (c[b] == 0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = static_cast<std::uint16_t>((m.at(i, j) + c[b] * basis[b].at(i, j)) % p);
  }
  return m;
}

// Every invertible element of the span of basis.
void for_each_unit(const std::vector<MatFp>& basis, const std::function<void(const MatFp&)>& f) {
  int p = basis[0].p;
  std::vector<long> c(basis.size(), 0);
  while (true) {
    MatFp m = combine(basis, c);
    if (m.det() != 0) f(m);
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == p) c[i++] = 0;
    if (i == c.size()) break;
  }
}

// Polynomials are coefficient vectors, lowest degree first, monic.
std::vector<MatFp> semisimple_class_reps(int m, int p) {
  std::vector<MatFp> out;
  std::vector<long> c(m, 0);
  while (true) {
    if (c[0] != 0) {
      std::vector<long> f(c.begin(), c.end());
      f.push_back(1);
      std::vector<long> roots;
      bool progress = true;
      while (progress && f.size() > 1) {
        progress = false;
        for (long r = 1; r < p; ++r) {
          long v = 0;
          for (auto it = f.rbegin(); it != f.rend(); ++it) v = (v * r + *it) % p;
          if (v != 0) continue;
          // Divide by (x - r).
          std::vector<long> g(f.size() - 1);
          long carry = 0;
          for (int i = static_cast<int>(f.size()) - 1; i >= 1; --i) {
            carry = (f[i] + carry * r) % p;
            g[i - 1] = carry;
          }
          f = std::move(g);
          roots.push_back(r);
          progress = true;
          break;
        }
      }
      MatFp M(p, m);
      int pos = 0;
      for (long r : roots) {
        M.at(pos, pos) = static_cast<std::uint16_t>(r);
        ++pos;
      }
      int k = static_cast<int>(f.size()) - 1;
      for (int i = 0; i < k; ++i) {
        if (i > 0) M.at(pos + i, pos + i - 1) = 1;
        M.at(pos + i, pos + k - 1) = static_cast<std::uint16_t>((p - f[i]) % p);
      }
      out.push_back(M);
    }
    int i = 0;
    while (i < m && ++c[i] == p) c[i++] = 0;
    if (i == m) break;
  }
  return out;
}

struct Context {
  int n;
  long q;
  long bound;
  bool ambient_route;
  std::vector<MatFp> ambient;
  std::unordered_map<MatFp, int, MatFpHash> ambient_index;
  std::vector<int> ambient_inv;
};

std::vector<long> extension_primes(long order, long bound) {
  std::vector<long> ps;
  for (long p : prime_divisors(bound))
    if (bound % (order * p) == 0) ps.push_back(p);
  return ps;
}

std::vector<Light> ambient_extensions(const Context& cx, const Rep& H) {
  std::vector<Light> out;
  auto ps = extension_primes(H.G.order(), cx.bound);
  if (ps.empty()) return out;
  const auto& gens = H.G.generators();
  std::vector<int> normalizer;
  for (int x = 0; x < static_cast<int>(cx.ambient.size()); ++x) {
    const MatFp& X = cx.ambient[x];
    const MatFp& Xi = cx.ambient[cx.ambient_inv[x]];
    bool ok = true;
    for (int g : gens)
      if (H.G.index_of(X * H.G.matrix(g) * Xi) < 0) {
        ok = false;
        break;
      }
    if (ok) normalizer.push_back(x);
  }
  for (long p : ps) {
    std::unordered_set<MatFp, MatFpHash> covered;
    for (int x : normalizer) {
      const MatFp& X = cx.ambient[x];
      if (H.G.index_of(X) >= 0 || covered.count(X)) continue;
      if (H.G.index_of(X.pow(p)) < 0) continue;
      std::vector<MatFp> g;
      for (int s : gens) g.push_back(H.G.matrix(s));
      g.push_back(X);
      Light L = make_light(std::move(g), static_cast<std::size_t>(cx.bound));
      for (const auto& e : L.elems) covered.insert(e);
      out.push_back(std::move(L));
    }
  }
  return out;
}

std::vector<MatFp> commutant_units_reps(const Rep& H, const std::vector<MatFp>& A, int n, int q) {
  std::vector<MatFp> out;
  if (A.size() <= 3) {
    for_each_unit(A, [&](const MatFp& m) { out.push_back(m); });
    return out;
  }
  // Repeated one-dimensional constituents force H abelian and diagonalizable over F_q.
  if (!H.G.is_abelian()) throw UnsupportedBound("commutant of dimension > 3 for a non-abelian subgroup");
  std::vector<fp::Mat> spaces{fp::Mat()};
  for (int i = 0; i < n; ++i) {
    fp::Vec e(n, 0);
    e[i] = 1;
    spaces[0].push_back(e);
  }
  for (int g : H.G.generators()) {
    const MatFp& h = H.G.matrix(g);
    std::vector<fp::Mat> next;
    for (const auto& W : spaces) {
      int got = 0;
      for (long lam = 1; lam < q; ++lam) {
        // Columns (h - lam) w_i; find combinations in the kernel.
        fp::Mat M(n, fp::Vec(W.size(), 0));
        for (std::size_t c = 0; c < W.size(); ++c)
          for (int r = 0; r < n; ++r) {
            long v = 0;
            for (int k = 0; k < n; ++k) v += h.at(r, k) * W[c][k];
            v -= lam * W[c][r];
            M[r][c] = ((v % q) + q) % q;
          }
        auto ker = fp::nullspace(M, q, static_cast<int>(W.size()));
        if (ker.empty()) continue;
        fp::Mat sub;
        for (const auto& comb : ker) {
          fp::Vec v(n, 0);
          for (std::size_t c = 0; c < W.size(); ++c)
            for (int r = 0; r < n; ++r) v[r] = (v[r] + comb[c] * W[c][r]) % q;
          sub.push_back(v);
        }
        got += static_cast<int>(sub.size());
        next.push_back(std::move(sub));
      }
      if (got != static_cast<int>(W.size())) throw UnsupportedBound("abelian subgroup not diagonalizable over F_q");
    }
    spaces = std::move(next);
  }
  MatFp P(q, n);
  std::vector<int> dims;
  int col = 0;
  for (const auto& W : spaces) {
    dims.push_back(static_cast<int>(W.size()));
    for (const auto& v : W) {
      for (int r = 0; r < n; ++r) P.at(r, col) = static_cast<std::uint16_t>(v[r]);
      ++col;
    }
  }
  MatFp Pi = P.inverse();
  std::vector<std::vector<MatFp>> blocks;
  for (int d : dims) blocks.push_back(semisimple_class_reps(d, q));
  std::vector<std::size_t> idx(blocks.size(), 0);
  while (true) {
    MatFp D(q, n);
    int off = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const MatFp& B = blocks[b][idx[b]];
      for (int i = 0; i < B.n; ++i)
        for (int j = 0; j < B.n; ++j) D.at(off + i, off + j) = B.at(i, j);
      off += B.n;
    }
    out.push_back(P * D * Pi);
    std::size_t b = 0;
    while (b < blocks.size() && ++idx[b] == blocks[b].size()) idx[b++] = 0;
    if (b == blocks.size()) break;
  }
  return out;
}

std::vector<Light> coprime_extensions(const Context& cx, const Rep& H) {
  std::vector<Light> out;
  auto ps = extension_primes(H.G.order(), cx.bound);
  if (ps.empty()) return out;
  int n = cx.n, q = static_cast<int>(cx.q);
  const FiniteGroup& G = H.G;
  std::vector<MatFp> hgens;
  for (int s : G.generators()) hgens.push_back(G.matrix(s));
  std::vector<std::pair<MatFp, MatFp>> self;
  for (const auto& h : hgens) self.emplace_back(h, h);
  auto A = intertwiners(self, q, n);
  auto add = [&](const MatFp& g) {
    std::vector<MatFp> gens = hgens;
    gens.push_back(g);
    out.push_back(make_light(std::move(gens), static_cast<std::size_t>(cx.bound)));
  };
  auto covered_add = [&](std::unordered_set<MatFp, MatFpHash>& covered, const MatFp& g) {
    if (covered.count(g)) return;
    add(g);
    for (const auto& e : out.back().elems) covered.insert(e);
  };

  std::vector<MatFp> units = commutant_units_reps(H, A, n, q);
  for (long p : ps) {
    std::unordered_set<MatFp, MatFpHash> covered;
    for (const auto& c : units) {
      if (G.index_of(c) >= 0 || G.index_of(c.pow(p)) < 0) continue;
      covered_add(covered, c);
    }
  }

  // Outer classes: trace-preserving automorphisms modulo inner ones.
  auto outs = outer_automorphisms(G, &H.colors);
  auto is_inner = [&](const std::vector<int>& phi) {
    for (int h = 0; h < G.order(); ++h) {
      bool ok = true;
      for (int s : G.generators())
        if (phi[s] != G.conj(s, h)) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  };
  std::mt19937 rng(20240601u);
  for (const auto& phi : outs) {
    if (is_inner(phi)) continue;
    std::vector<int> pw = phi;
    long m = 1;
    while (!is_inner(pw)) {
      std::vector<int> nxt(G.order());
      for (int x = 0; x < G.order(); ++x) nxt[x] = phi[pw[x]];
      pw = std::move(nxt);
      if (++m > 10000) throw InvariantViolation("automorphism of unbounded order");
    }
    if (!is_prime(m) || std::find(ps.begin(), ps.end(), m) == ps.end()) continue;
    if (A.size() > 3) throw UnsupportedBound("outer extension over a large commutant");
    std::vector<std::pair<MatFp, MatFp>> tw;
    for (int s : G.generators()) tw.emplace_back(G.matrix(s), G.matrix(phi[s]));
    auto X = intertwiners(tw, q, n);
    if (X.empty()) throw InvariantViolation("trace-preserving automorphism without intertwiner");
    MatFp gphi;
    bool found = false;
    for (const auto& x : X)
      if (x.det() != 0) {
        gphi = x;
        found = true;
        break;
      }
    std::uniform_int_distribution<long> dist(0, q - 1);
    for (int tries = 0; !found && tries < 10000; ++tries) {
      std::vector<long> c(X.size());
      for (auto& v : c) v = dist(rng);
      MatFp x = combine(X, c);
      if (x.det() != 0) {
        gphi = x;
        found = true;
      }
    }
    if (!found) throw InvariantViolation("no invertible intertwiner found");
    std::unordered_set<MatFp, MatFpHash> covered;
    for (const auto& a : units) {
      MatFp g = a * gphi;
      if (G.index_of(g.pow(m)) < 0) continue;
      covered_add(covered, g);
    }
  }
  return out;
}

}  // namespace

long charpoly_code(const MatFp& m) {
  long code = 0;
  for (long c : m.charpoly()) code = code * m.p + c;
  return code;
}

const std::vector<long>& nonabelian_simple_orders() {
  static const std::vector<long> orders{60,   168,  360,  504,  660,  1092, 2448, 2520,
                                        3420, 4080, 5616, 6048, 6072, 7800, 7920, 9828};
  return orders;
}

bool bound_needs_seeds(long bound) {
  for (long s : nonabelian_simple_orders())
    if (bound % s == 0) return true;
  if (bound > 10000 && prime_divisors(bound).size() >= 3) {
    // Beyond the tabulated range only Burnside's criterion is certain.
    return true;
  }
  return false;
}

std::vector<MatFp> general_linear_group(int n, long q) {
  double total = 1;
  for (int i = 0; i < n * n; ++i) total *= static_cast<double>(q);
  if (total > 4e6) throw UnsupportedBound("ambient group too large to list");
  std::vector<MatFp> out;
  MatFp m(static_cast<int>(q), n);
  long count = static_cast<long>(total);
  for (long code = 0; code < count; ++code) {
    long c = code;
    for (int i = n - 1; i >= 0; --i)
      for (int j = n - 1; j >= 0; --j) {
        m.at(i, j) = static_cast<std::uint16_t>(c % q);
        c /= q;
      }
    if (m.det() != 0) out.push_back(m);
  }
  return out;
}

bool conjugate_coprime(const FiniteGroup& A, const FiniteGroup& B) {
  std::vector<long> ca(A.order()), cb(B.order());
  for (int i = 0; i < A.order(); ++i) ca[i] = charpoly_code(A.matrix(i));
  for (int i = 0; i < B.order(); ++i) cb[i] = charpoly_code(B.matrix(i));
  return find_isomorphism(A, B, &ca, &cb).has_value();
}

bool conjugate_in(const std::vector<MatFp>& ambient, const FiniteGroup& A, const FiniteGroup& B) {
  if (A.order() != B.order()) return false;
  for (const auto& X : ambient) {
    MatFp Xi = X.inverse();
    bool ok = true;
    for (int g : A.generators())
      if (B.index_of(X * A.matrix(g) * Xi) < 0) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

std::vector<FiniteGroup> enumerate_subgroups(int n, long q, long bound, const SubgroupOptions& opt) {
  if (n < 1 || n > kMaxDim) throw Error("unsupported dimension");
  if (!is_prime(q)) throw UnsupportedField("finite-field engine works over prime fields only");
  if (bound_needs_seeds(bound) && opt.seeds.empty())
    throw UnsupportedBound("non-solvable orders divide the bound and no seeds are configured");
  Context cx{n, q, bound, false, {}, {}, {}};
  cx.ambient_route = opt.route == SubgroupOptions::Route::Ambient ||
                     (opt.route == SubgroupOptions::Route::Auto && bound % q == 0);
  if (!cx.ambient_route && bound % q == 0) throw Error("coprime route requires q not dividing the bound");
  if (cx.ambient_route) {
    cx.ambient = general_linear_group(n, q);
    for (int i = 0; i < static_cast<int>(cx.ambient.size()); ++i) cx.ambient_index.emplace(cx.ambient[i], i);
    cx.ambient_inv.resize(cx.ambient.size());
    for (int i = 0; i < static_cast<int>(cx.ambient.size()); ++i)
      cx.ambient_inv[i] = cx.ambient_index.at(cx.ambient[i].inverse());
  }

  int levels = big_omega(bound);
  std::vector<std::vector<Rep>> reps(levels + 1);
  std::unordered_map<std::size_t, std::vector<std::pair<int, int>>> buckets;  // fp hash -> (level, idx)

  auto insert = [&](Light L, int level) {
    auto& bucket = buckets[L.fp_hash];
    std::unique_ptr<Rep> cand;
    for (auto [lv, idx] : bucket) {
      const Rep& r = reps[lv][idx];
      if (r.light.fingerprint != L.fingerprint) continue;
      if (r.light.set_hash == L.set_hash && r.light.elems == L.elems) return;
      if (!cand) cand = std::make_unique<Rep>(make_rep(L));
      bool conj = cx.ambient_route ? conjugate_in(cx.ambient, cand->G, r.G)
                                   : find_isomorphism(cand->G, r.G, &cand->colors, &r.colors).has_value();
      if (conj) return;
    }
    Rep r = cand ? std::move(*cand) : make_rep(std::move(L));
    bucket.emplace_back(level, static_cast<int>(reps[level].size()));
    reps[level].push_back(std::move(r));
  };

  insert(make_light({MatFp::identity(static_cast<int>(q), n)}, 1), 0);
  std::vector<std::pair<int, Light>> seed_lights;
  for (const auto& s : opt.seeds) {
    Light L = make_light(s, static_cast<std::size_t>(bound));
    long ord = static_cast<long>(L.elems.size());
    if (bound % ord != 0) continue;
    seed_lights.emplace_back(big_omega(ord), std::move(L));
  }

  for (int k = 0; k <= levels; ++k) {
    for (auto& [lv, L] : seed_lights)
      if (lv == k) insert(L, k);
    if (k == levels) break;
    const auto& cur = reps[k];
    std::vector<std::vector<Light>> results(cur.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errs(std::max(1, opt.jobs));
    auto work = [&](int w) {
      try {
        for (std::size_t i = next++; i < cur.size(); i = next++)
          results[i] = cx.ambient_route ? ambient_extensions(cx, cur[i]) : coprime_extensions(cx, cur[i]);
      } catch (...) {
        errs[w] = std::current_exception();
      }
    };
    int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
      work(0);
    } else {
      std::vector<std::thread> th;
      for (int w = 0; w < jobs; ++w) th.emplace_back(work, w);
      for (auto& t : th) t.join();
    }
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    for (auto& list : results)
      for (auto& L : list) insert(std::move(L), k + 1);
  }

  std::vector<FiniteGroup> out;
  for (auto& lv : reps)
    for (auto& r : lv) out.push_back(std::move(r.G));
  return out;
}

}  // namespace finmat
