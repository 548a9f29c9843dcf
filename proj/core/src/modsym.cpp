#include "trisum/modsym.hpp"
#include "trisum/charpoly.hpp"
#include "trisum/polyfactor.hpp"
#include "trisum/primes.hpp"
#include <algorithm>
#include <array>
#include <fstream>
#include <numeric>
#include <sstream>

namespace trisum {

namespace {

long lgcd(long a, long b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// signed union-find: e_i = sign(i) * e_root(i); a root may be marked dead (= 0)
struct SignedUF {
    std::vector<long> parent;
    std::vector<int> sgn;
    std::vector<char> dead;

    explicit SignedUF(long n) : parent(n), sgn(n, 1), dead(n, 0) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::pair<long, int> find(long i) {
        if (parent[i] == i) return {i, sgn[i]};
        auto [r, s] = find(parent[i]);
        parent[i] = r;
        sgn[i] = sgn[i] == 1 ? s : -s;
        // sgn[i] now relative to root
        return {i == r ? r : r, sgn[i]};
    }
    // impose e_i = s * e_j
    void unite(long i, long j, int s) {
        auto [ri, si] = find(i);
        auto [rj, sj] = find(j);
        if (ri == rj) {
            if (si != (s == 1 ? sj : -sj)) dead[ri] = 1;  // e_ri = -e_ri
            return;
        }
        bool d = dead[ri] || dead[rj];
        parent[ri] = rj;
        // e_ri = si^{-1} e_i = si (s e_j) = si s sj e_rj
        sgn[ri] = si * s * sj;
        dead[rj] = d ? 1 : dead[rj];
    }
};

struct Cusp {
    Integer p, q;  // lowest terms, q >= 0; infinity = (1, 0)
    void reduce() {
        Integer g = igcd(iabs(p), iabs(q));
        if (g > 1) {
            p = divexact(p, g);
            q = divexact(q, g);
        }
        if (q < 0) {
            p = -p;
            q = -q;
        }
        if (q == 0) p = 1;
    }
};

// Gamma0(N)-equivalence of cusps
bool cusps_equiv(const Cusp& c1, const Cusp& c2, long N) {
    Integer n(N);
    bool inf1 = (c1.q == 0) || divides(n, c1.q);
    bool inf2 = (c2.q == 0) || divides(n, c2.q);
    if (inf1 || inf2) return inf1 && inf2;
    // s_i p_i == 1 (mod q_i); equivalent iff s1 q2 == s2 q1 (mod gcd(q1 q2, N))
    auto inv_mod = [](const Integer& a, const Integer& m) {
        if (m == 1) return Integer(0);
        return mod_inverse(mod_pos(a, m), m);
    };
    Integer s1 = inv_mod(c1.p, c1.q);
    Integer s2 = inv_mod(c2.p, c2.q);
    Integer g = igcd(c1.q * c2.q, n);
    return mod_pos(s1 * c2.q - s2 * c1.q, g) == 0;
}

// with the star identification [p/q] ~ [-p/q]
bool cusps_equiv_star(const Cusp& a, const Cusp& b, long N) {
    if (cusps_equiv(a, b, N)) return true;
    Cusp am = a;
    am.p = -am.p;
    am.reduce();
    return cusps_equiv(am, b, N);
}

}  // namespace

ManinSymbolSpace::ManinSymbolSpace(long N) : N_(N), p1_(N) { build(); }

void ManinSymbolSpace::build() {
    const long n = p1_.size();
    SignedUF uf(n);

    auto act = [&](long i, long a, long b, long c, long d) {
        auto [x, y] = p1_.rep(i);
        return p1_.index(x * a + y * c, x * b + y * d);
    };

    // star: e_x = e_{x eta}, eta = [-1 0; 0 1]
    for (long i = 0; i < n; ++i) uf.unite(i, act(i, -1, 0, 0, 1), 1);
    // 2-term: e_x + e_{xS} = 0, S = [0 -1; 1 0]
    for (long i = 0; i < n; ++i) uf.unite(i, act(i, 0, -1, 1, 0), -1);

    // alive root variables
    std::vector<long> root_var(n, -1);
    long nv = 0;
    for (long i = 0; i < n; ++i) {
        auto [r, s] = uf.find(i);
        if (r == i && !uf.dead[r]) root_var[i] = nv++;
    }

    // 3-term rows: e_x + e_{xT} + e_{xT^2} = 0, T = [0 -1; 1 -1]
    std::vector<std::map<long, Rational>> rows;
    std::vector<char> seen(n, 0);
    for (long i = 0; i < n; ++i) {
        if (seen[i]) continue;
        long j = act(i, 0, -1, 1, -1);
        long k = act(j, 0, -1, 1, -1);
        seen[i] = seen[j] = seen[k] = 1;
        std::map<long, Rational> row;
        for (long e : {i, j, k}) {
            auto [r, s] = uf.find(e);
            if (uf.dead[r]) continue;
            row[root_var[r]] += Rational(s);
            if (row[root_var[r]] == 0) row.erase(root_var[r]);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }

    // sparse elimination; pivot expressions pivot[v]: v = -sum(rest)
    std::map<long, std::map<long, Rational>> pivot;  // var -> rest (var coefficient removed)
    std::vector<long> order;
    for (auto& row : rows) {
        // reduce against existing pivots: pivot[v] holds v = sum(rest)
        for (;;) {
            long hit = -1;
            for (const auto& [v, c] : row)
                if (pivot.count(v)) { hit = v; break; }
            if (hit < 0) break;
            Rational c = row[hit];
            row.erase(hit);
            for (const auto& [w, pc] : pivot[hit]) {
                row[w] += c * pc;
                if (row[w] == 0) row.erase(w);
            }
        }
        if (row.empty()) continue;
        long v = row.rbegin()->first;  // largest index as pivot
        Rational c = row[v];
        row.erase(v);
        std::map<long, Rational> rest;
        for (const auto& [w, rc] : row) rest[w] = rc / c;
        // v = -rest
        for (auto& [w, rc] : rest) rc = -rc;
        pivot[v] = std::move(rest);
        order.push_back(v);
    }
    // back-substitute so every pivot expression uses free variables only
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto& expr = pivot[*it];
        for (;;) {
            long hit = -1;
            for (const auto& [w, c] : expr)
                if (pivot.count(w) && w != *it) { hit = w; break; }
            if (hit < 0) break;
            Rational c = expr[hit];
            expr.erase(hit);
            for (const auto& [w, pc] : pivot[hit]) {
                expr[w] += c * pc;
                if (expr[w] == 0) expr.erase(w);
            }
        }
    }

    // free variables form the quotient basis
    std::vector<long> var_free(nv, -1);
    std::vector<long> free_rep;  // generator index per basis element
    {
        std::vector<long> var_gen(nv, -1);
        for (long i = 0; i < n; ++i)
            if (root_var[i] >= 0) var_gen[root_var[i]] = i;
        long nb = 0;
        for (long v = 0; v < nv; ++v) {
            if (pivot.count(v)) continue;
            var_free[v] = nb++;
            free_rep.push_back(var_gen[v]);
        }
        dim_ = nb;
    }

    auto var_expr = [&](long v) {
        std::vector<std::pair<long, Rational>> out;
        if (var_free[v] >= 0) {
            out.emplace_back(var_free[v], Rational(1));
            return out;
        }
        for (const auto& [w, c] : pivot[v]) out.emplace_back(var_free[w], c);
        return out;
    };

    gen_expr_.resize(n);
    for (long i = 0; i < n; ++i) {
        auto [r, s] = uf.find(i);
        if (uf.dead[r]) continue;
        for (auto [b, c] : var_expr(root_var[r]))
            gen_expr_[i].emplace_back(b, s == 1 ? c : Rational(-c));
    }

    // boundary map on the basis: d(c:d) = [a/c'] - [b/d'] from an SL2 lift
    std::vector<Cusp> classes;
    MatQ B(0, 0);
    std::vector<std::map<long, Rational>> bcols(dim_);
    long nclasses = 0;
    auto cusp_class = [&](Cusp c) {
        c.reduce();
        for (size_t k = 0; k < classes.size(); ++k)
            if (cusps_equiv_star(c, classes[k], N_)) return static_cast<long>(k);
        classes.push_back(c);
        return static_cast<long>(nclasses++);
    };
    for (long j = 0; j < dim_; ++j) {
        auto [c, d] = p1_.rep(free_rep[j]);
        // lift to gcd(c, d) = 1 (normalized reps already satisfy this; see P1)
        Integer cc(c), dd(d);
        if (cc == 0 && dd == 0) dd = 1;  // N = 1
        if (igcd(cc, dd) != 1) throw std::logic_error("modsym: non-coprime lift");
        // a dd - b cc = 1
        Integer a, b, g;
        mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), dd.get_mpz_t(), cc.get_mpz_t());
        b = -b;
        // matrix [[a, b], [cc, dd]]: boundary [a/cc] - [b/dd]
        Cusp c1{a, cc}, c2{b, dd};
        long k1 = cusp_class(c1), k2 = cusp_class(c2);
        if (k1 != k2) {
            bcols[j][k1] += 1;
            bcols[j][k2] -= 1;
        }
    }
    MatQ bd(nclasses, dim_);
    for (long j = 0; j < dim_; ++j)
        for (const auto& [k, c] : bcols[j]) bd.at(k, j) = c;
    cusp_basis_ = bd.kernel();
    cusp_dim_ = cusp_basis_.cols();
}

const std::vector<std::array<long, 4>>& heilbronn_merel(long ell) {
    static std::map<long, std::vector<std::array<long, 4>>> cache;
    auto it = cache.find(ell);
    if (it != cache.end()) return it->second;
    std::vector<std::array<long, 4>> out;
    // det = ell, a > b >= 0, d > c >= 0
    // b = 0: (a, d) = (ell, 1) with c = 0; (1, ell) with 0 <= c < ell
    out.push_back({1, 0, 0, ell});
    for (long c = 1; c < ell; ++c) out.push_back({1, 0, c, ell});
    for (long b = 0; b < ell; ++b) out.push_back({ell, b, 0, 1});
    // b, c >= 1: a d = ell + b c, a > b, d > c
    for (long a = 2; a <= ell; ++a)
        for (long b = 1; b < a; ++b)
            for (long c = 1; c * (a - b) < ell; ++c) {
                long num = ell + b * c;
                if (num % a) continue;
                long d = num / a;
                if (d > c) out.push_back({a, b, c, d});
            }
    auto& ref = cache[ell];
    ref = std::move(out);
    return ref;
}

MatQ ManinSymbolSpace::hecke_matrix(long ell, bool allow_u_ell) const {
    if (!is_prime(Integer(ell))) throw std::invalid_argument("ell must be prime");
    if (N_ % ell == 0 && !allow_u_ell)
        throw std::invalid_argument("ell divides the level (U_ell); pass allow_u_ell");
    const auto& mats = heilbronn_merel(ell);
    // columns: images of the cuspidal basis vectors under sum over mats
    // first the action on quotient basis elements
    // basis element j corresponds to a generator; reconstruct its rep
    // find generator reps of basis elements by scanning gen_expr
    std::vector<long> rep_gen(dim_, -1);
    for (long i = 0; i < p1_.size(); ++i) {
        const auto& e = gen_expr_[i];
        if (e.size() == 1 && e[0].second == 1 && rep_gen[e[0].first] < 0)
            rep_gen[e[0].first] = i;
    }
    MatQ T(dim_, dim_);
    for (long j = 0; j < dim_; ++j) {
        long g = rep_gen[j];
        if (g < 0) throw std::logic_error("hecke: missing basis representative");
        auto [x, y] = p1_.rep(g);
        for (const auto& m : mats) {
            long idx = p1_.index(x * m[0] + y * m[2], x * m[1] + y * m[3]);
            if (idx < 0) continue;  // degenerate image (only when ell | N)
            for (const auto& [b, c] : gen_expr_[idx]) T.at(b, j) += c;
        }
    }
    // restrict to the cuspidal subspace: solve C A = T C
    MatQ TC = T * cusp_basis_;
    MatQ A = cusp_basis_.solve_exact(TC);
    return A;
}

Integer genus_X0(long N) {
    if (N < 1) throw std::invalid_argument("level must be >= 1");
    // index mu, elliptic point counts nu2/nu3, cusp count nu_inf
    Integer mu(N);
    long nn = N;
    std::vector<long> ps;
    for (long p = 2; p * p <= nn; ++p)
        if (nn % p == 0) {
            ps.push_back(p);
            while (nn % p == 0) nn /= p;
        }
    if (nn > 1) ps.push_back(nn);
    for (long p : ps) mu = divexact(mu * (p + 1), Integer(p));

    long nu2 = 1, nu3 = 1;
    if (N % 4 == 0) nu2 = 0;
    else
        for (long p : ps) {
            if (p == 2) continue;
            nu2 *= (p % 4 == 1) ? 2 : 0;
        }
    if (N % 9 == 0) nu3 = 0;
    else
        for (long p : ps) {
            if (p == 3) continue;
            nu3 *= (p % 3 == 1) ? 2 : 0;
        }

    long nuinf = 0;
    for (long d = 1; d <= N; ++d) {
        if (N % d) continue;
        long g = lgcd(d, N / d);
        long phi = 1;
        long m = g;
        for (long p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                long pk = 1;
                while (m % p == 0) {
                    m /= p;
                    pk *= p;
                }
                phi *= pk - pk / p;
            }
        if (m > 1) phi *= m - 1;
        nuinf += phi;
    }
    // g = 1 + mu/12 - nu2/4 - nu3/3 - nuinf/2
    Rational g = Rational(1) + Rational(mu) / 12 - Rational(nu2) / 4 - Rational(nu3) / 3 -
                 Rational(nuinf) / 2;
    if (denom(g) != 1) throw std::logic_error("genus formula: non-integral result");
    return numer(g);
}

long dim_new(long N) {
    static std::map<long, long> memo;
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
    long dim = to_long(genus_X0(N));
    for (long M = 1; M < N; ++M) {
        if (N % M) continue;
        long q = N / M;
        long sigma0 = 0;
        for (long d = 1; d <= q; ++d)
            if (q % d == 0) ++sigma0;
        dim -= sigma0 * dim_new(M);
    }
    memo[N] = dim;
    return dim;
}

void HeckePolyCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag != "heckepoly") continue;
        long N = -1, ell = -1, deg = -1;
        std::string coeffs;
        std::string tok;
        while (ls >> tok) {
            if (tok.rfind("N=", 0) == 0) N = std::stol(tok.substr(2));
            else if (tok.rfind("ell=", 0) == 0) ell = std::stol(tok.substr(4));
            else if (tok.rfind("deg=", 0) == 0) deg = std::stol(tok.substr(4));
            else if (tok.rfind("coeffs=", 0) == 0) coeffs = tok.substr(7);
        }
        if (N < 1 || ell < 2 || coeffs.empty()) continue;
        PolyZ f = PolyZ::parse(coeffs);
        if (f.degree() != deg || !f.is_monic()) continue;  // malformed record
        tab_[{N, ell}] = f;
    }
}

void HeckePolyCache::save(const std::string& path) const {
    std::ofstream out(path);
    for (const auto& [key, f] : tab_)
        out << "heckepoly N=" << key.first << " ell=" << key.second << " deg=" << f.degree()
            << " coeffs=" << f.csv() << "\n";
}

bool HeckePolyCache::has(long N, long ell) const { return tab_.count({N, ell}) > 0; }

void HeckePolyCache::put(long N, long ell, const PolyZ& f) { tab_[{N, ell}] = f; }

const PolyZ& HeckePolyCache::get(long N, long ell) const {
    auto it = tab_.find({N, ell});
    if (it == tab_.end()) throw std::out_of_range("hecke cache miss");
    return it->second;
}

const ManinSymbolSpace& ModSymEngine::space(long N) {
    auto it = spaces_.find(N);
    if (it != spaces_.end()) return *it->second;
    if (N > opt_.level_budget)
        throw BudgetExceeded("level " + std::to_string(N) +
                             " exceeds the build budget; ingest a heckepoly cache instead");
    auto sp = std::make_unique<ManinSymbolSpace>(N);
    auto& ref = *sp;
    spaces_[N] = std::move(sp);
    return ref;
}

PolyZ ModSymEngine::cuspidal_charpoly(long N, long ell) {
    if (genus_X0(N) == 0) return PolyZ::constant(1);
    const ManinSymbolSpace& S = space(N);
    MatQ T = S.hecke_matrix(ell);
    PolyQ cp = charpoly_exact(T, opt_.jobs);
    if (!cp.is_integral())
        throw std::logic_error("cuspidal charpoly is not integral");
    return cp.to_polyz();
}

PolyZ ModSymEngine::new_charpoly(long N, long ell) {
    if (lgcd(N, ell) != 1)
        throw std::invalid_argument("new_charpoly requires ell coprime to the level");
    if (cache_.has(N, ell)) return cache_.get(N, ell);
    if (dim_new(N) == 0) {
        PolyZ one = PolyZ::constant(1);
        cache_.put(N, ell, one);
        return one;
    }
    PolyZ full = cuspidal_charpoly(N, ell);
    PolyZ divisor = PolyZ::constant(1);
    for (long M = 1; M < N; ++M) {
        if (N % M) continue;
        long q = N / M;
        long sigma0 = 0;
        for (long d = 1; d <= q; ++d)
            if (q % d == 0) ++sigma0;
        PolyZ nm = new_charpoly(M, ell);
        divisor = divisor * nm.pow(sigma0);
    }
    PolyZ out;
    try {
        out = full.divexact(divisor);
    } catch (const std::domain_error&) {
        throw std::logic_error("old/new charpoly division is not exact");
    }
    if (out.degree() != dim_new(N))
        throw std::logic_error("new charpoly degree mismatch");
    cache_.put(N, ell, out);
    return out;
}

namespace {

// can `fine` be obtained from `coarse` by splitting each part into equal pieces?
bool equal_split_refines(std::vector<long> fine, const std::vector<long>& coarse) {
    std::sort(fine.begin(), fine.end());
    // multiset backtracking
    std::function<bool(std::vector<long>&, size_t)> go = [&](std::vector<long>& rem,
                                                             size_t ci) -> bool {
        if (ci == coarse.size()) return rem.empty();
        long d = coarse[ci];
        // choose a divisor k | d; remove d/k copies of k from rem
        for (long k = 1; k <= d; ++k) {
            if (d % k) continue;
            long need = d / k;
            std::vector<long> nxt;
            long removed = 0;
            for (long x : rem) {
                if (x == k && removed < need) {
                    ++removed;
                    continue;
                }
                nxt.push_back(x);
            }
            if (removed == need && go(nxt, ci + 1)) {
                rem = nxt;
                return true;
            }
        }
        return false;
    };
    std::vector<long> rem = fine;
    return go(rem, 0);
}

}  // namespace

std::vector<long> ModSymEngine::class_degrees(long N, int n_primes) {
    std::vector<long> good;
    for (Integer p = 2; static_cast<int>(good.size()) < n_primes; p = next_prime(p))
        if (N % to_long(p) != 0) good.push_back(to_long(p));

    std::vector<std::vector<long>> parts;
    for (long ell : good) {
        PolyZ f = new_charpoly(N, ell);
        parts.push_back(factor_degrees(f));
    }
    // the orbit partition is the coarsest; every observation refines it by equal splits
    size_t best = 0;
    auto coarser = [](const std::vector<long>& a, const std::vector<long>& b) {
        // fewer parts = coarser; tie-break lexicographically descending
        if (a.size() != b.size()) return a.size() < b.size();
        return false;
    };
    for (size_t i = 1; i < parts.size(); ++i)
        if (coarser(parts[i], parts[best])) best = i;
    for (size_t i = 0; i < parts.size(); ++i)
        if (!equal_split_refines(parts[i], parts[best]))
            throw std::logic_error("class degrees did not stabilize over the sample primes");
    return parts[best];
}

}  // namespace trisum
