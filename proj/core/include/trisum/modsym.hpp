#ifndef TRISUM_MODSYM_HPP
#define TRISUM_MODSYM_HPP

#include "trisum/errors.hpp"
#include "trisum/matrix.hpp"
#include "trisum/p1.hpp"
#include "trisum/poly.hpp"
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace trisum {

// Weight-2 Manin symbols for Gamma0(N) on the star-involution +1 quotient.
// Construction: 2-term (S) and star pairings by signed union-find, 3-term (T)
// relations by sparse exact elimination, cuspidal part as the boundary-map
// kernel. dim(cuspidal) equals the genus of X0(N).
class ManinSymbolSpace {
public:
    explicit ManinSymbolSpace(long N);

    long level() const { return N_; }
    const P1& p1() const { return p1_; }
    long quotient_dim() const { return dim_; }
    long cuspidal_dim() const { return cusp_dim_; }
    const MatQ& cuspidal_basis() const { return cusp_basis_; }

    // expression of Manin generator i in the quotient basis (sparse)
    const std::vector<std::pair<long, Rational>>& gen_expr(long i) const {
        return gen_expr_[i];
    }

    // Hecke operator on the cuspidal subspace via Merel-Heilbronn matrices.
    // For ell | N this is U_ell; pass allow_u_ell to acknowledge.
    MatQ hecke_matrix(long ell, bool allow_u_ell = false) const;

private:
    long N_;
    P1 p1_;
    long dim_ = 0;
    long cusp_dim_ = 0;
    std::vector<std::vector<std::pair<long, Rational>>> gen_expr_;
    MatQ cusp_basis_;

    void build();
};

// genus of X0(N) by the index/elliptic-point/cusp formula
Integer genus_X0(long N);

// dimension of the new subspace via the divisor recursion
long dim_new(long N);

// determinant-ell integer matrices [a b; c d], a > b >= 0, d > c >= 0
const std::vector<std::array<long, 4>>& heilbronn_merel(long ell);

// Shared cache of new-subspace Hecke characteristic polynomials.
// File records: `heckepoly N=<level> ell=<prime> deg=<D> coeffs=<c0,...,cD>`.
class HeckePolyCache {
public:
    void load(const std::string& path);
    void save(const std::string& path) const;
    bool has(long N, long ell) const;
    void put(long N, long ell, const PolyZ& f);
    const PolyZ& get(long N, long ell) const;

private:
    std::map<std::pair<long, long>, PolyZ> tab_;
};

struct ModSymOptions {
    long level_budget = 2000;
    unsigned jobs = 1;
};

// Engine tying spaces, charpolys and the cache together.
class ModSymEngine {
public:
    explicit ModSymEngine(ModSymOptions opt = {}) : opt_(opt) {}

    ModSymOptions& options() { return opt_; }
    HeckePolyCache& cache() { return cache_; }

    const ManinSymbolSpace& space(long N);

    // char poly of T_ell on the full cuspidal +1 space (degree = genus)
    PolyZ cuspidal_charpoly(long N, long ell);

    // char poly of T_ell on the new subspace, by exact division across divisors;
    // requires gcd(ell, N) = 1. Uses the cache for out-of-budget levels.
    PolyZ new_charpoly(long N, long ell);

    // Galois-orbit degree multiset: factor new_charpoly at several good primes
    // and take the stable coarsest partition
    std::vector<long> class_degrees(long N, int n_primes = 5);

private:
    ModSymOptions opt_;
    HeckePolyCache cache_;
    std::map<long, std::unique_ptr<ManinSymbolSpace>> spaces_;
};

}  // namespace trisum

#endif
