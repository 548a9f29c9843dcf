#ifndef TRISUM_POLYFACTOR_HPP
#define TRISUM_POLYFACTOR_HPP

#include "trisum/poly.hpp"
#include <vector>

namespace trisum {

struct PolyFactor {
    PolyZ factor;
    unsigned long multiplicity;
};

// Factor a monic polynomial in Z[t] into monic irreducibles.
// Cantor-Zassenhaus mod a good prime, linear Hensel lifting to the Mignotte
// bound, subset recombination. Intended for moderate degree (<= ~32).
std::vector<PolyFactor> factor_monic(const PolyZ& f);

// degrees of irreducible factors, with multiplicity, ascending
std::vector<long> factor_degrees(const PolyZ& f);

// Yun squarefree decomposition of a monic polynomial: list of (g_i, i) with
// f = prod g_i^i and the g_i squarefree, pairwise coprime.
std::vector<PolyFactor> squarefree_decomposition(const PolyZ& f);

}  // namespace trisum

#endif
