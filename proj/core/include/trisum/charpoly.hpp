#ifndef TRISUM_CHARPOLY_HPP
#define TRISUM_CHARPOLY_HPP

#include "trisum/matrix.hpp"
#include "trisum/poly.hpp"

namespace trisum {

// Exact characteristic polynomial det(t*I - M) of a square rational matrix.
//
// Strategy: clear denominators, run the Hessenberg charpoly over enough
// word-size prime fields to cover a Hadamard-style coefficient bound, and
// reconstruct by CRT with symmetric lifting. Monic of degree n.
PolyQ charpoly_exact(const MatQ& M, unsigned jobs = 1);

// charpoly of an integer matrix modulo a word-size prime (Hessenberg form)
std::vector<uint64_t> charpoly_mod(const std::vector<uint64_t>& flat, long n, uint64_t p);

}  // namespace trisum

#endif
