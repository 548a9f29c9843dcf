#ifndef TRISUM_FREY_HPP
#define TRISUM_FREY_HPP

#include "trisum/bipoly.hpp"
#include "trisum/poly.hpp"
#include "trisum/weierstrass.hpp"
#include <optional>
#include <string>
#include <vector>

namespace trisum {

// One-parameter Weierstrass family: coefficients are polynomials in x over Q.
struct FreyFamily {
    std::string name;
    PolyQ a1, a2, a3, a4, a6;
    long alpha = 0;        // 0 when the family does not carry an alpha
    bool requires_nonzero_x = true;
    std::string validity;  // human-readable constraint on x

    WeierstrassModel at(const Integer& x) const;
    bool valid_at(const Integer& x) const;
};

// symbolic invariants of a family (polynomials in x)
struct FamilyInvariants {
    PolyQ b2, b4, b6, b8, c4, c6, disc;
};
FamilyInvariants family_invariants(const FreyFamily& F);

// x = alpha^{p-1} z1^p, 3x^4 + 20x^2 + 10 = alpha z2^p, alpha = gcd(x, 10)
struct SplitData {
    long alpha;
    Integer z1, z2;
};

// Splits a solution of x(3x^4+20x^2+10) = z^p. Throws std::invalid_argument
// ("not a solution" / "split failure") when the preconditions fail.
SplitData alpha_split(const Integer& x, const Integer& z, const Integer& p);

// families attached to 7 a^{4p-5} z1^{4p} + z2^p = (10/a)(x^2+1)^2, per alpha
FreyFamily frey_k5_E_family(long alpha);
// family attached to 3 z2^p + 70/a = a ((3x^2+10)/a)^2 (model is alpha-free)
FreyFamily frey_k5_F_family(long alpha);
// the k = 6 curve; integral only for odd x
FreyFamily frey_k6_family();

// specializations with the validity checks of the construction
WeierstrassModel frey_k5_E(const Integer& x, long alpha);
WeierstrassModel frey_k5_F(const Integer& x, long alpha);
WeierstrassModel frey_k6(const Integer& x);

// Y^2 = X^3 - 3 H(u,v) X + G(u,v) from a homogeneous integer cubic F,
// H = -(1/4) det [[F_uu, F_uv],[F_uv, F_vv]], G = det [[F_u, F_v],[H_u, H_v]]
struct CubicRecipe {
    BiPolyQ F, H, G;
    // discriminant identity: disc(E') = 2^4 3^6 disc_F F^2 (checked on construction)
    Integer disc_F;
};
CubicRecipe bd_recipe(const BiPolyQ& F);

// the cubic 3u^3 + 30u^2v + 30uv^2 + 2v^3 behind the k = 6 construction
BiPolyQ k6_cubic();
// the sextic 3t^6 + 30t^4 + 30t^2 + 2
PolyZ k6_sextic();

// Verifies the multiplicative-reduction arithmetic at 3391:
// roots of c4(x) mod 3391, their membership in the sextic's roots, and the
// failure of both to lift modulo 3391^2.
struct Check3391 {
    std::vector<Integer> c4_roots;        // sorted roots of c4 mod 3391
    bool roots_are_sextic_roots = false;  // each root kills the sextic mod 3391
    bool no_lift = false;                 // neither lifts to a root mod 3391^2
};
Check3391 check_3391_multiplicative();

}  // namespace trisum

#endif
