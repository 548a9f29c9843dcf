#ifndef TRISUM_TATE_HPP
#define TRISUM_TATE_HPP

#include "trisum/weierstrass.hpp"

namespace trisum {

enum class Kodaira { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar };

std::string kodaira_str(Kodaira k, long n);

struct ReductionData {
    Integer p;
    Kodaira type = Kodaira::I0;
    long n = 0;         // index for In / In*
    long f = 0;         // conductor exponent
    long v_disc = 0;    // valuation of the minimal discriminant at p
    long components = 0;  // component count m of the special fiber (Ogg: v = f + m - 1)
    bool split = false;   // split multiplicative (type In only)

    bool good() const { return f == 0; }
    bool multiplicative() const { return f == 1; }
    bool additive() const { return f >= 2; }
};

// Tate's algorithm at p on an integral model.
// Loops through the non-minimal case (u = p rescaling) until minimal.
ReductionData tate_reduction(const WeierstrassModel& E, const Integer& p);

// global minimal model (Laska-Kraus-Connell via c4/c6 rescaling)
WeierstrassModel minimal_model(const WeierstrassModel& E);

// conductor of a nonsingular model with rational coefficients
Integer conductor(const WeierstrassModel& E);

}  // namespace trisum

#endif
