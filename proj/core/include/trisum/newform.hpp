#ifndef TRISUM_NEWFORM_HPP
#define TRISUM_NEWFORM_HPP

#include "trisum/poly.hpp"
#include "trisum/weierstrass.hpp"
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trisum {

// Galois conjugacy class of newforms: level, degree, and per-prime monic
// integer polynomials m_ell(t) (the characteristic polynomial of the
// eigenvalue c_ell on the class).
struct NewformClass {
    std::string id;
    long level = 0;
    long degree = 1;
    std::map<long, PolyZ> eigen;                // ell -> m_ell(t)
    std::optional<WeierstrassModel> curve;      // rational class backed by a curve

    bool has(long ell) const;
    // m_ell(t); for curve-backed classes computed on demand as t - a_ell
    PolyZ m_ell(long ell) const;
};

NewformClass newform_from_curve(const std::string& id, long level, const WeierstrassModel& E);

// Ingestion format, one class per block:
//   class id=<s> N=<level> d=<deg>
//   ap ell=<prime> minpoly=<c0,...,c_d>
std::vector<NewformClass> read_newform_data(std::istream& in);
std::vector<NewformClass> read_newform_file(const std::string& path);
void write_newform_data(std::ostream& out, const std::vector<NewformClass>& classes);

}  // namespace trisum

#endif
