#include "trisum/newform.hpp"
#include "trisum/trace.hpp"
#include <fstream>
#include <sstream>

namespace trisum {

bool NewformClass::has(long ell) const {
    if (curve) return true;
    return eigen.count(ell) > 0;
}

PolyZ NewformClass::m_ell(long ell) const {
    auto it = eigen.find(ell);
    if (it != eigen.end()) return it->second;
    if (curve) {
        Integer a = ap_trace(*curve, Integer(ell));
        return PolyZ({-a, Integer(1)});
    }
    throw std::out_of_range("no eigenvalue data at ell=" + std::to_string(ell));
}

NewformClass newform_from_curve(const std::string& id, long level, const WeierstrassModel& E) {
    NewformClass f;
    f.id = id;
    f.level = level;
    f.degree = 1;
    f.curve = E;
    return f;
}

std::vector<NewformClass> read_newform_data(std::istream& in) {
    std::vector<NewformClass> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "class") {
            NewformClass f;
            std::string tok;
            while (ls >> tok) {
                if (tok.rfind("id=", 0) == 0) f.id = tok.substr(3);
                else if (tok.rfind("N=", 0) == 0) f.level = std::stol(tok.substr(2));
                else if (tok.rfind("d=", 0) == 0) f.degree = std::stol(tok.substr(2));
            }
            if (f.level < 1 || f.degree < 1)
                throw std::runtime_error("newform data: malformed class header");
            out.push_back(std::move(f));
        } else if (tag == "ap") {
            if (out.empty()) throw std::runtime_error("newform data: ap before class");
            long ell = -1;
            std::string coeffs;
            std::string tok;
            while (ls >> tok) {
                if (tok.rfind("ell=", 0) == 0) ell = std::stol(tok.substr(4));
                else if (tok.rfind("minpoly=", 0) == 0) coeffs = tok.substr(8);
            }
            if (ell < 2 || coeffs.empty())
                throw std::runtime_error("newform data: malformed ap record");
            PolyZ m = PolyZ::parse(coeffs);
            if (m.degree() != out.back().degree || !m.is_monic())
                throw std::runtime_error("newform data: minpoly degree/monic mismatch");
            out.back().eigen[ell] = std::move(m);
        }
    }
    return out;
}

std::vector<NewformClass> read_newform_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open newform data file: " + path);
    return read_newform_data(in);
}

void write_newform_data(std::ostream& out, const std::vector<NewformClass>& classes) {
    for (const auto& f : classes) {
        out << "class id=" << f.id << " N=" << f.level << " d=" << f.degree << "\n";
        for (const auto& [ell, m] : f.eigen)
            out << "ap ell=" << ell << " minpoly=" << m.csv() << "\n";
    }
}

}  // namespace trisum
