#ifndef TRISUM_CONFIG_HPP
#define TRISUM_CONFIG_HPP

#include <string>
#include <vector>

namespace trisum {

// Flat key=value run configuration; CLI flags override file entries.
struct RunConfig {
    long level_budget = 2000;
    long count_budget = 100000;  // point-counting prime bound
    long ell_lo = 11, ell_hi = 100;
    std::vector<long> moduli;          // empty = default sieve moduli
    long thue_bound = 10000;
    long point_bound = 1000000;
    long generator_s_bound = 100000;
    std::string trace_cache;
    std::string hecke_cache;
    std::string newform_data;
    bool printed_variant = false;  // C'(ell-1) variant of the k=6 bound
    unsigned jobs = 1;
    std::string json_path;

    static RunConfig from_file(const std::string& path);
    void set(const std::string& key, const std::string& value);
};

}  // namespace trisum

#endif
