#ifndef TRISUM_TRACE_HPP
#define TRISUM_TRACE_HPP

#include "trisum/tate.hpp"
#include <map>
#include <shared_mutex>
#include <string>

namespace trisum {

// a_ell = ell + 1 - #E(F_ell) for good reduction (naive counting);
// +-1 for split/nonsplit multiplicative; 0 for additive.
// ell must stay within the counting budget.
Integer ap_trace(const WeierstrassModel& E, const Integer& ell, long budget = 100000);

// canonical identifier: minimal-model coefficients joined by commas
std::string model_hash(const WeierstrassModel& E);

// Persistent a_ell cache; concurrent reads, serialized writes.
// File format: one record per line, `trace <model-hash> <ell> <a_ell>`.
class TraceTable {
public:
    TraceTable() = default;

    void load(const std::string& path);
    void save(const std::string& path) const;

    Integer get_or_compute(const WeierstrassModel& E, const Integer& ell, long budget = 100000);
    size_t size() const;

private:
    mutable std::shared_mutex mu_;
    std::map<std::pair<std::string, Integer>, Integer> tab_;
};

}  // namespace trisum

#endif
