#ifndef TRISUM_ERRORS_HPP
#define TRISUM_ERRORS_HPP

#include <stdexcept>

namespace trisum {

// level/prime beyond the configured computation budget; the caller should
// point at the cache-ingestion path
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace trisum

#endif
