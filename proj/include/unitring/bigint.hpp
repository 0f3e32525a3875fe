#ifndef UNITRING_BIGINT_HPP
#define UNITRING_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace unitring {

// Exact signed integers for Z-coefficients. Regular-representation
// determinants overflow machine words already at modest group orders, so
// everything integer-valued in the library goes through this type.
using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

} // namespace unitring

#endif
