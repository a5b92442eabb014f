#include "teachdim/counting.hpp"

#include <vector>

namespace teachdim {

BigInt count_pref_relations(int m) {
    if (m < 1) throw InputError("count_pref_relations needs m >= 1");
    // Splitting each composition (t1, ..., tk) on t1 = j turns the double
    // sum into a(m) = sum_j C(m, j) * a(m - j), with a(0) = 1: choosing the
    // j hypotheses of the top preference block carries the multinomial.
    std::vector<BigInt> a(static_cast<std::size_t>(m) + 1);
    a[0] = 1;
    for (int i = 1; i <= m; ++i) {
        BigInt binom = 1;  // C(i, j) built incrementally
        BigInt total = 0;
        for (int j = 1; j <= i; ++j) {
            binom = binom * (i - j + 1) / j;
            total += binom * a[static_cast<std::size_t>(i - j)];
        }
        a[static_cast<std::size_t>(i)] = total;
    }
    return a[static_cast<std::size_t>(m)];
}

long powerset_td_lower_bound(long d) {
    if (d < 1) throw InputError("powerset_td_lower_bound needs d >= 1");
    BigInt bound = BigInt(1) << d;  // 2^d, the number of hypotheses
    const BigInt base = 2 * BigInt(d);
    BigInt power = 1;
    long exponent = 0;
    while (power <= bound) {
        power *= base;
        ++exponent;
    }
    return exponent - 1;  // smallest k with (2d)^(k+1) > 2^d
}

}  // namespace teachdim
