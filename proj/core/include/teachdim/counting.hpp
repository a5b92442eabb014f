#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "teachdim/errors.hpp"

namespace teachdim {

using BigInt = boost::multiprecision::cpp_int;

// Number of weak orders (preference relations) on m hypotheses: the double
// sum over ordered compositions t1+...+tk = m of the multinomial
// coefficients (m; t1,...,tk), evaluated in exact big integers by grouping
// compositions by their leading block.
BigInt count_pref_relations(int m);

// Smallest k with (2d)^(k+1) > 2^d, in exact integer arithmetic. Every
// collusion-free sigma on the powerset class of size d has TD(sigma) >= k:
// there are fewer than (2d)^(k+1) teaching sequences of length <= k, and
// distinct hypotheses need distinct sequences.
long powerset_td_lower_bound(long d);

}  // namespace teachdim
