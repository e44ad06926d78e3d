#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gperm/rational.hpp"

namespace gperm {

using Composition = std::vector<int>;
/// One-line notation w(1),...,w(n) with 1-based images.
using Permutation = std::vector<int>;
/// Subsets of [n] as bitmasks; bit i-1 stands for element i.
using Mask = std::uint32_t;

Integer factorial(unsigned n);
/// Zero outside 0 <= k <= n.
Integer binomial(long n, long k);
Integer catalan(unsigned n);
Integer multinomial(const std::vector<int>& parts);
/// y (y+1) ... (y+a-1); equals 1 for a = 0.
Rational rising_factorial(const Rational& y, unsigned a);

/// All compositions of `total` into `parts` nonnegative parts, lexicographically descending.
std::vector<Composition> compositions_of(int total, int parts);
void for_each_composition(int total, int parts, const std::function<void(const Composition&)>& fn);

bool is_permutation(const Permutation& w);
/// Visits S_n in lexicographic order of one-line notation.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn);
Permutation identity_permutation(int n);

/// Positions i in [n-1] with w(i) > w(i+1), ascending.
std::vector<int> descent_set(const Permutation& w);
Mask descent_mask(const Permutation& w);
/// Number of permutations of S_n whose descent set is exactly I.
Integer descent_count(int n, const std::vector<int>& I);

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask full_mask(int n) { return n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1; }
Mask mask_of(const std::vector<int>& elements);
std::vector<int> elements_of(Mask m);
inline int min_element_of(Mask m) { return __builtin_ctz(m) + 1; }
inline int max_element_of(Mask m) { return 32 - __builtin_clz(m); }

}  // namespace gperm
