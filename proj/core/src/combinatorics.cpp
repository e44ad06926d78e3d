#include "gperm/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

#include "gperm/errors.hpp"

namespace gperm {

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer catalan(unsigned n) { return binomial(2L * n, n) / (n + 1); }

Integer multinomial(const std::vector<int>& parts) {
    Integer r = 1;
    long total = 0;
    for (int p : parts) {
        require_domain(p >= 0, "multinomial: negative part");
        total += p;
        r *= binomial(total, p);
    }
    return r;
}

Rational rising_factorial(const Rational& y, unsigned a) {
    Rational r(1);
    for (unsigned i = 0; i < a; ++i) r *= y + Rational(static_cast<long>(i));
    return r;
}

static void compositions_rec(Composition& c, int pos, int left, const std::function<void(const Composition&)>& fn) {
    if (pos + 1 == static_cast<int>(c.size())) {
        c[pos] = left;
        fn(c);
        return;
    }
    for (int v = left; v >= 0; --v) {
        c[pos] = v;
        compositions_rec(c, pos + 1, left - v, fn);
    }
}

void for_each_composition(int total, int parts, const std::function<void(const Composition&)>& fn) {
    require_domain(total >= 0 && parts >= 1, "compositions: need total >= 0 and parts >= 1");
    Composition c(parts, 0);
    compositions_rec(c, 0, total, fn);
}

std::vector<Composition> compositions_of(int total, int parts) {
    std::vector<Composition> out;
    for_each_composition(total, parts, [&](const Composition& c) { out.push_back(c); });
    return out;
}

bool is_permutation(const Permutation& w) {
    std::vector<char> seen(w.size() + 1, 0);
    for (int v : w) {
        if (v < 1 || v > static_cast<int>(w.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Permutation identity_permutation(int n) {
    Permutation w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
    Permutation w = identity_permutation(n);
    do {
        fn(w);
    } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<int> descent_set(const Permutation& w) {
    std::vector<int> d;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return d;
}

Mask descent_mask(const Permutation& w) {
    Mask m = 0;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) m |= Mask(1) << i;
    return m;
}

Mask mask_of(const std::vector<int>& elements) {
    Mask m = 0;
    for (int e : elements) {
        require_domain(e >= 1 && e <= 32, "subset element out of range");
        m |= Mask(1) << (e - 1);
    }
    return m;
}

std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    for (int i = 0; m; ++i, m >>= 1)
        if (m & 1u) out.push_back(i + 1);
    return out;
}

namespace {

constexpr int kExhaustiveMax = 10;

const std::vector<std::uint64_t>& descent_histogram(int n) {
    static std::array<std::vector<std::uint64_t>, kExhaustiveMax + 1> cache;
    static std::array<std::once_flag, kExhaustiveMax + 1> flags;
    std::call_once(flags[n], [n] {
        std::vector<std::uint64_t> h(std::size_t(1) << std::max(n - 1, 0), 0);
        for_each_permutation(n, [&](const Permutation& w) { ++h[descent_mask(w)]; });
        cache[n] = std::move(h);
    });
    return cache[n];
}

}  // namespace

Integer descent_count(int n, const std::vector<int>& I) {
    require_domain(n >= 1, "descent_count: n must be positive");
    for (int i : I) require_domain(i >= 1 && i <= n - 1, "descent position outside [n-1]");
    std::vector<int> s = I;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (n <= kExhaustiveMax) return Integer(static_cast<unsigned long>(descent_histogram(n)[mask_of(s)]));

    // beta(S) = sum_{T subset S} (-1)^{|S-T|} alpha(T), alpha(T) a multinomial over the gaps of T.
    Integer total = 0;
    const int k = static_cast<int>(s.size());
    for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << k); ++sub) {
        std::vector<int> gaps;
        int prev = 0;
        for (int b = 0; b < k; ++b) {
            if (sub >> b & 1u) {
                gaps.push_back(s[b] - prev);
                prev = s[b];
            }
        }
        gaps.push_back(n - prev);
        Integer a = multinomial(gaps);
        if ((k - __builtin_popcountll(sub)) % 2) total -= a;
        else total += a;
    }
    return total;
}

}  // namespace gperm
