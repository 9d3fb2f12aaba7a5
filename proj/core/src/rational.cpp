#include "charrel/rational.hpp"

#include <mutex>
#include <vector>

#include "charrel/errors.hpp"

namespace charrel {

BigInt factorial(int n) {
    if (n < 0) throw input_error("factorial of negative number");
    static std::mutex mu;
    static std::vector<BigInt> cache{1};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) cache.push_back(cache.back() * BigInt(cache.size()));
    return cache[static_cast<size_t>(n)];
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace charrel
