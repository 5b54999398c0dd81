#include "genusforge/numbers.hpp"

#include <mutex>
#include <vector>

namespace genusforge {

Int factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    static std::mutex mu;
    static std::vector<Int> table = {Int(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(table.size()) <= n) {
        long m = static_cast<long>(table.size());
        table.push_back(table.back() * m);
    }
    return table[static_cast<size_t>(n)];
}

Int double_factorial(long k) {
    if (k < -1) throw std::domain_error("double_factorial: argument below -1");
    Int out = 1;
    for (long m = k; m >= 2; m -= 2) out *= m;
    return out;
}

Int binomial(long a, long b) {
    if (b < 0) return 0;
    Int top(a);
    Int out;
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(b));
    return out;
}

Int stirling_cycle(long l, long v) {
    if (l < 0 || v < 0) throw std::domain_error("stirling_cycle: negative argument");
    if (v > l) return 0;
    static std::mutex mu;
    // table[m] is the row for l = m, indexed by cycle count v in [0, m].
    static std::vector<std::vector<Int>> table = {{Int(1)}};
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<long>(table.size()) <= l) {
        long m = static_cast<long>(table.size());
        const std::vector<Int>& prev = table.back();
        std::vector<Int> row(static_cast<size_t>(m) + 1, Int(0));
        for (long j = 1; j <= m; ++j) {
            Int val = prev[static_cast<size_t>(j - 1)];
            if (j < m) val += (m - 1) * prev[static_cast<size_t>(j)];
            row[static_cast<size_t>(j)] = val;
        }
        table.push_back(std::move(row));
    }
    return table[static_cast<size_t>(l)][static_cast<size_t>(v)];
}

Int catalan(long n) {
    if (n < 0) throw std::domain_error("catalan: negative argument");
    Int out = binomial(2 * n, n);
    Int div(n + 1);
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), div.get_mpz_t());
    return out;
}

}  // namespace genusforge
