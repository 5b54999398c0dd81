#include "genusforge/partition.hpp"

#include "genusforge/numbers.hpp"

namespace genusforge {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        int p = parts_[i];
        if (p < 1) throw std::domain_error("Partition: parts must be positive");
        if (i > 0 && p > prev) throw std::domain_error("Partition: parts must be weakly decreasing");
        prev = p;
        sum_ += p;
    }
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& stack,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        stack.push_back(p);
        partitions_rec(remaining - p, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of: negative argument");
    std::vector<Partition> out;
    std::vector<int> stack;
    partitions_rec(n, n, stack, out);
    return out;
}

Int dimension(const Partition& shape) {
    int n = shape.sum();
    if (n == 0) return 1;
    // Conjugate column lengths give the leg of each cell's hook.
    std::vector<int> conj(static_cast<size_t>(shape.part(0)), 0);
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = 0; j < shape.part(i); ++j) ++conj[static_cast<size_t>(j)];
    Int hooks = 1;
    for (int i = 0; i < shape.rows(); ++i) {
        for (int j = 0; j < shape.part(i); ++j) {
            long arm = shape.part(i) - j - 1;
            long leg = conj[static_cast<size_t>(j)] - i - 1;
            hooks *= (arm + leg + 1);
        }
    }
    Int out = factorial(n);
    mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hooks.get_mpz_t());
    return out;
}

}  // namespace genusforge
