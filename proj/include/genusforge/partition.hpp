#pragma once

// Integer partitions as shapes of irreducible symmetric group representations,
// plus the hook length formula for dimensions.

#include "genusforge/exact.hpp"

#include <compare>
#include <vector>

namespace genusforge {

class Partition {
  public:
    Partition() = default;
    // Parts must be weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    int sum() const { return sum_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    const std::vector<int>& parts() const { return parts_; }

    // Hook shape (a, 1, 1, ..., 1): a single row plus a single column.
    bool is_hook() const { return rows() <= 1 || parts_[1] == 1; }

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
    int sum_ = 0;
};

// All partitions of n in reverse lexicographic order, (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

// Dimension of the irreducible representation with the given shape, by the
// hook length formula n! / prod(hooks).
Int dimension(const Partition& shape);

}  // namespace genusforge
