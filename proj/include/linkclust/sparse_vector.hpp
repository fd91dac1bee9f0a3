#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace linkclust {

// Sparse term-weight vector over dense term ids. Entries are kept sorted by
// term id, explicit zeros are never stored, and the L2 norm is cached at
// construction. A vector with no entries is the "empty" degenerate case that
// downstream code routes to the miscellaneous group.
class SparseVector {
public:
    using Entry = std::pair<int, double>;

    SparseVector() = default;

    // Builds from (term_id, weight) pairs in any order. Zero weights are
    // dropped; negative weights or duplicate term ids are rejected.
    static SparseVector from_entries(std::vector<Entry> entries);

    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    double norm() const { return norm_; }
    const std::vector<Entry>& entries() const { return entries_; }

    // Dot product over shared term ids.
    double dot(const SparseVector& other) const;

    // Max term id + 1, or 0 for the empty vector.
    int dimension() const;

private:
    std::vector<Entry> entries_;
    double norm_ = 0.0;
};

// Scales to unit L2 norm. The zero/empty vector stays empty (flag, not error).
SparseVector l2_normalize(const SparseVector& v);

// Entry-wise sum of the given vectors.
SparseVector sparse_sum(const std::vector<const SparseVector*>& vs);

}  // namespace linkclust
