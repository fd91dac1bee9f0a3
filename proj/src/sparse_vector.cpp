#include "linkclust/sparse_vector.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace linkclust {

SparseVector SparseVector::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    v.entries_.reserve(entries.size());
    double sq = 0.0;
    int prev_id = -1;
    for (const auto& [id, w] : entries) {
        if (w < 0.0)
            throw std::invalid_argument("SparseVector: negative weight for term " +
                                        std::to_string(id));
        if (w == 0.0) continue;
        if (id == prev_id)
            throw std::invalid_argument("SparseVector: duplicate term id " + std::to_string(id));
        prev_id = id;
        v.entries_.emplace_back(id, w);
        sq += w * w;
    }
    v.norm_ = std::sqrt(sq);
    return v;
}

double SparseVector::dot(const SparseVector& other) const {
    double acc = 0.0;
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            acc += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return acc;
}

int SparseVector::dimension() const {
    return entries_.empty() ? 0 : entries_.back().first + 1;
}

SparseVector l2_normalize(const SparseVector& v) {
    if (v.empty() || v.norm() == 0.0) return SparseVector{};
    std::vector<SparseVector::Entry> scaled = v.entries();
    for (auto& [id, w] : scaled) w /= v.norm();
    return SparseVector::from_entries(std::move(scaled));
}

SparseVector sparse_sum(const std::vector<const SparseVector*>& vs) {
    std::map<int, double> acc;
    for (const SparseVector* v : vs)
        for (const auto& [id, w] : v->entries()) acc[id] += w;
    std::vector<SparseVector::Entry> entries(acc.begin(), acc.end());
    return SparseVector::from_entries(std::move(entries));
}

}  // namespace linkclust
