#pragma once

#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "linkclust/corpus.hpp"
#include "linkclust/preprocess.hpp"
#include "linkclust/seeding.hpp"
#include "linkclust/sparse_vector.hpp"

namespace linkclust {

struct ClusterParams {
    double alpha = 0.5;  // cosine threshold for joining an existing centroid
    int max_passes = 1;  // extra passes re-assign every doc to its nearest centroid
};

enum class CentroidOrigin { seed, spawned };

struct Centroid {
    int id = 0;
    CentroidOrigin origin = CentroidOrigin::seed;
    SparseVector vec;          // unit norm
    std::vector<int> members;  // ascending doc_ids
};

struct CentroidSet {
    std::vector<Centroid> centroids;
};

struct ClusteringResult {
    struct Cluster {
        int centroid_id = 0;
        CentroidOrigin origin = CentroidOrigin::seed;
        std::vector<int> members;  // ascending doc_ids, size >= 2
    };

    std::vector<Cluster> clusters;
    std::set<int> miscellaneous;  // dissolved singletons and empty-vector docs
    // doc_id -> index into clusters, or -1 for miscellaneous
    std::vector<int> assignment;
    // doc_id -> similarity at assignment time (clustered docs only; seed
    // members carry their cosine against the initial seed centroid)
    std::unordered_map<int, double> similarity;
};

// Eq.-style cosine: dot over shared terms divided by the norm product.
// Throws on empty vectors; callers route those to miscellaneous instead.
double cosine_similarity(const SparseVector& a, const SparseVector& b);

// Recomputes the centroid vector as the normalized sum of all current member
// vectors (empty-vector members are skipped).
void update_centroid(Centroid& centroid, const std::vector<SparseVector>& vectors);

struct AssignmentOutcome {
    CentroidSet centroids;  // surviving centroids, singletons dissolved
    ClusteringResult result;
};

// Threshold-gated assignment of unseeded documents to the current centroid
// set, spawning a new centroid from any document whose best similarity is
// below alpha. Seed-group members are pre-assigned and skipped. Singleton
// clusters are dissolved into miscellaneous at the end.
AssignmentOutcome assign_documents(const std::vector<SparseVector>& vectors,
                                   const SeedCentroids& seeds, const ClusterParams& params);

struct LinkedClusteringOutput {
    ClusteringResult result;
    CentroidSet centroids;
    SeedGroups seed_groups;
    Vocabulary vocab;
    std::vector<SparseVector> vectors;
    int k_seed = 0;
    int expansion_rounds = 0;

    int k_final() const { return static_cast<int>(centroids.centroids.size()); }
};

// Full pipeline: preprocess -> link-based seeding -> cosine assignment.
LinkedClusteringOutput run_linked_kmeans(const Corpus& corpus, const ClusterParams& params = {},
                                         const Stoplist& stoplist = default_stopwords());

// Checks the partition contract, centroid norms and the threshold contract;
// returns a list of violations (empty when the result is consistent).
std::vector<std::string> check_clustering_invariants(const ClusteringResult& result,
                                                     const CentroidSet& centroids,
                                                     const SeedGroups& seed_groups, int n,
                                                     double alpha);

}  // namespace linkclust
