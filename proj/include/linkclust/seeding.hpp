#pragma once

#include <set>
#include <vector>

#include "linkclust/corpus.hpp"
#include "linkclust/sparse_vector.hpp"

namespace linkclust {

// Per-page search state: the page's reach list (pages it is known to be
// connected to) and its current promising page. The page itself is never in
// its own reach list.
struct AgentState {
    int page = 0;
    int promising = 0;  // initially the page itself
    std::set<int> reach_list;
};

// Disjoint groups of linked documents produced by the heuristic phase. Every
// group has at least two members and at least one internal edge; documents in
// no group are unseeded and get cosine-assigned later.
struct SeedGroups {
    std::vector<std::vector<int>> groups;  // sorted members, ordered by least member
    std::set<int> unseeded;

    int k() const { return static_cast<int>(groups.size()); }
};

struct Fixpoint {
    std::vector<AgentState> agents;
    int rounds = 0;  // full passes until no list changed
};

struct SeedCentroids {
    SeedGroups groups;                   // after dissolving all-empty groups
    std::vector<SparseVector> centroids; // unit vectors, aligned with groups
};

// One agent per page; reach list = undirected neighborhood, promising = self.
std::vector<AgentState> init_agents(const LinkAdjacency& adj);

// The member of the agent's reach list with the largest own reach list, ties
// to the lowest doc_id; the page itself when the list is empty.
int select_promising(const AgentState& agent, const std::vector<AgentState>& all_agents);

// Round-based expansion in doc_id order: re-select promising, then absorb its
// reach list, until a full round changes nothing. At the fixpoint each
// nonempty reach list equals the page's connected component minus itself.
Fixpoint expand_to_fixpoint(std::vector<AgentState> agents);

// Merges pages whose reach lists intersect (or that appear in each other's
// lists) into groups; groups of size >= 2 become seed groups, isolated pages
// go to unseeded.
SeedGroups merge_groups(const std::vector<AgentState>& agents);

// Seed centroid = L2-normalized sum of the member vectors, skipping members
// whose vectors are empty. A group with no usable vectors is dissolved and
// its members moved to unseeded.
SeedCentroids build_seed_centroids(const SeedGroups& groups,
                                   const std::vector<SparseVector>& vectors);

}  // namespace linkclust
