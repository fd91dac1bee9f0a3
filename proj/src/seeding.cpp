#include "linkclust/seeding.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace linkclust {

std::vector<AgentState> init_agents(const LinkAdjacency& adj) {
    const auto neighbors = adj.undirected_neighbors();
    std::vector<AgentState> agents(static_cast<std::size_t>(adj.n));
    for (int i = 0; i < adj.n; ++i) {
        auto& a = agents[static_cast<std::size_t>(i)];
        a.page = i;
        a.promising = i;
        a.reach_list.insert(neighbors[static_cast<std::size_t>(i)].begin(),
                            neighbors[static_cast<std::size_t>(i)].end());
    }
    return agents;
}

int select_promising(const AgentState& agent, const std::vector<AgentState>& all_agents) {
    if (agent.reach_list.empty()) return agent.page;
    int best = -1;
    std::size_t best_size = 0;
    for (int j : agent.reach_list) {
        std::size_t size = all_agents[static_cast<std::size_t>(j)].reach_list.size();
        if (best < 0 || size > best_size) {  // ties keep the lowest doc_id
            best = j;
            best_size = size;
        }
    }
    return best;
}

Fixpoint expand_to_fixpoint(std::vector<AgentState> agents) {
    Fixpoint fp;
    bool changed = true;
    while (changed) {
        changed = false;
        ++fp.rounds;
        for (auto& agent : agents) {
            agent.promising = select_promising(agent, agents);
            if (agent.promising == agent.page) continue;
            const auto& promising_list =
                agents[static_cast<std::size_t>(agent.promising)].reach_list;
            std::size_t before = agent.reach_list.size();
            agent.reach_list.insert(promising_list.begin(), promising_list.end());
            agent.reach_list.erase(agent.page);
            if (agent.reach_list.size() != before) changed = true;
        }
    }
    --fp.rounds;  // the final quiet round only confirms the fixpoint
    fp.agents = std::move(agents);
    return fp;
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

SeedGroups merge_groups(const std::vector<AgentState>& agents) {
    const std::size_t n = agents.size();
    UnionFind uf(n);
    // i' in reach(i) merges i with i'; a shared element merges both owners
    // with it, which closes the intersection condition transitively.
    for (const auto& agent : agents)
        for (int j : agent.reach_list) uf.unite(static_cast<std::size_t>(agent.page),
                                                static_cast<std::size_t>(j));

    std::map<std::size_t, std::vector<int>> by_root;
    for (std::size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(static_cast<int>(i));

    SeedGroups out;
    for (auto& [root, members] : by_root) {
        if (members.size() >= 2)
            out.groups.push_back(std::move(members));
        else
            out.unseeded.insert(members.front());
    }
    std::sort(out.groups.begin(), out.groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

SeedCentroids build_seed_centroids(const SeedGroups& groups,
                                   const std::vector<SparseVector>& vectors) {
    SeedCentroids out;
    out.groups.unseeded = groups.unseeded;
    for (const auto& members : groups.groups) {
        std::vector<const SparseVector*> usable;
        for (int doc : members) {
            const auto& v = vectors[static_cast<std::size_t>(doc)];
            if (!v.empty()) usable.push_back(&v);
        }
        if (usable.empty()) {
            out.groups.unseeded.insert(members.begin(), members.end());
            continue;
        }
        out.groups.groups.push_back(members);
        out.centroids.push_back(l2_normalize(sparse_sum(usable)));
    }
    return out;
}

}  // namespace linkclust
