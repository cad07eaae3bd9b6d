#pragma once

#include <chrono>
#include <cstdint>
#include <set>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "mbd/problem.hpp"

namespace mbd {

enum class TreeMode { Classic, Inverse };

const char* to_string(TreeMode m);

struct TreeLimits {
    std::size_t max_nodes = 100000;  // live nodes
    double max_seconds = 0;          // per compute(); 0 = unbounded
};

struct TreeStats {
    std::uint64_t quick_xplain_calls = 0;
    std::uint64_t inv_quick_xplain_calls = 0;
    std::uint64_t label_reuses = 0;
    std::uint64_t nodes_created = 0;
    std::size_t max_alive_nodes = 0;
    std::size_t max_stored_labels = 0;  // live entries of the label pool
    std::size_t max_frontier = 0;
};

enum class NodeKind {
    Open,
    Labeled,    // carries a conflict (classic) or a diagnosis (inverse)
    Diagnosis,  // classic ✓: the path is a diagnosis
    Closed,     // inverse ✓: no diagnosis avoids the path
    Pruned,     // ×
};

const char* to_string(NodeKind k);

struct TreeNode {
    AxiomSet path;  // H(nd)
    std::size_t depth = 0;
    std::size_t seq = 0;  // creation order; fixes the breadth-first order
    NodeKind kind = NodeKind::Open;
    int label = -1;  // index into the label pool
    bool reused = false;
    int parent = -1;
    AxiomId edge = 0;  // label of the edge from the parent
    std::vector<int> children;
    bool alive = true;
};

struct TreeOutcome {
    std::vector<AxiomSet> diagnoses;
    bool complete = true;  // false when a node or time cap stopped the search
};

// Breadth-first hitting-set tree.
//
// Classic mode labels nodes with minimal conflicts computed by quick_xplain
// on O \ H; a node whose path is a diagnosis is marked ✓. Inverse mode labels
// nodes with minimal diagnoses computed by inv_quick_xplain with H trusted;
// a node is closed (✓) when B′ ∪ H already violates the requirements.
// Rules per node, in order: prune, reuse, compute.
class HSTree {
public:
    explicit HSTree(TreeMode mode, TreeLimits limits = {});

    // Expands the tree until n diagnoses are known or the queue runs dry.
    TreeOutcome compute(RequirementChecker& checker, std::size_t n);

    // Adjusts the tree after the problem behind `checker` acquired test
    // cases. Classic: stale ✓ nodes and all × nodes reopen, conflict labels
    // are re-minimized. Inverse: nodes with invalid diagnosis labels lose the
    // label and their subtree and go back to the queue; × nodes reopen.
    void update(RequirementChecker& checker);

    // Diagnoses known so far. Classic: ✓ paths in emission order. Inverse:
    // live labels in the order they were computed.
    std::vector<AxiomSet> diagnoses() const;

    TreeMode mode() const { return mode_; }
    const std::vector<TreeNode>& nodes() const { return nodes_; }
    const AxiomSet& label_set(int label) const { return pool_[static_cast<std::size_t>(label)].set; }
    bool label_live(int label) const { return pool_[static_cast<std::size_t>(label)].live; }
    std::size_t frontier() const { return queue_.size(); }
    std::size_t alive_nodes() const { return alive_; }
    std::size_t stored_labels() const;
    const TreeStats& stats() const { return stats_; }

private:
    struct PoolEntry {
        AxiomSet set;
        bool live = true;
    };
    using QueueKey = std::tuple<std::size_t, std::size_t, int>;  // depth, seq, node

    int make_node(int parent, AxiomSet path, AxiomId edge);
    void enqueue(int id);
    void dequeue(int id);
    void reopen(int id);
    void delete_subtree(int id);
    void expand(int id);
    void process(RequirementChecker& checker, int id);
    bool prune(int id);
    int reuse(RequirementChecker& checker, int id);
    void note_stats();
    std::size_t result_count() const;

    TreeMode mode_;
    TreeLimits limits_;
    std::vector<TreeNode> nodes_;
    std::vector<PoolEntry> pool_;
    std::set<QueueKey> queue_;
    std::unordered_map<AxiomSet, int, AxiomSetHash> by_path_;  // processed, non-pruned
    std::vector<int> emitted_;                                 // classic ✓ nodes
    std::size_t alive_ = 0;
    std::size_t seq_ = 0;
    bool started_ = false;
    TreeStats stats_;
};

}  // namespace mbd
