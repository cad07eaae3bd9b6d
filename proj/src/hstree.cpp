#include "mbd/hstree.hpp"

#include <algorithm>

#include "mbd/conflicts.hpp"
#include "mbd/direct.hpp"
#include "mbd/errors.hpp"

namespace mbd {

const char* to_string(TreeMode m) { return m == TreeMode::Classic ? "classic" : "inverse"; }

const char* to_string(NodeKind k) {
    switch (k) {
    case NodeKind::Open: return "open";
    case NodeKind::Labeled: return "labeled";
    case NodeKind::Diagnosis: return "diagnosis";
    case NodeKind::Closed: return "closed";
    case NodeKind::Pruned: return "pruned";
    }
    return "?";
}

HSTree::HSTree(TreeMode mode, TreeLimits limits) : mode_(mode), limits_(limits) {}

int HSTree::make_node(int parent, AxiomSet path, AxiomId edge) {
    TreeNode nd;
    nd.path = std::move(path);
    nd.parent = parent;
    nd.edge = edge;
    nd.depth = parent < 0 ? 0 : nodes_[static_cast<std::size_t>(parent)].depth + 1;
    nd.seq = seq_++;
    nodes_.push_back(std::move(nd));
    ++alive_;
    ++stats_.nodes_created;
    int id = static_cast<int>(nodes_.size() - 1);
    enqueue(id);
    return id;
}

void HSTree::enqueue(int id) {
    const auto& nd = nodes_[static_cast<std::size_t>(id)];
    queue_.emplace(nd.depth, nd.seq, id);
}

void HSTree::dequeue(int id) {
    const auto& nd = nodes_[static_cast<std::size_t>(id)];
    queue_.erase({nd.depth, nd.seq, id});
}

void HSTree::reopen(int id) {
    auto& nd = nodes_[static_cast<std::size_t>(id)];
    if (nd.kind == NodeKind::Diagnosis) emitted_.erase(std::remove(emitted_.begin(), emitted_.end(), id), emitted_.end());
    if (auto it = by_path_.find(nd.path); it != by_path_.end() && it->second == id) by_path_.erase(it);
    for (int c : nd.children) delete_subtree(c);
    nd.children.clear();
    nd.kind = NodeKind::Open;
    nd.label = -1;
    nd.reused = false;
    enqueue(id);
}

void HSTree::delete_subtree(int id) {
    auto& nd = nodes_[static_cast<std::size_t>(id)];
    if (!nd.alive) return;
    for (int c : nd.children) delete_subtree(c);
    if (nd.kind == NodeKind::Open) dequeue(id);
    if (nd.kind == NodeKind::Diagnosis) emitted_.erase(std::remove(emitted_.begin(), emitted_.end(), id), emitted_.end());
    if (auto it = by_path_.find(nd.path); it != by_path_.end() && it->second == id) by_path_.erase(it);
    nd.alive = false;
    nd.children.clear();
    --alive_;
}

void HSTree::expand(int id) {
    const AxiomSet label = pool_[static_cast<std::size_t>(nodes_[static_cast<std::size_t>(id)].label)].set;
    for (AxiomId e : label.ids()) {
        AxiomSet path = nodes_[static_cast<std::size_t>(id)].path;
        path.insert(e);
        int child = make_node(id, std::move(path), e);
        nodes_[static_cast<std::size_t>(id)].children.push_back(child);
    }
}

bool HSTree::prune(int id) {
    const auto& nd = nodes_[static_cast<std::size_t>(id)];
    if (by_path_.count(nd.path)) return true;
    const NodeKind terminal = mode_ == TreeMode::Classic ? NodeKind::Diagnosis : NodeKind::Closed;
    for (const auto& other : nodes_) {
        if (other.alive && other.kind == terminal && other.path.is_subset_of(nd.path)) return true;
    }
    return false;
}

int HSTree::reuse(RequirementChecker& checker, int id) {
    const auto& nd = nodes_[static_cast<std::size_t>(id)];
    for (std::size_t i = 0; i < pool_.size(); ++i) {
        const auto& e = pool_[i];
        if (!e.live || e.set.intersects(nd.path)) continue;
        // Acquired test cases may have invalidated a stored diagnosis.
        if (mode_ == TreeMode::Inverse && !checker.is_valid_diagnosis(e.set)) continue;
        return static_cast<int>(i);
    }
    return -1;
}

void HSTree::process(RequirementChecker& checker, int id) {
    if (prune(id)) {
        nodes_[static_cast<std::size_t>(id)].kind = NodeKind::Pruned;
        return;
    }

    const AxiomSet path = nodes_[static_cast<std::size_t>(id)].path;
    int label = reuse(checker, id);
    bool reused = label >= 0;
    if (reused) {
        ++stats_.label_reuses;
    } else if (mode_ == TreeMode::Classic) {
        ++stats_.quick_xplain_calls;
        auto out = quick_xplain(checker, path.complement());
        if (std::holds_alternative<NoConflict>(out)) {
            nodes_[static_cast<std::size_t>(id)].kind = NodeKind::Diagnosis;
            by_path_.emplace(path, id);
            emitted_.push_back(id);
            return;
        }
        pool_.push_back({std::get<ConflictSet>(out).axioms, true});
        label = static_cast<int>(pool_.size() - 1);
    } else {
        if (!checker.holds(path)) {
            nodes_[static_cast<std::size_t>(id)].kind = NodeKind::Closed;
            by_path_.emplace(path, id);
            return;
        }
        ++stats_.inv_quick_xplain_calls;
        auto out = inv_quick_xplain(checker, path);
        AxiomSet d = std::holds_alternative<Diagnosis>(out) ? std::get<Diagnosis>(out).axioms : AxiomSet(path.universe());
        pool_.push_back({std::move(d), true});
        label = static_cast<int>(pool_.size() - 1);
    }

    auto& nd = nodes_[static_cast<std::size_t>(id)];
    nd.kind = NodeKind::Labeled;
    nd.label = label;
    nd.reused = reused;
    by_path_.emplace(path, id);
    expand(id);
}

std::size_t HSTree::stored_labels() const {
    return static_cast<std::size_t>(std::count_if(pool_.begin(), pool_.end(), [](const PoolEntry& e) { return e.live; }));
}

std::size_t HSTree::result_count() const {
    return mode_ == TreeMode::Classic ? emitted_.size() : stored_labels();
}

void HSTree::note_stats() {
    stats_.max_alive_nodes = std::max(stats_.max_alive_nodes, alive_);
    stats_.max_frontier = std::max(stats_.max_frontier, queue_.size());
    stats_.max_stored_labels = std::max(stats_.max_stored_labels, stored_labels());
}

TreeOutcome HSTree::compute(RequirementChecker& checker, std::size_t n) {
    if (!started_) {
        started_ = true;
        make_node(-1, checker.problem().no_axioms(), 0);
    }
    const auto start = std::chrono::steady_clock::now();
    TreeOutcome out;
    while (result_count() < n && !queue_.empty()) {
        if (alive_ >= limits_.max_nodes) {
            out.complete = false;
            break;
        }
        if (limits_.max_seconds > 0) {
            std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
            if (spent.count() > limits_.max_seconds) {
                out.complete = false;
                break;
            }
        }
        int id = std::get<2>(*queue_.begin());
        queue_.erase(queue_.begin());
        process(checker, id);
        note_stats();
    }
    out.diagnoses = diagnoses();
    if (out.diagnoses.size() > n) out.diagnoses.resize(n);
    return out;
}

void HSTree::update(RequirementChecker& checker) {
    if (!started_) return;
    if (mode_ == TreeMode::Classic) {
        for (std::size_t i = 0; i < pool_.size(); ++i) {
            AxiomSet label = pool_[i].set;
            bool stale = false;
            for (AxiomId e : label.ids()) {
                AxiomSet smaller = label;
                smaller.erase(e);
                if (checker.is_conflict(smaller)) {
                    stale = true;
                    break;
                }
            }
            if (!stale) continue;
            ++stats_.quick_xplain_calls;
            AxiomSet fresh = std::get<ConflictSet>(quick_xplain(checker, label)).axioms;
            pool_[i].set = fresh;
            for (std::size_t id = 0; id < nodes_.size(); ++id) {
                auto& nd = nodes_[id];
                if (!nd.alive || nd.label != static_cast<int>(i)) continue;
                std::vector<int> keep;
                for (int c : nd.children) {
                    if (fresh.contains(nodes_[static_cast<std::size_t>(c)].edge)) keep.push_back(c);
                    else delete_subtree(c);
                }
                nodes_[id].children = std::move(keep);
            }
        }
        for (std::size_t id = 0; id < nodes_.size(); ++id) {
            const auto& nd = nodes_[id];
            if (!nd.alive) continue;
            if (nd.kind == NodeKind::Diagnosis && !checker.is_valid_diagnosis(nd.path)) reopen(static_cast<int>(id));
        }
    } else {
        for (std::size_t i = 0; i < pool_.size(); ++i) {
            if (!pool_[i].live || checker.is_valid_diagnosis(pool_[i].set)) continue;
            pool_[i].live = false;
            for (std::size_t id = 0; id < nodes_.size(); ++id) {
                const auto& nd = nodes_[id];
                if (nd.alive && nd.label == static_cast<int>(i)) reopen(static_cast<int>(id));
            }
        }
    }
    for (std::size_t id = 0; id < nodes_.size(); ++id) {
        const auto& nd = nodes_[id];
        if (nd.alive && nd.kind == NodeKind::Pruned) reopen(static_cast<int>(id));
    }
    note_stats();
}

std::vector<AxiomSet> HSTree::diagnoses() const {
    std::vector<AxiomSet> out;
    if (mode_ == TreeMode::Classic) {
        for (int id : emitted_) out.push_back(nodes_[static_cast<std::size_t>(id)].path);
    } else {
        for (const auto& e : pool_)
            if (e.live) out.push_back(e.set);
    }
    return out;
}

}  // namespace mbd
