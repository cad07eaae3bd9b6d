#pragma once

// Exhaustive diagnoses and conflicts computed with the reference model
// enumerator, for instances without the coherency requirement.

#include <algorithm>
#include <map>

#include "mbd/problem.hpp"
#include "model_oracle.hpp"

namespace mbd::testing {

class ReferenceRequirements {
public:
    explicit ReferenceRequirements(const DiagnosisProblem& p) : p_(p), oracle_(make(p)) {}

    // B′ ∪ active satisfies the requirements.
    bool holds(const AxiomSet& active) {
        auto it = memo_.find(active.ids());
        if (it != memo_.end()) return it->second;
        auto kb = p_.background_prime();
        for (AxiomId id : active.ids()) kb.push_back(p_.ontology()[id].sentence);
        bool ok = oracle_.consistent(kb);
        for (const auto& n : p_.negative())
            if (ok && oracle_.entails(kb, n.sentences)) ok = false;
        memo_.emplace(active.ids(), ok);
        return ok;
    }

    std::vector<AxiomSet> minimal_diagnoses() {
        return minimal([&](const AxiomSet& d) { return holds(d.complement()); });
    }
    std::vector<AxiomSet> minimal_conflicts() {
        return minimal([&](const AxiomSet& c) { return !holds(c); });
    }

private:
    static ModelOracle make(const DiagnosisProblem& p) {
        const auto& sig = p.signature();
        return ModelOracle(std::vector<std::string>(sig.individuals.begin(), sig.individuals.end()), sig.classes,
                           sig.roles);
    }

    template <typename Pred>
    std::vector<AxiomSet> minimal(Pred member) {
        const std::size_t m = p_.size();
        std::vector<AxiomSet> members;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            AxiomSet s(m);
            for (std::size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1u) s.insert(i);
            if (member(s)) members.push_back(s);
        }
        std::vector<AxiomSet> out;
        for (const auto& s : members) {
            bool minimal = std::none_of(members.begin(), members.end(),
                                        [&](const AxiomSet& t) { return t != s && t.is_subset_of(s); });
            if (minimal) out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    DiagnosisProblem p_;
    ModelOracle oracle_;
    std::map<std::vector<AxiomId>, bool> memo_;
};

}  // namespace mbd::testing
