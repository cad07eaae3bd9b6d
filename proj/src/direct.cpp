#include "mbd/direct.hpp"

namespace mbd {

namespace {

struct Search {
    RequirementChecker& checker;
    DirectTrace* trace;
    AxiomSet all;

    // verifyRequirements for the candidate d: B′ ∪ (O \ d) must hold.
    bool valid(const AxiomSet& d) {
        if (trace) ++trace->checks;
        return checker.holds(all - d);
    }

    AxiomSet find(const AxiomSet& d, bool delta_nonempty, const std::vector<AxiomId>& cand, std::size_t depth) {
        if (trace && depth > trace->max_depth) trace->max_depth = depth;
        if (delta_nonempty && valid(d)) return AxiomSet(all.universe());
        if (cand.size() == 1) return AxiomSet::of(all.universe(), cand);

        const std::size_t k = cand.size() / 2;
        std::vector<AxiomId> o1(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<AxiomId> o2(cand.begin() + static_cast<std::ptrdiff_t>(k), cand.end());
        AxiomSet s1 = AxiomSet::of(all.universe(), o1);
        if (trace) trace->splits.emplace_back(s1, AxiomSet::of(all.universe(), o2));

        AxiomSet d2 = find(d | s1, !o1.empty(), o2, depth + 1);
        AxiomSet d1 = find(d | d2, !d2.empty(), o1, depth + 1);
        return d1 | d2;
    }
};

}  // namespace

DirectOutcome inv_quick_xplain(RequirementChecker& checker, const AxiomSet& trusted, DirectTrace* trace) {
    Search s{checker, trace, checker.problem().all_axioms()};
    if (trace) ++trace->checks;
    if (!checker.holds(trusted)) return InconsistentRequirements{};
    if (trace) ++trace->checks;
    if (checker.holds(s.all)) return Consistent{};
    AxiomSet d = s.find(AxiomSet(s.all.universe()), false, (s.all - trusted).ids(), 1);
    return Diagnosis{d, true};
}

DirectOutcome inv_quick_xplain(RequirementChecker& checker, DirectTrace* trace) {
    return inv_quick_xplain(checker, checker.problem().no_axioms(), trace);
}

}  // namespace mbd
