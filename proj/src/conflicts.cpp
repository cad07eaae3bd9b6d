#include "mbd/conflicts.hpp"

#include <algorithm>
#include <memory>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mbd/errors.hpp"

namespace mbd {

namespace {

class Counted {
public:
    Counted(RequirementChecker& c, ConflictStats* s) : checker_(c), stats_(s) {}
    bool holds(const AxiomSet& active) {
        if (stats_) ++stats_->checks;
        return checker_.holds(active);
    }

private:
    RequirementChecker& checker_;
    ConflictStats* stats_;
};

// Junker's recursion: `base` holds the axioms assumed present, `delta` the
// last addition, `cand` the ordered candidates still to be explained.
AxiomSet qxp(Counted& q, const AxiomSet& base, bool delta_nonempty, const std::vector<AxiomId>& cand) {
    const std::size_t universe = base.universe();
    if (delta_nonempty && !q.holds(base)) return AxiomSet(universe);
    if (cand.size() == 1) return AxiomSet::of(universe, cand);

    const std::size_t k = (cand.size() + 1) / 2;
    std::vector<AxiomId> c1(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<AxiomId> c2(cand.begin() + static_cast<std::ptrdiff_t>(k), cand.end());

    AxiomSet s1 = AxiomSet::of(universe, c1);
    AxiomSet d2 = qxp(q, base | s1, !c1.empty(), c2);
    AxiomSet d1 = qxp(q, base | d2, !d2.empty(), c1);
    return d1 | d2;
}

void check_background(Counted& q, const AxiomSet& empty) {
    if (!q.holds(empty)) throw NotDiagnosable("background and positive test cases violate the requirements");
}

}  // namespace

ConflictOutcome quick_xplain(RequirementChecker& checker, const AxiomSet& suspects, ConflictStats* stats) {
    Counted q(checker, stats);
    const AxiomSet empty(suspects.universe());
    check_background(q, empty);
    if (q.holds(suspects)) return NoConflict{};
    AxiomSet cs = qxp(q, empty, false, suspects.ids());
    return ConflictSet{cs, true};
}

ConflictOutcome brute_force_conflict(RequirementChecker& checker, const AxiomSet& suspects, ConflictStats* stats) {
    Counted q(checker, stats);
    AxiomSet buffer(suspects.universe());
    check_background(q, buffer);

    bool found = false;
    for (AxiomId id : suspects.ids()) {
        buffer.insert(id);
        if (!q.holds(buffer)) {
            found = true;
            break;
        }
    }
    if (!found) return NoConflict{};

    for (AxiomId id : buffer.ids()) {
        AxiomSet smaller = buffer;
        smaller.erase(id);
        if (!q.holds(smaller)) buffer = std::move(smaller);
    }
    return ConflictSet{buffer, true};
}

namespace {

using Mask = std::uint64_t;

AxiomSet to_set(Mask m, std::size_t universe) {
    AxiomSet s(universe);
    for (std::size_t i = 0; i < universe; ++i)
        if ((m >> i) & 1u) s.insert(i);
    return s;
}

// Minimal members of an upward-closed family over subsets of {0..m-1},
// where member(checker, S) decides membership. Candidates of one cardinality
// are independent, so each level is checked in parallel with one oracle per
// thread.
template <typename Member>
std::vector<Mask> minimal_members(const DiagnosisProblem& problem, const OracleFactory& factory, std::size_t cap,
                                  Execution exec, Member member) {
    const std::size_t m = problem.size();
    if (m > cap || m > 62) {
        throw CapExceeded("exhaustive enumeration over " + std::to_string(m) + " axioms exceeds the cap of " +
                          std::to_string(cap));
    }

    std::vector<Mask> found;
    for (std::size_t k = 0; k <= m; ++k) {
        std::vector<Mask> cand;
        if (k == 0) {
            cand.push_back(0);
        } else {
            // Gosper's hack over all k-subsets.
            Mask s = (Mask{1} << k) - 1;
            const Mask limit = Mask{1} << m;
            while (s < limit) {
                bool covered = std::any_of(found.begin(), found.end(), [s](Mask f) { return (f & s) == f; });
                if (!covered) cand.push_back(s);
                Mask c = s & (~s + 1);
                Mask r = s + c;
                s = (((r ^ s) >> 2) / c) | r;
            }
        }
        if (cand.empty()) break;

        std::vector<char> hit(cand.size(), 0);
        const long n = static_cast<long>(cand.size());
        if (exec == Execution::Parallel) {
#pragma omp parallel
            {
                auto oracle = factory(problem);
                RequirementChecker checker(problem, *oracle);
#pragma omp for schedule(dynamic, 4)
                for (long i = 0; i < n; ++i) hit[i] = member(checker, to_set(cand[i], m)) ? 1 : 0;
            }
        } else {
            auto oracle = factory(problem);
            RequirementChecker checker(problem, *oracle);
            for (long i = 0; i < n; ++i) hit[i] = member(checker, to_set(cand[i], m)) ? 1 : 0;
        }
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (hit[i]) found.push_back(cand[i]);
    }
    return found;
}

template <typename T>
std::vector<T> to_sorted(const std::vector<Mask>& masks, std::size_t universe) {
    std::vector<T> out;
    for (Mask mk : masks) out.push_back(T{to_set(mk, universe), true});
    std::sort(out.begin(), out.end(), [](const T& a, const T& b) { return a.axioms < b.axioms; });
    return out;
}

}  // namespace

std::vector<ConflictSet> all_minimal_conflicts(const DiagnosisProblem& problem, const OracleFactory& factory,
                                               std::size_t cap, Execution exec) {
    auto masks = minimal_members(problem, factory, cap, exec,
                                 [](RequirementChecker& c, const AxiomSet& s) { return c.is_conflict(s); });
    return to_sorted<ConflictSet>(masks, problem.size());
}

std::vector<Diagnosis> brute_force_diagnoses(const DiagnosisProblem& problem, const OracleFactory& factory,
                                             std::size_t cap, Execution exec) {
    auto masks = minimal_members(problem, factory, cap, exec,
                                 [](RequirementChecker& c, const AxiomSet& s) { return c.is_valid_diagnosis(s); });
    return to_sorted<Diagnosis>(masks, problem.size());
}

}  // namespace mbd
