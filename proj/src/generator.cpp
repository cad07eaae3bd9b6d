#include "mbd/generator.hpp"

#include <algorithm>
#include <set>

#include "mbd/errors.hpp"

namespace mbd {

namespace {

std::string cls(std::mt19937_64& rng, std::size_t classes) {
    std::uniform_int_distribution<std::size_t> d(0, classes - 1);
    return std::string(1, static_cast<char>('A' + d(rng)));
}

std::string ind(std::mt19937_64& rng) { return std::uniform_int_distribution<int>(0, 1)(rng) ? "a" : "b"; }

ConceptPtr literal(std::mt19937_64& rng, std::size_t classes) {
    ConceptPtr c = make_atom(cls(rng, classes));
    return std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? make_not(c) : c;
}

Sentence random_axiom(std::mt19937_64& rng, std::size_t classes) {
    auto x = [&] { return make_atom(cls(rng, classes)); };
    switch (std::uniform_int_distribution<int>(0, 9)(rng)) {
    case 0:
    case 1: return Sentence::subsumption(x(), x());
    case 2: return Sentence::subsumption(x(), make_not(x()));
    case 3: return Sentence::subsumption(x(), make_and({x(), literal(rng, classes)}));
    case 4: return Sentence::subsumption(x(), make_or({x(), x()}));
    case 5: return Sentence::subsumption(x(), make_some("r", literal(rng, classes)));
    case 6: return Sentence::subsumption(x(), make_only("r", literal(rng, classes)));
    case 7: return Sentence::subsumption(make_some("r", x()), x());
    case 8: return Sentence::class_assertion(literal(rng, classes), ind(rng));
    default: return Sentence::equivalence(x(), make_and({x(), x()}));
    }
}

bool trivial(const Sentence& s) {
    return (s.kind == SentenceKind::Subsumption || s.kind == SentenceKind::Equivalence) && to_string(*s.lhs) == to_string(*s.rhs);
}

}  // namespace

DiagnosisProblem random_problem(std::mt19937_64& rng, const RandomSpec& spec) {
    for (;;) {
        KnowledgeBase background;
        background.add(Sentence::class_assertion(make_atom(cls(rng, spec.classes)), "a"));
        background.add(Sentence::role_assertion("r", "a", "b"));

        std::size_t m = std::uniform_int_distribution<std::size_t>(spec.min_axioms, spec.max_axioms)(rng);
        KnowledgeBase ontology;
        std::size_t attempts = 0;
        while (ontology.size() < m && attempts++ < 200) {
            Sentence s = random_axiom(rng, spec.classes);
            if (trivial(s) || ontology.contains(s) || background.contains(s)) continue;
            ontology.add(std::move(s));
        }

        std::vector<TestCase> pos, neg;
        std::set<std::string> seen;
        std::size_t t = std::uniform_int_distribution<std::size_t>(0, spec.max_test_cases)(rng);
        for (std::size_t i = 0; i < t; ++i) {
            TestCase tc;
            tc.sentences.push_back(Sentence::class_assertion(literal(rng, spec.classes), ind(rng)));
            if (!seen.insert(tc.key()).second) continue;
            (std::uniform_int_distribution<int>(0, 1)(rng) ? pos : neg).push_back(std::move(tc));
        }

        DiagnosisProblem p = assemble_problem(std::move(ontology), std::move(background), std::move(pos), std::move(neg));
        auto oracle = default_oracle_factory()(p);
        RequirementChecker checker(p, *oracle);
        if (!checker.background_holds()) continue;
        if (checker.holds(p.all_axioms())) continue;
        return p;
    }
}

SyntheticInstance synthetic_problem(const SyntheticSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::vector<Sentence> axioms;
    std::vector<std::vector<std::size_t>> conflicts;  // positions in `axioms`
    KnowledgeBase background;

    struct Chain {
        std::string root;
        std::vector<std::string> nodes;  // names X_1..X_{s-1} along the chain
        std::vector<std::size_t> edges;  // axiom positions along the chain
    };
    std::vector<Chain> chains;
    std::size_t fresh = 0;
    auto name = [&](const char* prefix) { return std::string(prefix) + std::to_string(fresh++); };

    for (std::size_t k = 0; k < spec.conflicts; ++k) {
        std::size_t size = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, spec.max_conflict_size))(rng);
        bool branch = !chains.empty() && std::bernoulli_distribution(spec.overlap)(rng);
        Chain c;
        std::size_t shared = 0;
        if (branch) {
            const Chain& base = chains[std::uniform_int_distribution<std::size_t>(0, chains.size() - 1)(rng)];
            // share 1..|nodes| prefix edges, keeping the new conflict at most max size
            if (!base.nodes.empty()) {
                shared = std::uniform_int_distribution<std::size_t>(1, base.nodes.size())(rng);
                if (size < shared + 2) size = shared + 2;  // at least one fresh node
                c.root = base.root;
                c.nodes.assign(base.nodes.begin(), base.nodes.begin() + static_cast<std::ptrdiff_t>(shared));
                c.edges.assign(base.edges.begin(), base.edges.begin() + static_cast<std::ptrdiff_t>(shared));
            } else {
                branch = false;
            }
        }
        if (!branch) {
            c.root = name("R");
            background.add(Sentence::class_assertion(make_atom(c.root), "a"));
        }
        std::string last = c.nodes.empty() ? c.root : c.nodes.back();
        for (std::size_t i = shared; i + 1 < size; ++i) {
            std::string next = name("X");
            c.edges.push_back(axioms.size());
            axioms.push_back(Sentence::subsumption(make_atom(last), make_atom(next)));
            c.nodes.push_back(next);
            last = next;
        }
        c.edges.push_back(axioms.size());
        axioms.push_back(Sentence::subsumption(make_atom(last), make_not(make_atom(c.root))));
        conflicts.push_back(c.edges);
        c.edges.pop_back();
        chains.push_back(std::move(c));
    }

    while (axioms.size() < spec.axioms) {
        std::string a = name("F");
        std::string b = name("F");
        axioms.push_back(Sentence::subsumption(make_atom(a), make_atom(b)));
        // continue the filler chain a few steps
        std::size_t len = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
        for (std::size_t i = 0; i < len && axioms.size() < spec.axioms; ++i) {
            std::string c = name("F");
            axioms.push_back(Sentence::subsumption(make_atom(b), make_atom(c)));
            b = c;
        }
    }

    // Shuffle so the implanted conflicts are spread over the ontology.
    std::vector<std::size_t> perm(axioms.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> where(axioms.size());
    KnowledgeBase ontology;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        where[perm[i]] = i;
        ontology.add(axioms[perm[i]]);
    }

    SyntheticInstance out;
    for (const auto& c : conflicts) {
        AxiomSet s(axioms.size());
        for (std::size_t pos : c) s.insert(where[pos]);
        out.conflicts.push_back(std::move(s));
    }
    out.problem = assemble_problem(std::move(ontology), std::move(background), {}, {});
    return out;
}

bool is_minimal_hitting_set(const AxiomSet& h, const std::vector<AxiomSet>& sets) {
    auto hits_all = [&](const AxiomSet& x) {
        return std::all_of(sets.begin(), sets.end(), [&](const AxiomSet& s) { return s.intersects(x); });
    };
    if (!hits_all(h)) return false;
    for (AxiomId id : h.ids()) {
        AxiomSet smaller = h;
        smaller.erase(id);
        if (hits_all(smaller)) return false;
    }
    return true;
}

}  // namespace mbd
