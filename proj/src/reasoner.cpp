#include "mbd/reasoner.hpp"

#include <algorithm>
#include <sstream>

#include "mbd/errors.hpp"

namespace mbd {

std::vector<std::size_t> ReasonerOracle::entailed_pool(std::span<const SentenceHandle> kb,
                                                       std::span<const SentenceHandle> pool) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        SentenceHandle q = pool[i];
        if (entails(kb, std::span<const SentenceHandle>(&q, 1))) out.push_back(i);
    }
    return out;
}

// ---------------------------------------------------------------- Grounder

Grounder::Grounder(std::vector<std::string> domain, Sink& sink) : domain_(std::move(domain)), sink_(sink) {
    for (std::size_t i = 0; i < domain_.size(); ++i) index_.emplace(domain_[i], i);
}

std::size_t Grounder::individual_index(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        throw UnsupportedConstruct("individual '" + name + "' is outside the grounding domain");
    }
    return it->second;
}

int Grounder::atom(const std::string& key) {
    auto [it, inserted] = atoms_.emplace(key, 0);
    if (inserted) it->second = sink_.new_var();
    return it->second;
}

int Grounder::true_literal() {
    if (true_lit_ == 0) {
        true_lit_ = sink_.new_var();
        int unit[] = {true_lit_};
        sink_.add_clause(unit);
    }
    return true_lit_;
}

int Grounder::conjunction(const std::vector<int>& lits) {
    if (lits.empty()) return true_literal();
    if (lits.size() == 1) return lits[0];
    int t = sink_.new_var();
    std::vector<int> back{t};
    for (int l : lits) {
        int c[] = {-t, l};
        sink_.add_clause(c);
        back.push_back(-l);
    }
    sink_.add_clause(back);
    return t;
}

int Grounder::disjunction(const std::vector<int>& lits) {
    if (lits.empty()) return -true_literal();
    if (lits.size() == 1) return lits[0];
    int t = sink_.new_var();
    std::vector<int> fwd{-t};
    for (int l : lits) {
        int c[] = {t, -l};
        sink_.add_clause(c);
        fwd.push_back(l);
    }
    sink_.add_clause(fwd);
    return t;
}

int Grounder::concept_literal(const Concept& c, std::size_t a) {
    const std::string& ind = domain_[a];
    switch (c.kind) {
    case ConceptKind::Atom:
        return atom(c.name + "(" + ind + ")");
    case ConceptKind::Not:
        return -concept_literal(*c.args[0], a);
    default:
        break;
    }

    std::string key = to_string(c) + "@" + ind;
    if (auto it = concept_cache_.find(key); it != concept_cache_.end()) return it->second;

    std::vector<int> parts;
    int lit = 0;
    switch (c.kind) {
    case ConceptKind::And:
        for (const auto& arg : c.args) parts.push_back(concept_literal(*arg, a));
        lit = conjunction(parts);
        break;
    case ConceptKind::Or:
        for (const auto& arg : c.args) parts.push_back(concept_literal(*arg, a));
        lit = disjunction(parts);
        break;
    case ConceptKind::Some:
        // ⋁_b r(a,b) ∧ C(b)
        for (std::size_t b = 0; b < domain_.size(); ++b) {
            int edge = atom(c.name + "(" + ind + "," + domain_[b] + ")");
            parts.push_back(conjunction({edge, concept_literal(*c.args[0], b)}));
        }
        lit = disjunction(parts);
        break;
    case ConceptKind::Only:
        // ⋀_b r(a,b) → C(b)
        for (std::size_t b = 0; b < domain_.size(); ++b) {
            int edge = atom(c.name + "(" + ind + "," + domain_[b] + ")");
            parts.push_back(disjunction({-edge, concept_literal(*c.args[0], b)}));
        }
        lit = conjunction(parts);
        break;
    default:
        throw UnsupportedConstruct("unsupported concept constructor in " + to_string(c));
    }
    concept_cache_.emplace(std::move(key), lit);
    return lit;
}

int Grounder::sentence_literal(const Sentence& s) {
    std::vector<int> parts;
    switch (s.kind) {
    case SentenceKind::Subsumption:
        for (std::size_t a = 0; a < domain_.size(); ++a) {
            parts.push_back(disjunction({-concept_literal(*s.lhs, a), concept_literal(*s.rhs, a)}));
        }
        return conjunction(parts);
    case SentenceKind::Equivalence:
        for (std::size_t a = 0; a < domain_.size(); ++a) {
            int l = concept_literal(*s.lhs, a);
            int r = concept_literal(*s.rhs, a);
            parts.push_back(disjunction({-l, r}));
            parts.push_back(disjunction({-r, l}));
        }
        return conjunction(parts);
    case SentenceKind::ClassAssertion:
        return concept_literal(*s.lhs, individual_index(s.subject));
    case SentenceKind::RoleAssertion:
        individual_index(s.subject);
        individual_index(s.object);
        return atom(s.role + "(" + s.subject + "," + s.object + ")");
    }
    throw UnsupportedConstruct("unsupported sentence: " + to_string(s));
}

// ------------------------------------------------------------ GroundTheory

namespace {

struct TheorySink final : Grounder::Sink {
    explicit TheorySink(GroundTheory& t) : theory(t) {}
    int new_var() override { return ++theory.num_vars; }
    void add_clause(std::span<const int> lits) override { theory.clauses.emplace_back(lits.begin(), lits.end()); }
    GroundTheory& theory;
};

}  // namespace

GroundTheory ground(std::span<const Sentence> kb, const std::vector<std::string>& extra_individuals) {
    Signature sig;
    for (const auto& s : kb) sig.add(s);
    std::vector<std::string> domain(sig.individuals.begin(), sig.individuals.end());
    for (const auto& x : extra_individuals) {
        if (!sig.individuals.count(x)) domain.push_back(x);
    }

    GroundTheory theory;
    TheorySink sink(theory);
    Grounder grounder(domain, sink);
    for (const auto& s : kb) {
        int root = grounder.sentence_literal(s);
        theory.clauses.push_back({root});
    }
    theory.atoms = grounder.atoms();
    theory.domain = std::move(domain);
    return theory;
}

bool is_consistent(const GroundTheory& theory, std::int64_t conflict_budget) {
    sat::Solver solver;
    for (int i = 0; i < theory.num_vars; ++i) solver.new_var();
    for (const auto& c : theory.clauses) {
        if (!solver.add_clause(c)) return false;
    }
    solver.set_conflict_budget(conflict_budget);
    switch (solver.solve()) {
    case sat::Result::Sat:
        return true;
    case sat::Result::Unsat:
        return false;
    case sat::Result::Unknown:
        break;
    }
    throw ResourceLimit("satisfiability check exceeded its conflict budget");
}

std::string to_dimacs(const GroundTheory& theory) {
    std::ostringstream out;
    for (const auto& [name, var] : theory.atoms) out << "c " << var << " " << name << "\n";
    out << "p cnf " << theory.num_vars << " " << theory.clauses.size() << "\n";
    for (const auto& c : theory.clauses) {
        for (int l : c) out << l << " ";
        out << "0\n";
    }
    return out.str();
}

// ------------------------------------------------------- GroundingReasoner

namespace {

std::vector<std::string> with_anonymous(const std::set<std::string>& individuals) {
    std::vector<std::string> d(individuals.begin(), individuals.end());
    d.emplace_back(GroundingReasoner::kAnonymous);
    return d;
}

}  // namespace

GroundingReasoner::GroundingReasoner(const std::set<std::string>& individuals, ReasonerLimits limits)
    : limits_(limits), sink_(solver_), grounder_(with_anonymous(individuals), sink_) {
    solver_.set_conflict_budget(limits_.conflict_budget);
}

SentenceHandle GroundingReasoner::intern(const Sentence& s) {
    std::string text = to_string(s);
    if (auto it = by_text_.find(text); it != by_text_.end()) return it->second;
    int root = grounder_.sentence_literal(s);
    Signature sig;
    sig.add(s);
    classes_.insert(sig.classes.begin(), sig.classes.end());
    auto h = static_cast<SentenceHandle>(sentences_.size());
    sentences_.push_back(s);
    roots_.push_back(root);
    by_text_.emplace(std::move(text), h);
    return h;
}

bool GroundingReasoner::satisfiable(std::vector<int>& assumptions) {
    switch (solver_.solve(assumptions)) {
    case sat::Result::Sat:
        return true;
    case sat::Result::Unsat:
        return false;
    case sat::Result::Unknown:
        break;
    }
    throw ResourceLimit("decision query exceeded the reasoner's conflict budget");
}

bool GroundingReasoner::is_consistent(std::span<const SentenceHandle> kb) {
    count_call();
    std::vector<int> assumptions;
    assumptions.reserve(kb.size());
    for (SentenceHandle h : kb) assumptions.push_back(roots_.at(h));
    return satisfiable(assumptions);
}

int GroundingReasoner::query_selector(std::span<const SentenceHandle> query) {
    std::vector<SentenceHandle> key(query.begin(), query.end());
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    if (key.size() == 1) return -roots_.at(key[0]);
    auto [it, inserted] = query_selectors_.emplace(key, 0);
    if (inserted) {
        // selector → ¬q1 ∨ ... ∨ ¬qk
        int sel = solver_.new_var();
        std::vector<int> clause{-sel};
        for (SentenceHandle h : key) clause.push_back(-roots_.at(h));
        solver_.add_clause(clause);
        it->second = sel;
    }
    return it->second;
}

bool GroundingReasoner::entails(std::span<const SentenceHandle> kb, std::span<const SentenceHandle> query) {
    count_call();
    if (query.empty()) return true;
    std::vector<int> assumptions;
    assumptions.reserve(kb.size() + 1);
    for (SentenceHandle h : kb) assumptions.push_back(roots_.at(h));
    assumptions.push_back(query_selector(query));
    return !satisfiable(assumptions);
}

Coherence GroundingReasoner::coherence(std::span<const SentenceHandle> kb) {
    count_call();
    std::vector<int> assumptions;
    assumptions.reserve(kb.size() + 1);
    for (SentenceHandle h : kb) assumptions.push_back(roots_.at(h));
    const std::size_t anon = grounder_.individual_index(kAnonymous);

    Coherence result;
    for (const auto& cls : classes_) {
        assumptions.push_back(grounder_.concept_literal(Concept{ConceptKind::Atom, cls, {}}, anon));
        if (!satisfiable(assumptions)) result.unsatisfiable.push_back(cls);
        assumptions.pop_back();
    }
    result.coherent = result.unsatisfiable.empty();
    return result;
}

std::unique_ptr<ReasonerOracle> make_grounding_reasoner(const Signature& sig, ReasonerLimits limits) {
    return std::make_unique<GroundingReasoner>(sig.individuals, limits);
}

}  // namespace mbd
