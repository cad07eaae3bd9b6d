#include "mbd/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "mbd/errors.hpp"

namespace mbd {

const char* to_string(Measure m) { return m == Measure::Entropy ? "entropy" : "split-in-half"; }
const char* to_string(Answer a) { return a == Answer::Yes ? "yes" : "no"; }

std::vector<Sentence> query_pool(const DiagnosisProblem& problem) {
    const Signature& sig = problem.signature();
    std::vector<Sentence> out;
    for (const auto& c : sig.classes)
        for (const auto& i : sig.individuals) out.push_back(Sentence::class_assertion(make_atom(c), i));
    for (const auto& a : sig.classes)
        for (const auto& b : sig.classes)
            if (a != b) out.push_back(Sentence::subsumption(make_atom(a), make_atom(b)));
    return out;
}

std::vector<std::size_t> entailed_pool(RequirementChecker& checker, const AxiomSet& diagnosis,
                                       const std::vector<SentenceHandle>& pool) {
    auto kb = checker.kb(diagnosis.complement());
    return checker.oracle().entailed_pool(kb, pool);
}

Partition partition_diagnoses(RequirementChecker& checker, const std::vector<Sentence>& query,
                              const std::vector<AxiomSet>& leading) {
    std::vector<SentenceHandle> q;
    for (const auto& s : query) q.push_back(checker.intern(s));
    Partition p;
    for (std::size_t i = 0; i < leading.size(); ++i) {
        const AxiomSet active = leading[i].complement();
        auto kb = checker.kb(active);
        if (checker.oracle().entails(kb, q)) p.dp.push_back(i);
        else if (!checker.holds_with(active, q)) p.dn.push_back(i);
        else p.d0.push_back(i);
    }
    return p;
}

std::vector<Query> generate_queries(RequirementChecker& checker, const std::vector<AxiomSet>& leading,
                                    const std::vector<Sentence>& pool, QueryOptions options) {
    std::vector<SentenceHandle> handles;
    handles.reserve(pool.size());
    for (const auto& s : pool) handles.push_back(checker.intern(s));

    // pattern[j][i]: pool sentence j is entailed under diagnosis i
    std::vector<std::vector<bool>> pattern(pool.size(), std::vector<bool>(leading.size(), false));
    for (std::size_t i = 0; i < leading.size(); ++i) {
        for (std::size_t j : entailed_pool(checker, leading[i], handles)) pattern[j][i] = true;
    }

    std::map<std::vector<bool>, std::vector<std::size_t>> groups;
    std::vector<std::vector<std::size_t>> singles;
    for (std::size_t j = 0; j < pool.size(); ++j) {
        const auto& pat = pattern[j];
        bool any = std::find(pat.begin(), pat.end(), true) != pat.end();
        bool all = std::find(pat.begin(), pat.end(), false) == pat.end();
        if (!any || all) continue;
        if (options.singletons_only) singles.push_back({j});
        else groups[pat].push_back(j);
    }
    if (!options.singletons_only) {
        for (auto& [pat, idx] : groups) singles.push_back(std::move(idx));
        std::sort(singles.begin(), singles.end());
    }

    std::vector<Query> out;
    for (auto& idx : singles) {
        Query q;
        q.pool_indices = idx;
        for (std::size_t j : idx) q.sentences.push_back(pool[j]);
        q.partition = partition_diagnoses(checker, q.sentences, leading);
        if (q.partition.dp.empty() || q.partition.dn.empty()) continue;
        out.push_back(std::move(q));
    }
    return out;
}

double score_split_in_half(const Partition& p) {
    double a = static_cast<double>(p.dp.size());
    double b = static_cast<double>(p.dn.size());
    return std::abs(a - b) + static_cast<double>(p.d0.size());
}

namespace {

double mass(const std::vector<std::size_t>& idx, const std::vector<double>& probs) {
    double s = 0;
    for (std::size_t i : idx) s += probs[i];
    return s;
}

double plogp(double p) { return p > 0 ? p * std::log2(p) : 0.0; }

}  // namespace

double score_entropy(const Partition& p, const std::vector<double>& probs) {
    const double p0 = mass(p.d0, probs);
    double yes = mass(p.dp, probs) + 0.5 * p0;
    yes = std::clamp(yes, 0.0, 1.0);
    const double no = 1.0 - yes;
    if (p0 == 0 && (yes <= 0 || no <= 0)) throw DegenerateQuery("query cannot change the current beliefs");
    return plogp(yes) + plogp(no) + p0 + 1.0;
}

Query select_best_query(const std::vector<Query>& queries, Measure measure, const std::vector<double>& probs) {
    const Query* best = nullptr;
    double best_score = std::numeric_limits<double>::infinity();
    constexpr double eps = 1e-12;
    for (const auto& q : queries) {
        double s = 0;
        try {
            s = measure == Measure::Entropy ? score_entropy(q.partition, probs) : score_split_in_half(q.partition);
        } catch (const DegenerateQuery&) {
            continue;
        }
        bool better = false;
        if (!best || s < best_score - eps) {
            better = true;
        } else if (std::abs(s - best_score) <= eps) {
            if (q.partition.d0.size() != best->partition.d0.size()) better = q.partition.d0.size() < best->partition.d0.size();
            else better = q.pool_indices < best->pool_indices;
        }
        if (better) {
            best = &q;
            best_score = s;
        }
    }
    if (!best) throw NoDiscriminatingQuery("no query discriminates the leading diagnoses");
    Query out = *best;
    out.score = best_score;
    return out;
}

std::vector<double> axiom_priors(const KnowledgeBase& ontology) {
    bool rated = std::any_of(ontology.axioms().begin(), ontology.axioms().end(),
                             [](const Axiom& a) { return a.confidence.has_value(); });
    std::vector<double> out;
    for (const auto& a : ontology.axioms()) {
        if (a.confidence) out.push_back(1.0 - *a.confidence);
        else out.push_back(rated ? kUnratedAxiomPrior : kDefaultAxiomPrior);
    }
    return out;
}

double log_prior(const std::vector<double>& priors, const AxiomSet& d) {
    double s = 0;
    for (std::size_t i = 0; i < priors.size(); ++i) s += d.contains(i) ? std::log(priors[i]) : std::log1p(-priors[i]);
    return s;
}

namespace {

std::vector<double> normalize_logs(const std::vector<double>& logs) {
    std::vector<double> out(logs.size(), 0.0);
    if (logs.empty()) return out;
    double mx = -std::numeric_limits<double>::infinity();
    for (double l : logs) mx = std::max(mx, l);
    if (!std::isfinite(mx)) return out;
    double sum = 0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        out[i] = std::isfinite(logs[i]) ? std::exp(logs[i] - mx) : 0.0;
        sum += out[i];
    }
    for (double& v : out) v /= sum;
    return out;
}

}  // namespace

std::vector<double> diagnosis_priors(const std::vector<double>& priors, const std::vector<AxiomSet>& leading) {
    std::vector<double> logs;
    for (const auto& d : leading) logs.push_back(log_prior(priors, d));
    return normalize_logs(logs);
}

double answer_likelihood(const Partition& p, std::size_t index, Answer answer) {
    auto in = [index](const std::vector<std::size_t>& v) { return std::find(v.begin(), v.end(), index) != v.end(); };
    if (in(p.d0)) return 0.5;
    if (in(p.dp)) return answer == Answer::Yes ? 1.0 : 0.0;
    if (in(p.dn)) return answer == Answer::No ? 1.0 : 0.0;
    return 0.5;
}

std::vector<double> bayes_update(const std::vector<double>& probs, const Partition& p, Answer answer) {
    std::vector<double> out(probs.size());
    double sum = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        out[i] = probs[i] * answer_likelihood(p, i, answer);
        sum += out[i];
    }
    if (sum <= 0) throw AllEliminated("the answer contradicts every leading diagnosis");
    for (double& v : out) v /= sum;
    return out;
}

}  // namespace mbd
