#include "mbd/session.hpp"

#include <algorithm>
#include <cmath>

#include "mbd/errors.hpp"

namespace mbd {

const char* to_string(Phase p) {
    switch (p) {
    case Phase::Computing: return "computing";
    case Phase::AwaitingAnswer: return "awaiting-answer";
    case Phase::Done: return "done";
    }
    return "?";
}

Session::Session(DiagnosisProblem problem, SessionConfig config, OracleFactory factory)
    : initial_(problem),
      problem_(std::move(problem)),
      config_(std::move(config)),
      factory_(std::move(factory)),
      tree_(config_.mode, config_.tree_limits) {
    if (config_.n == 0) throw Error("n must be positive");
    oracle_ = factory_(problem_);
    checker_ = std::make_unique<RequirementChecker>(problem_, *oracle_);
    if (!checker_->background_holds()) {
        throw NotDiagnosable("background and positive test cases violate the requirements on their own");
    }
    axiom_priors_ = config_.axiom_priors ? *config_.axiom_priors : axiom_priors(problem_.ontology());
    if (axiom_priors_.size() != problem_.size()) throw Error("one prior per ontology axiom expected");
    pool_ = query_pool(problem_);
    advance();
}

double Session::log_likelihood(const AxiomSet& d) {
    auto it = likelihood_cache_.find(d);
    if (it != likelihood_cache_.end()) return it->second;
    // Replays every earlier answer against the problem in force at the time.
    double sum = 0;
    if (!history_.empty() && !history_oracle_) history_oracle_ = factory_(initial_);
    for (std::size_t t = 0; t < history_.size(); ++t) {
        RequirementChecker past(snapshots_[t], *history_oracle_);
        Partition p = partition_diagnoses(past, history_[t].query.sentences, {d});
        sum += std::log(answer_likelihood(p, 0, history_[t].answer));
    }
    likelihood_cache_.emplace(d, sum);
    return sum;
}

std::vector<double> Session::posterior(const std::vector<AxiomSet>& diags) {
    std::vector<double> logs;
    for (const auto& d : diags) logs.push_back(log_prior(axiom_priors_, d) + log_likelihood(d));
    double mx = -INFINITY;
    for (double l : logs) mx = std::max(mx, l);
    std::vector<double> out(diags.size(), 0.0);
    if (!std::isfinite(mx)) return out;
    double sum = 0;
    for (std::size_t i = 0; i < logs.size(); ++i) sum += out[i] = std::isfinite(logs[i]) ? std::exp(logs[i] - mx) : 0.0;
    for (double& v : out) v /= sum;
    return out;
}

void Session::advance() {
    phase_ = Phase::Computing;
    pending_.reset();
    std::size_t target = config_.n;
    while (true) {
        TreeOutcome out = tree_.compute(*checker_, target);
        complete_ = out.complete;
        leading_ = std::move(out.diagnoses);
        probs_ = posterior(leading_);
        if (leading_.size() < 2) break;

        auto queries = generate_queries(*checker_, leading_, pool_, config_.queries);
        try {
            pending_ = select_best_query(queries, config_.measure, probs_);
            phase_ = Phase::AwaitingAnswer;
            return;
        } catch (const NoDiscriminatingQuery&) {
        }
        // The current leading set is indistinguishable; try to widen it.
        if (!complete_ || leading_.size() < target) break;
        target = leading_.size() + 1;
    }
    phase_ = Phase::Done;
}

void Session::submit_answer(Answer answer) {
    if (phase_ != Phase::AwaitingAnswer || !pending_) throw InvalidPhase("no query is awaiting an answer");
    Query q = std::move(*pending_);
    pending_.reset();

    try {
        probs_ = bayes_update(probs_, q.partition, answer);
    } catch (const AllEliminated&) {
        // Handled below: the leading set is recomputed on the updated problem.
    }

    snapshots_.push_back(problem_);
    history_.push_back({q, answer, history_.size() + 1});
    likelihood_cache_.clear();

    TestCase tc{q.sentences, answer == Answer::Yes ? Polarity::Positive : Polarity::Negative};
    problem_ = problem_.with_test_case(std::move(tc));
    checker_ = std::make_unique<RequirementChecker>(problem_, *oracle_);
    if (!checker_->background_holds()) {
        // Contradictory answers: no diagnosis can satisfy them.
        leading_.clear();
        probs_.clear();
        phase_ = Phase::Done;
        return;
    }
    tree_.update(*checker_);
    advance();
}

std::vector<RankedDiagnosis> Session::result() const {
    if (phase_ != Phase::Done) throw InvalidPhase("the session is still running");
    std::vector<RankedDiagnosis> out;
    for (std::size_t i = 0; i < leading_.size(); ++i) out.push_back({leading_[i], probs_[i]});
    std::stable_sort(out.begin(), out.end(), [](const RankedDiagnosis& a, const RankedDiagnosis& b) {
        if (a.probability != b.probability) return a.probability > b.probability;
        return a.axioms.ids() < b.axioms.ids();
    });
    return out;
}

ScriptedOracle::ScriptedOracle(const DiagnosisProblem& problem, AxiomSet target, const OracleFactory& factory)
    : oracle_(factory(problem)) {
    for (const auto& s : problem.background_prime()) kb_.push_back(oracle_->intern(s));
    for (const auto& ax : problem.ontology().axioms())
        if (!target.contains(ax.id)) kb_.push_back(oracle_->intern(ax.sentence));
}

Answer ScriptedOracle::operator()(const std::vector<Sentence>& sentences) {
    std::vector<SentenceHandle> q;
    for (const auto& s : sentences) q.push_back(oracle_->intern(s));
    return oracle_->entails(kb_, q) ? Answer::Yes : Answer::No;
}

Answer ScriptedOracle::operator()(const Query& q) { return (*this)(q.sentences); }

std::size_t run_scripted(Session& session, ScriptedOracle& oracle, std::size_t max_queries) {
    std::size_t asked = 0;
    while (session.phase() == Phase::AwaitingAnswer && asked < max_queries) {
        session.submit_answer(oracle(*session.pending_query()));
        ++asked;
    }
    return asked;
}

}  // namespace mbd
