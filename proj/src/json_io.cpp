#include "mbd/json_io.hpp"

#include "mbd/errors.hpp"

namespace mbd {

Json to_json(const AxiomSet& s) {
    Json a = Json::array();
    for (AxiomId id : s.ids()) a.push_back(id);
    return a;
}

namespace {

Json diagnoses_at(const std::vector<std::size_t>& idx, const std::vector<AxiomSet>& leading) {
    Json a = Json::array();
    for (std::size_t i : idx) a.push_back(to_json(leading[i]));
    return a;
}

Json sentences_json(const std::vector<Sentence>& ss) {
    Json a = Json::array();
    for (const auto& s : ss) a.push_back(to_string(s));
    return a;
}

}  // namespace

Json query_json(const Query& q, const std::vector<AxiomSet>& leading) {
    return Json{{"sentences", sentences_json(q.sentences)},
                {"dp", diagnoses_at(q.partition.dp, leading)},
                {"dn", diagnoses_at(q.partition.dn, leading)},
                {"d0", diagnoses_at(q.partition.d0, leading)},
                {"score", q.score}};
}

Json config_json(const SessionConfig& c, bool require_coherency) {
    return Json{{"mode", to_string(c.mode)},
                {"n", c.n},
                {"measure", c.measure == Measure::Entropy ? "entropy" : "split"},
                {"singletons", c.queries.singletons_only},
                {"coherency", require_coherency},
                {"max_nodes", c.tree_limits.max_nodes},
                {"max_seconds", c.tree_limits.max_seconds}};
}

SessionConfig config_from_json(const Json& j, bool* require_coherency) {
    SessionConfig c;
    if (!j.is_object()) throw Error("config must be an object");
    if (j.contains("mode")) {
        auto m = j.at("mode").get<std::string>();
        if (m == "classic") c.mode = TreeMode::Classic;
        else if (m == "inverse") c.mode = TreeMode::Inverse;
        else throw Error("unknown mode '" + m + "'");
    }
    if (j.contains("n")) {
        auto n = j.at("n").get<long long>();
        if (n < 1) throw Error("n must be positive");
        c.n = static_cast<std::size_t>(n);
    }
    if (j.contains("measure")) {
        auto m = j.at("measure").get<std::string>();
        if (m == "entropy" || m == "ent") c.measure = Measure::Entropy;
        else if (m == "split" || m == "spl" || m == "split-in-half") c.measure = Measure::SplitInHalf;
        else throw Error("unknown measure '" + m + "'");
    }
    if (j.contains("singletons")) c.queries.singletons_only = j.at("singletons").get<bool>();
    if (j.contains("max_nodes")) c.tree_limits.max_nodes = j.at("max_nodes").get<std::size_t>();
    if (j.contains("max_seconds")) c.tree_limits.max_seconds = j.at("max_seconds").get<double>();
    if (require_coherency) *require_coherency = j.value("coherency", false);
    return c;
}

Answer answer_from_string(const std::string& s) {
    if (s == "yes") return Answer::Yes;
    if (s == "no") return Answer::No;
    throw Error("answer must be \"yes\" or \"no\"");
}

Json session_json(const Session& s) {
    Json leading = Json::array();
    for (std::size_t i = 0; i < s.leading().size(); ++i) {
        leading.push_back({{"axioms", to_json(s.leading()[i])},
                           {"label", format_axioms(s.leading()[i])},
                           {"probability", s.probabilities()[i]}});
    }
    Json history = Json::array();
    for (const auto& h : s.history()) {
        history.push_back({{"step", h.step}, {"sentences", sentences_json(h.query.sentences)}, {"answer", to_string(h.answer)}});
    }
    Json j{{"v", kJsonVersion},
           {"phase", to_string(s.phase())},
           {"config", config_json(s.config(), s.problem().require_coherency())},
           {"axioms", s.problem().size()},
           {"leading", leading},
           {"query", s.pending_query() ? query_json(*s.pending_query(), s.leading()) : Json()},
           {"history", history},
           {"complete", s.complete()}};
    return j;
}

Json result_json(const Session& s) {
    Json diags = Json::array();
    for (const auto& r : s.result()) {
        diags.push_back({{"axioms", to_json(r.axioms)}, {"label", format_axioms(r.axioms)}, {"probability", r.probability}});
    }
    return Json{{"v", kJsonVersion}, {"diagnoses", diags}, {"queries", s.history().size()}, {"complete", s.complete()}};
}

Json tree_json(const HSTree& t) {
    Json nodes = Json::array();
    const auto& all = t.nodes();
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& nd = all[i];
        if (!nd.alive) continue;
        Json n{{"id", i}, {"parent", nd.parent < 0 ? Json() : Json(nd.parent)},
               {"edge", nd.parent < 0 ? Json() : Json(nd.edge)}, {"path", to_json(nd.path)},
               {"depth", nd.depth}, {"kind", to_string(nd.kind)},
               {"label", nd.label < 0 ? Json() : to_json(t.label_set(nd.label))}, {"reused", nd.reused}};
        nodes.push_back(std::move(n));
    }
    return Json{{"v", kJsonVersion}, {"mode", to_string(t.mode())}, {"nodes", nodes}};
}

}  // namespace mbd
