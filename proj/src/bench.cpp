#include "mbd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "mbd/errors.hpp"

namespace mbd {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        auto b = cur.find_first_not_of(" \t\n");
        auto e = cur.find_last_not_of(" \t\n");
        out.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
    }
    return out;
}

}  // namespace

BenchSpec parse_bench_spec(const std::string& text) {
    BenchSpec spec;
    for (const auto& inst : split(text, ';')) {
        if (inst.empty()) continue;
        SyntheticSpec s;
        for (const auto& kv : split(inst, ',')) {
            if (kv.empty()) continue;
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw Error("bench spec: expected key=value, got '" + kv + "'");
            std::string k = kv.substr(0, eq);
            std::string v = kv.substr(eq + 1);
            try {
                if (k == "m" || k == "axioms") s.axioms = std::stoul(v);
                else if (k == "conflicts") s.conflicts = std::stoul(v);
                else if (k == "size") s.max_conflict_size = std::stoul(v);
                else if (k == "seed") s.seed = std::stoull(v);
                else if (k == "overlap") s.overlap = std::stod(v);
                else if (k == "nodes") spec.limits.max_nodes = std::stoul(v);
                else if (k == "seconds") spec.limits.max_seconds = std::stod(v);
                else if (k == "n") {
                    spec.ns.clear();
                    for (const auto& x : split(v, '+')) spec.ns.push_back(std::stoul(x));
                } else if (k == "modes") {
                    spec.modes.clear();
                    for (const auto& x : split(v, '+')) {
                        if (x == "classic") spec.modes.push_back(TreeMode::Classic);
                        else if (x == "inverse") spec.modes.push_back(TreeMode::Inverse);
                        else throw Error("bench spec: unknown mode '" + x + "'");
                    }
                } else {
                    throw Error("bench spec: unknown key '" + k + "'");
                }
            } catch (const std::logic_error&) {
                throw Error("bench spec: bad value for '" + k + "'");
            }
        }
        spec.instances.push_back(s);
    }
    return spec;
}

std::vector<BenchRow> run_benchmark(const BenchSpec& spec) {
    std::vector<BenchRow> rows;
    for (std::size_t i = 0; i < spec.instances.size(); ++i) {
        SyntheticInstance inst = synthetic_problem(spec.instances[i]);
        for (std::size_t n : spec.ns) {
            std::map<TreeMode, std::vector<AxiomSet>> families;
            std::size_t first = rows.size();
            for (TreeMode mode : spec.modes) {
                auto oracle = default_oracle_factory()(inst.problem);
                RequirementChecker checker(inst.problem, *oracle);
                HSTree tree(mode, spec.limits);
                auto t0 = std::chrono::steady_clock::now();
                TreeOutcome out = tree.compute(checker, n);
                std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;

                BenchRow r;
                r.instance = i;
                r.axioms = inst.problem.size();
                r.conflicts = inst.conflicts.size();
                r.mode = mode;
                r.n = n;
                r.wall_ms = dt.count();
                r.decision_calls = oracle->calls();
                r.direct_calls = tree.stats().inv_quick_xplain_calls;
                r.conflict_calls = tree.stats().quick_xplain_calls;
                r.diagnoses = out.diagnoses.size();
                r.max_alive_nodes = tree.stats().max_alive_nodes;
                r.complete = out.complete;
                for (const auto& d : out.diagnoses) r.verified = r.verified && is_minimal_hitting_set(d, inst.conflicts);
                rows.push_back(r);
                if (out.complete && out.diagnoses.size() < n) {  // exhausted: the full family
                    auto fam = out.diagnoses;
                    std::sort(fam.begin(), fam.end());
                    families[mode] = std::move(fam);
                }
            }
            if (families.size() >= 2 && families.size() == spec.modes.size()) {
                bool same = std::all_of(families.begin(), families.end(),
                                        [&](const auto& kv) { return kv.second == families.begin()->second; });
                for (std::size_t k = first; k < rows.size(); ++k) rows[k].families_equal = same ? "yes" : "no";
            }
        }
    }
    return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "instance,axioms,conflicts,mode,n,wall_ms,decision_calls,inv_quickxplain_calls,quickxplain_calls,"
           "diagnoses,max_alive_nodes,complete,verified,families_equal\n";
    for (const auto& r : rows) {
        out << r.instance << ',' << r.axioms << ',' << r.conflicts << ',' << to_string(r.mode) << ',' << r.n << ','
            << r.wall_ms << ',' << r.decision_calls << ',' << r.direct_calls << ',' << r.conflict_calls << ','
            << r.diagnoses << ',' << r.max_alive_nodes << ',' << (r.complete ? "yes" : "no") << ','
            << (r.verified ? "yes" : "no") << ',' << r.families_equal << '\n';
    }
    return out.str();
}

}  // namespace mbd
