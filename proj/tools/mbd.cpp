// mbd: command-line front end for the diagnosis engine.

#include <CLI11.hpp>

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mbd/bench.hpp"
#include "mbd/conflicts.hpp"
#include "mbd/direct.hpp"
#include "mbd/parser.hpp"
#include "mbd/service.hpp"
#include "mbd/session.hpp"

using namespace mbd;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DiagnosisProblem load(const std::string& path, bool coherency) {
    ProblemText t = parse_problem(slurp(path));
    return build_problem(std::move(t.ontology), std::move(t.background), std::move(t.positive), std::move(t.negative),
                         coherency);
}

TreeMode parse_mode(const std::string& m) { return m == "classic" ? TreeMode::Classic : TreeMode::Inverse; }

void print_sets(const std::vector<AxiomSet>& sets, const DiagnosisProblem& p, bool verbose) {
    for (const auto& s : sets) {
        std::cout << format_axioms(s) << '\n';
        if (!verbose) continue;
        for (AxiomId id : s.ids()) std::cout << "    ax" << id + 1 << ": " << to_string(p.ontology()[id].sentence) << '\n';
    }
}

AxiomSet parse_target(const std::string& text, std::size_t universe) {
    AxiomSet t(universe);
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.rfind("ax", 0) == 0) item = item.substr(2);
        std::size_t id = std::stoul(item);
        if (id == 0 || id > universe) throw Error("target axiom out of range: " + item);
        t.insert(id - 1);
    }
    return t;
}

ApiServer* running = nullptr;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Model-based diagnosis of knowledge bases"};
    app.require_subcommand(1);

    bool coherency = false;
    bool verbose = false;

    std::string file;
    std::string mode = "inverse";
    std::size_t n = 9;
    auto* diagnose = app.add_subcommand("diagnose", "compute minimal diagnoses");
    diagnose->add_option("--mode", mode, "classic or inverse")->check(CLI::IsMember({"classic", "inverse"}));
    diagnose->add_option("-n", n, "number of diagnoses")->check(CLI::PositiveNumber);
    diagnose->add_flag("--coherency", coherency, "require coherency");
    diagnose->add_flag("-v,--verbose", verbose, "print axioms");
    diagnose->add_option("FILE", file)->required();

    bool all = false;
    auto* conflicts = app.add_subcommand("conflicts", "compute a minimal conflict (or all of them)");
    conflicts->add_flag("--all", all, "enumerate every minimal conflict");
    conflicts->add_flag("--coherency", coherency, "require coherency");
    conflicts->add_flag("-v,--verbose", verbose, "print axioms");
    conflicts->add_option("FILE", file)->required();

    std::string measure = "ent";
    std::string target;
    bool singletons = false;
    auto* interactive = app.add_subcommand("interactive", "run the query loop, answering on stdin");
    interactive->add_option("--measure", measure, "ent or spl")->check(CLI::IsMember({"ent", "spl"}));
    interactive->add_option("--mode", mode, "classic or inverse")->check(CLI::IsMember({"classic", "inverse"}));
    interactive->add_option("-n", n, "leading diagnoses")->check(CLI::PositiveNumber);
    interactive->add_option("--target", target, "answer automatically for this diagnosis, e.g. 3,4");
    interactive->add_flag("--singletons", singletons, "single-sentence queries only");
    interactive->add_flag("--coherency", coherency, "require coherency");
    interactive->add_option("FILE", file)->required();

    auto* verify = app.add_subcommand("verify", "cross-check both tree modes against exhaustive enumeration");
    verify->add_flag("--coherency", coherency, "require coherency");
    verify->add_option("FILE", file)->required();

    std::string spec;
    auto* bench = app.add_subcommand("bench", "run the synthetic benchmark, CSV on stdout");
    bench->add_option("SPEC", spec, "e.g. m=1000,conflicts=20,size=4,seed=7,n=9")->required();

    int port = 8080;
    std::string host = "127.0.0.1";
    std::string store;
    auto* serve = app.add_subcommand("serve", "serve the HTTP API");
    serve->add_option("--port", port);
    serve->add_option("--host", host);
    serve->add_option("--store", store, "JSON-lines session log");

    auto* dimacs = app.add_subcommand("dimacs", "print B' and the whole ontology as DIMACS CNF");
    dimacs->add_option("FILE", file)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*diagnose) {
            DiagnosisProblem p = load(file, coherency);
            auto oracle = default_oracle_factory()(p);
            RequirementChecker checker(p, *oracle);
            if (checker.holds(p.all_axioms())) {
                std::cout << "consistent\n";
                return 0;
            }
            HSTree tree(parse_mode(mode));
            TreeOutcome out = tree.compute(checker, n);
            print_sets(out.diagnoses, p, verbose);
            if (!out.complete) std::cout << "(incomplete: search cap reached)\n";
        } else if (*conflicts) {
            DiagnosisProblem p = load(file, coherency);
            if (all) {
                std::vector<AxiomSet> sets;
                for (const auto& c : all_minimal_conflicts(p, default_oracle_factory(), kDefaultEnumerationCap,
                                                           Execution::Parallel))
                    sets.push_back(c.axioms);
                print_sets(sets, p, verbose);
            } else {
                auto oracle = default_oracle_factory()(p);
                RequirementChecker checker(p, *oracle);
                auto out = quick_xplain(checker, p.all_axioms());
                if (std::holds_alternative<NoConflict>(out)) std::cout << "no conflicts\n";
                else print_sets({std::get<ConflictSet>(out).axioms}, p, verbose);
            }
        } else if (*interactive) {
            DiagnosisProblem p = load(file, coherency);
            SessionConfig cfg;
            cfg.mode = parse_mode(mode);
            cfg.n = n;
            cfg.measure = measure == "spl" ? Measure::SplitInHalf : Measure::Entropy;
            cfg.queries.singletons_only = singletons;
            Session s(p, cfg);
            std::optional<ScriptedOracle> scripted;
            if (!target.empty()) scripted.emplace(p, parse_target(target, p.size()));
            while (s.phase() == Phase::AwaitingAnswer) {
                std::cout << "leading:";
                for (std::size_t i = 0; i < s.leading().size(); ++i)
                    std::cout << ' ' << format_axioms(s.leading()[i]) << " (" << s.probabilities()[i] << ')';
                std::cout << "\nShould the intended knowledge base entail:\n";
                for (const auto& q : s.pending_query()->sentences) std::cout << "  " << to_string(q) << '\n';
                Answer a;
                if (scripted) {
                    a = (*scripted)(*s.pending_query());
                    std::cout << "> " << to_string(a) << '\n';
                } else {
                    std::string line;
                    for (;;) {
                        std::cout << "[y/n] " << std::flush;
                        if (!std::getline(std::cin, line)) return 1;
                        if (line == "y" || line == "yes") { a = Answer::Yes; break; }
                        if (line == "n" || line == "no") { a = Answer::No; break; }
                    }
                }
                s.submit_answer(a);
            }
            std::cout << "result after " << s.history().size() << " queries:\n";
            for (const auto& r : s.result()) std::cout << format_axioms(r.axioms) << "  p=" << r.probability << '\n';
        } else if (*verify) {
            DiagnosisProblem p = load(file, coherency);
            auto truth = brute_force_diagnoses(p, default_oracle_factory(), kDefaultEnumerationCap, Execution::Parallel);
            std::vector<AxiomSet> expected;
            for (const auto& d : truth) expected.push_back(d.axioms);
            bool ok = true;
            for (TreeMode m : {TreeMode::Classic, TreeMode::Inverse}) {
                auto oracle = default_oracle_factory()(p);
                RequirementChecker checker(p, *oracle);
                HSTree tree(m);
                auto got = tree.compute(checker, std::max<std::size_t>(expected.size(), 1) + 1).diagnoses;
                std::sort(got.begin(), got.end());
                bool same = got == expected;
                ok = ok && same;
                std::cout << to_string(m) << ": " << (same ? "OK" : "MISMATCH") << " (" << got.size() << " diagnoses)\n";
            }
            std::cout << "brute force: " << expected.size() << " minimal diagnoses\n";
            print_sets(expected, p, false);
            return ok ? 0 : 2;
        } else if (*bench) {
            std::cout << to_csv(run_benchmark(parse_bench_spec(spec)));
        } else if (*serve) {
            SessionService service(store.empty() ? std::nullopt : std::optional<std::filesystem::path>(store));
            ApiServer server(service);
            int bound = server.bind(host, port);
            std::cerr << "listening on " << host << ':' << bound << '\n';
            running = &server;
            std::signal(SIGINT, [](int) {
                if (running) running->stop();
            });
            server.run();
        } else if (*dimacs) {
            DiagnosisProblem p = load(file, false);
            std::vector<Sentence> kb = p.background_prime();
            for (const auto& ax : p.ontology().axioms()) kb.push_back(ax.sentence);
            std::cout << to_dimacs(ground(kb, {GroundingReasoner::kAnonymous}));
        }
    } catch (const ParseError& e) {
        std::cerr << file << ':' << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
