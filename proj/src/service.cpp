#include "mbd/service.hpp"

#include <fstream>

#include <httplib.h>

#include "mbd/parser.hpp"

namespace mbd {

SessionService::SessionService(std::optional<std::filesystem::path> store) : store_(std::move(store)) {
    if (!store_ || !std::filesystem::exists(*store_)) return;
    std::ifstream in(*store_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json rec = Json::parse(line, nullptr, false);
        if (rec.is_discarded() || rec.value("v", 0) != kJsonVersion) continue;
        const std::string id = rec.value("id", "");
        try {
            if (rec.value("op", "") == "create") {
                create_impl(id, rec.at("kb").get<std::string>(), rec.at("config"));
                std::uint64_t num = std::stoull(id.substr(1));
                next_id_ = std::max(next_id_, num + 1);
            } else if (rec.value("op", "") == "answer") {
                auto e = find(id);
                e->session->submit_answer(answer_from_string(rec.at("answer").get<std::string>()));
            }
        } catch (const std::exception&) {
            // A record that no longer applies is skipped.
        }
    }
}

void SessionService::append(const Json& record) {
    if (!store_) return;
    std::lock_guard lock(store_mutex_);
    std::ofstream out(*store_, std::ios::app);
    out << record.dump() << '\n';
    out.flush();
    if (!out) throw StorageFailure("cannot append to " + store_->string());
}

std::string SessionService::create_impl(const std::string& id, const std::string& kb_text, const Json& config) {
    bool coherency = false;
    SessionConfig cfg = config_from_json(config.is_null() ? Json::object() : config, &coherency);
    ProblemText text = parse_problem(kb_text);
    DiagnosisProblem p = build_problem(std::move(text.ontology), std::move(text.background), std::move(text.positive),
                                       std::move(text.negative), coherency);
    auto entry = std::make_shared<Entry>();
    entry->session = std::make_unique<Session>(std::move(p), cfg);
    std::lock_guard lock(mutex_);
    sessions_[id] = std::move(entry);
    return id;
}

std::string SessionService::create(const std::string& kb_text, const Json& config) {
    std::string id;
    {
        std::lock_guard lock(mutex_);
        id = "s" + std::to_string(next_id_++);
    }
    create_impl(id, kb_text, config);
    append(Json{{"v", kJsonVersion}, {"op", "create"}, {"id", id}, {"kb", kb_text}, {"config", config}});
    return id;
}

std::shared_ptr<SessionService::Entry> SessionService::find(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw NotFound("unknown session '" + id + "'");
    return it->second;
}

Json SessionService::state(const std::string& id) {
    auto e = find(id);
    std::lock_guard lock(e->mutex);
    Json j = session_json(*e->session);
    j["id"] = id;
    return j;
}

Json SessionService::answer(const std::string& id, Answer a) {
    auto e = find(id);
    {
        std::lock_guard lock(e->mutex);
        e->session->submit_answer(a);
        append(Json{{"v", kJsonVersion}, {"op", "answer"}, {"id", id}, {"answer", to_string(a)}});
    }
    return state(id);
}

Json SessionService::result(const std::string& id) {
    auto e = find(id);
    std::lock_guard lock(e->mutex);
    return result_json(*e->session);
}

Json SessionService::tree(const std::string& id) {
    auto e = find(id);
    std::lock_guard lock(e->mutex);
    return tree_json(e->session->tree());
}

namespace {

void reply(httplib::Response& res, int status, const Json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

void reply_error(httplib::Response& res, int status, const std::string& what) {
    reply(res, status, Json{{"v", kJsonVersion}, {"error", what}});
}

template <typename Fn>
void guarded(httplib::Response& res, Fn fn) {
    try {
        fn();
    } catch (const NotFound& e) {
        reply_error(res, 404, e.what());
    } catch (const InvalidPhase& e) {
        reply_error(res, 409, e.what());
    } catch (const NotDiagnosable& e) {
        reply_error(res, 422, e.what());
    } catch (const Json::exception& e) {
        reply_error(res, 400, e.what());
    } catch (const Error& e) {
        reply_error(res, 400, e.what());
    } catch (const std::exception& e) {
        reply_error(res, 500, e.what());
    }
}

}  // namespace

ApiServer::ApiServer(SessionService& service) : service_(service), server_(std::make_unique<httplib::Server>()) {
    auto& s = *server_;
    s.Post("/sessions", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            Json body = Json::parse(req.body);
            if (!body.contains("kb") || !body.at("kb").is_string()) throw Error("body needs a \"kb\" string");
            std::string id = service_.create(body.at("kb").get<std::string>(), body.value("config", Json::object()));
            reply(res, 201, service_.state(id));
        });
    });
    s.Get(R"(/sessions/([^/]+))", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { reply(res, 200, service_.state(req.matches[1])); });
    });
    s.Post(R"(/sessions/([^/]+)/answer)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] {
            Json body = Json::parse(req.body);
            Answer a = answer_from_string(body.at("answer").get<std::string>());
            reply(res, 200, service_.answer(req.matches[1], a));
        });
    });
    s.Get(R"(/sessions/([^/]+)/result)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { reply(res, 200, service_.result(req.matches[1])); });
    });
    s.Get(R"(/sessions/([^/]+)/tree)", [this](const httplib::Request& req, httplib::Response& res) {
        guarded(res, [&] { reply(res, 200, service_.tree(req.matches[1])); });
    });
}

ApiServer::~ApiServer() { stop(); }

int ApiServer::bind(const std::string& host, int port) {
    int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
    if (bound < 0) throw BindFailure("cannot bind " + host + ":" + std::to_string(port));
    return bound;
}

void ApiServer::run() { server_->listen_after_bind(); }

void ApiServer::start() {
    thread_ = std::thread([this] { run(); });
    server_->wait_until_ready();
}

void ApiServer::stop() {
    if (server_) server_->stop();
    if (thread_.joinable()) thread_.join();
}

}  // namespace mbd
