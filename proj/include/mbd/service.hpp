#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>

#include "mbd/errors.hpp"
#include "mbd/json_io.hpp"

namespace httplib {
class Server;
}

namespace mbd {

struct NotFound : Error {
    using Error::Error;
};

struct StorageFailure : Error {
    using Error::Error;
};

struct BindFailure : Error {
    using Error::Error;
};

// Session registry behind the HTTP API. Every create/answer is appended to
// an optional JSON-lines log and replayed on construction, so sessions
// survive restarts. Transitions of one session are serialized.
class SessionService {
public:
    explicit SessionService(std::optional<std::filesystem::path> store = std::nullopt);

    // Returns the new session id.
    std::string create(const std::string& kb_text, const Json& config);
    Json state(const std::string& id);
    Json answer(const std::string& id, Answer a);
    Json result(const std::string& id);
    Json tree(const std::string& id);

private:
    struct Entry {
        std::mutex mutex;
        std::unique_ptr<Session> session;
    };

    std::string create_impl(const std::string& id, const std::string& kb_text, const Json& config);
    std::shared_ptr<Entry> find(const std::string& id);
    void append(const Json& record);

    std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Entry>> sessions_;
    std::uint64_t next_id_ = 1;
    std::optional<std::filesystem::path> store_;
    std::mutex store_mutex_;
};

// HTTP front end:
//   POST /sessions              {"kb": text, "config": {...}}  -> 201 state + id
//   GET  /sessions/{id}                                       -> state
//   POST /sessions/{id}/answer  {"answer": "yes"|"no"}        -> state (409 out of phase)
//   GET  /sessions/{id}/result                                -> final set (409 before done)
//   GET  /sessions/{id}/tree                                  -> tree snapshot
// Errors: 400 malformed input, 404 unknown id, 422 not diagnosable.
class ApiServer {
public:
    explicit ApiServer(SessionService& service);
    ~ApiServer();

    // Binds to host:port (0 picks a free port) and returns the bound port.
    int bind(const std::string& host, int port);
    void run();    // blocks until stop()
    void start();  // run() on a background thread
    void stop();

private:
    SessionService& service_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
};

}  // namespace mbd
