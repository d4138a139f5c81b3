#pragma once

#include "json.hpp"

#include <chrono>
#include <string>
#include <string_view>

namespace pqca::service {

using Json = nlohmann::json;

/// One HTTP exchange: status plus JSON body. Status 0 means the request
/// never got a response (connection refused, timeout).
struct Reply {
    int status = 200;
    Json body = Json::object();

    [[nodiscard]] bool ok() const noexcept { return status == 200; }
    [[nodiscard]] std::string error() const;
};

Reply error_reply(int status, std::string_view code, std::string_view detail = {});

struct Address {
    std::string host;
    int port = 0;

    [[nodiscard]] std::string to_string() const { return host + ":" + std::to_string(port); }
};

/// Parses "host:port"; throws std::invalid_argument.
Address parse_address(std::string_view text);

/// POSTs `body` as JSON. Thread-safe: opens a fresh connection per call.
Reply post_json(const Address &to, std::string_view path, const Json &body,
                std::chrono::seconds timeout = std::chrono::seconds{120},
                std::string_view bearer_token = {});

}  // namespace pqca::service
