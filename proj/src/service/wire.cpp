#include "pqca/service/wire.hpp"

#include "httplib.h"

#include <charconv>
#include <stdexcept>

namespace pqca::service {

std::string Reply::error() const {
    if (body.is_object() && body.contains("error") && body["error"].is_string()) {
        return body["error"].get<std::string>();
    }
    return {};
}

Reply error_reply(int status, std::string_view code, std::string_view detail) {
    Reply reply{status, Json::object()};
    reply.body["error"] = std::string(code);
    if (!detail.empty()) {
        reply.body["detail"] = std::string(detail);
    }
    return reply;
}

Address parse_address(std::string_view text) {
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
        throw std::invalid_argument("expected host:port, got '" + std::string(text) + "'");
    }
    Address address{std::string(text.substr(0, colon)), 0};
    const auto port = text.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(port.data(), port.data() + port.size(), address.port);
    if (ec != std::errc{} || ptr != port.data() + port.size() || address.port < 0 || address.port > 65535) {
        throw std::invalid_argument("bad port in '" + std::string(text) + "'");
    }
    return address;
}

Reply post_json(const Address &to, std::string_view path, const Json &body, std::chrono::seconds timeout,
                std::string_view bearer_token) {
    httplib::Client client(to.host, to.port);
    client.set_connection_timeout(std::chrono::seconds{5});
    client.set_read_timeout(timeout);
    client.set_write_timeout(timeout);
    httplib::Headers headers;
    if (!bearer_token.empty()) {
        headers.emplace("Authorization", "Bearer " + std::string(bearer_token));
    }
    auto result = client.Post(std::string(path), headers, body.dump(), "application/json");
    if (!result) {
        return error_reply(0, "transport", httplib::to_string(result.error()));
    }
    Reply reply{result->status, Json::object()};
    if (!result->body.empty()) {
        reply.body = Json::parse(result->body, nullptr, false);
        if (reply.body.is_discarded()) {
            reply.body = Json{{"error", "unparseable response"}};
        }
    }
    return reply;
}

}  // namespace pqca::service
