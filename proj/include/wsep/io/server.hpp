#pragma once

#include <functional>
#include <string>

namespace wsep::io {

// Serves handle_request over HTTP until stop() is called on the handle passed
// to `ready` (or forever). Returns false when the address cannot be bound.
struct server_handle {
    std::function<void()> stop;
    int port = 0;
};

bool serve(const std::string& host, int port, const std::function<void(const server_handle&)>& ready = {});

} // namespace wsep::io
