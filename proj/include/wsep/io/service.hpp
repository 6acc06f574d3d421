#pragma once

#include <string>

namespace wsep::io {

struct response {
    int status = 200;
    std::string body;  // JSON
};

// Stateless request handler behind the wire service. Routes:
//   GET /health, POST /validate, /maximalize, /mutations, /mutate, /tiling, /necklace.
// 400 for documents that fail to parse, 422 for failed preconditions.
response handle_request(const std::string& method, const std::string& path, const std::string& body);

} // namespace wsep::io
