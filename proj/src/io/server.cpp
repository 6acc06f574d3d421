#include "wsep/io/server.hpp"
#include "wsep/io/service.hpp"

#include "httplib.h"

namespace wsep::io {

bool serve(const std::string& host, int port, const std::function<void(const server_handle&)>& ready) {
    httplib::Server srv;
    auto forward = [](const httplib::Request& req, httplib::Response& res) {
        auto r = handle_request(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    srv.Get(".*", forward);
    srv.Post(".*", forward);
    srv.Put(".*", forward);
    srv.Delete(".*", forward);
    int bound = port;
    if (port == 0) {
        bound = srv.bind_to_any_port(host);
        if (bound < 0) return false;
    } else if (!srv.bind_to_port(host, port)) {
        return false;
    }
    if (ready) ready(server_handle{[&srv] { srv.stop(); }, bound});
    return srv.listen_after_bind();
}

} // namespace wsep::io
