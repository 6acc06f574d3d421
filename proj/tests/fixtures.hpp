#pragma once

#include "wsep/io/document.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

inline std::string fixture_path(const std::string& name) {
    const char* dir = std::getenv("WSEP_FIXTURES");
    return std::string(dir ? dir : "tests/fixtures") + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline wsep::io::json load_fixture(const std::string& name) { return wsep::io::parse_text(read_fixture(name)); }
