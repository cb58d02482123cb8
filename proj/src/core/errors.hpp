#pragma once

#include <stdexcept>
#include <string>

namespace xyq {

// Error categories; they map one-to-one onto the tool exit codes
// (usage = 1, numeric = 2, resource = 3).

class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

class numeric_error : public std::runtime_error {
public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace xyq
