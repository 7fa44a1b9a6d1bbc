#pragma once

#include <stdexcept>
#include <string>

namespace toric {

enum class ErrorKind { domain, usage, resource };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) { throw Error(ErrorKind::domain, what); }
[[noreturn]] inline void fail_usage(const std::string& what) { throw Error(ErrorKind::usage, what); }
[[noreturn]] inline void fail_resource(const std::string& what) { throw Error(ErrorKind::resource, what); }

}  // namespace toric
