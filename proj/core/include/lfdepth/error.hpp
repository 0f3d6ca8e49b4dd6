#pragma once

#include <stdexcept>
#include <string>

namespace lfd {

/// Error categories, mapped to distinct CLI exit codes.
enum class ErrorKind { io, config, param, pipeline };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void throw_io(const std::string& msg) { throw Error(ErrorKind::io, msg); }
[[noreturn]] inline void throw_config(const std::string& msg) { throw Error(ErrorKind::config, msg); }
[[noreturn]] inline void throw_param(const std::string& msg) { throw Error(ErrorKind::param, msg); }
[[noreturn]] inline void throw_pipeline(const std::string& msg) { throw Error(ErrorKind::pipeline, msg); }

}  // namespace lfd
