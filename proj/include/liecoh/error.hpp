#ifndef LIECOH_ERROR_HPP
#define LIECOH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace liecoh {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class dimension_error : public error {
public:
    explicit dimension_error(const std::string& msg) : error(msg) {}
};

/// Input data that does not define a valid object (Jacobi failure, non-ideal, ...).
class invalid_input : public error {
public:
    explicit invalid_input(const std::string& msg) : error(msg) {}
};

/// Text that does not match the algebra/family file grammar.
class parse_error : public error {
public:
    parse_error(std::size_t line, const std::string& msg)
        : error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A consistency check that can only fail through a bug in this library.
class internal_error : public error {
public:
    explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace liecoh

#endif
