#ifndef LOGOPS_ERRORS_HPP
#define LOGOPS_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace logops {

// Dimension mismatch between operands (matrix shapes, vector lengths).
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed text input. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& what, std::size_t line, std::size_t column) {
        std::string msg = what;
        if (line > 0) {
            msg += " (line " + std::to_string(line);
            if (column > 0) msg += ", position " + std::to_string(column);
            msg += ")";
        }
        return msg;
    }

    std::size_t line_;
    std::size_t column_;
};

// Structurally well-formed input that violates a code invariant
// (e.g. H*G^T != 0, rank-deficient generator matrix, negative ebit count).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Decomposition log cannot be replayed against its outputs.
class ReplayError : public std::runtime_error {
public:
    explicit ReplayError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace logops

#endif
