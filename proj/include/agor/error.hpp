#pragma once

#include <stdexcept>
#include <string>

namespace agor {

// Error taxonomy mirrored in the CLI exit codes: usage/parse -> 2,
// mathematical/computational -> 3.
enum class ErrorKind { Usage, Parse, Math };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int col)
        : Error(ErrorKind::Parse,
                msg + " at line " + std::to_string(line) + ", column " +
                    std::to_string(col)),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

class MathError : public Error {
public:
    explicit MathError(const std::string& msg) : Error(ErrorKind::Math, msg) {}
};

class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg)
        : Error(ErrorKind::Usage, msg) {}
};

} // namespace agor
