#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fscsynth {

/// Syntax error in one of the text formats, tagged with a 1-based source position.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& message, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// Structurally well-formed input that violates a model requirement.
class ModelError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace fscsynth
