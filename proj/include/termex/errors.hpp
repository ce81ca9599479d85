#ifndef TERMEX_ERRORS_HPP
#define TERMEX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace termex {

// Error in a line-oriented input (corpus or resource file). Carries the file
// name and the 1-based line number (0 when the whole file is at fault).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string file, std::size_t line, const std::string& message)
        : std::runtime_error(format(file, line, message)),
          file_(std::move(file)),
          line_(line) {}

    const std::string& file() const { return file_; }
    std::size_t line() const { return line_; }

private:
    static std::string format(const std::string& file, std::size_t line,
                              const std::string& message) {
        if (line == 0) return file + ": " + message;
        return file + ":" + std::to_string(line) + ": " + message;
    }

    std::string file_;
    std::size_t line_;
};

// Filesystem-level failure (unreadable input, unwritable output).
class IoError : public std::runtime_error {
public:
    IoError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace termex

#endif
