#ifndef CONFSPACE_ERRORS_HPP
#define CONFSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace confspace {

struct SpaceMismatch : std::runtime_error {
    explicit SpaceMismatch(const std::string& what) : std::runtime_error("SpaceMismatch: " + what) {}
};

struct AlphabetMismatch : std::runtime_error {
    explicit AlphabetMismatch(const std::string& what) : std::runtime_error("AlphabetMismatch: " + what) {}
};

struct TruncationOverflow : std::runtime_error {
    explicit TruncationOverflow(const std::string& what) : std::runtime_error("TruncationOverflow: " + what) {}
};

struct UnsupportedProduct : std::runtime_error {
    explicit UnsupportedProduct(const std::string& what) : std::runtime_error("UnsupportedProduct: " + what) {}
};

struct LevelMismatch : std::runtime_error {
    explicit LevelMismatch(const std::string& what) : std::runtime_error("LevelMismatch: " + what) {}
};

struct IllegalIndex : std::runtime_error {
    explicit IllegalIndex(const std::string& what) : std::runtime_error("IllegalIndex: " + what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error("ParseError: " + what) {}
};

} // namespace confspace

#endif
