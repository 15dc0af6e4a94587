#pragma once

#include <stdexcept>
#include <string>

namespace symfix {

// Input that cannot be parsed (graph6 syntax, malformed report files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was exceeded (vertex cap, enumeration cap,
// subset-sweep cap, 64-bit group-order overflow).
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Arguments outside an operation's domain (bad family parameters,
// out-of-range vertices, disconnected input where connectivity is required).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace symfix
