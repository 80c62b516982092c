#pragma once

#include <stdexcept>
#include <string>

namespace silink {

// Config/domain validation failures. The CLI maps these to exit code 1.
class InvalidArgument : public std::runtime_error {
public:
	explicit InvalidArgument(const std::string &msg) : std::runtime_error(msg) {}
};

// Degenerate math (singular conversions, non-real inverse transforms).
// The CLI maps these to exit code 2.
class NumericalError : public std::runtime_error {
public:
	explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

// Malformed input file; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
public:
	ParseError(const std::string &msg, size_t line)
		: std::runtime_error(msg + " (line " + std::to_string(line) + ")"), m_line(line) {}
	size_t line() const { return m_line; }

private:
	size_t m_line;
};

// Recognized but unsupported file flavor (e.g. Touchstone v2, odd port counts).
class UnsupportedFormat : public std::runtime_error {
public:
	explicit UnsupportedFormat(const std::string &msg) : std::runtime_error(msg) {}
};

// Channel structure outside the supported shapes (e.g. two coupled elements).
class UnsupportedTopology : public std::runtime_error {
public:
	explicit UnsupportedTopology(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace silink
