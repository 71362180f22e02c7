#pragma once

#include <stdexcept>
#include <string>

namespace dcp {

// A documented size cap was exceeded. The message names the cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; line is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A polynomial is not in the span of the tree basis k(k-1)^{n-r-1}.
class NotInSpanError : public std::runtime_error {
 public:
  explicit NotInSpanError(const std::string& what) : std::runtime_error(what) {}
};

// A polynomial family is not consistent with any triangle-free graph.
class InconsistentFamilyError : public std::runtime_error {
 public:
  explicit InconsistentFamilyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dcp
