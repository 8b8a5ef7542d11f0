#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace forge {

// Base for every library error. Subcommands map these to exit code 2
// (usage/input) or 1 (mathematical preconditions), see tools/.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raw edge list failed validation (self loop, duplicate/antiparallel pair,
// or a directed cycle; the cycle witness is kept for diagnostics).
struct GraphError : Error {
  enum class Kind { SelfLoop, DuplicateOrAntiparallelEdge, CycleFound };
  Kind kind;
  std::vector<int> cycle;  // nonempty only for CycleFound

  GraphError(Kind k, const std::string& msg, std::vector<int> cyc = {})
      : Error(msg), kind(k), cycle(std::move(cyc)) {}
};

// A size/density precondition of an embedding lemma does not hold.
struct PreconditionError : Error {
  // Smallest host size that would satisfy the precondition, when meaningful.
  long long required_n = -1;
  explicit PreconditionError(const std::string& msg, long long req = -1)
      : Error(msg), required_n(req) {}
};

// Malformed input file; line is 1-based.
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

}  // namespace forge
