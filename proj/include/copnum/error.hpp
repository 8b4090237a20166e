#pragma once

#include <stdexcept>
#include <string>

namespace copnum {

// Bad input: malformed directions, out-of-range k, unknown names.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured bound (state budget, board fit) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation not defined for this graph mode (e.g. lines on animal graphs).
class UnsupportedMode : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Query outside the region where an oracle is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A strategy produced an illegal move during simulation.
class AdjudicationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A shape does not fit on the board; carries the least board size that works.
class FitError : public InvalidArgument {
 public:
  FitError(const std::string& what, int minimal_n) : InvalidArgument(what), minimal_n_(minimal_n) {}
  int minimal_n() const { return minimal_n_; }

 private:
  int minimal_n_;
};

}  // namespace copnum
