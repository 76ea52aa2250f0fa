#pragma once

#include <stdexcept>
#include <string>

namespace meshperm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// n exceeds the configured enumeration ceiling.
class CapacityError : public Error {
 public:
  CapacityError(int requested, int limit);
  int requested() const { return requested_; }
  int limit() const { return limit_; }

 private:
  int requested_;
  int limit_;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  // line == 0 means the input was not line-oriented.
  ParseError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

// A catalog entry violates one of its invariants.
class InvariantError : public Error {
 public:
  InvariantError(const std::string& pair_id, const std::string& what);
  const std::string& pair_id() const { return pair_id_; }

 private:
  std::string pair_id_;
};

// Precondition of a partial map was violated (e.g. input outside its domain).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Something the mathematics says cannot happen did happen.
class InternalError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace meshperm
