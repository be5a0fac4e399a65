#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace numsemi {

using Int = std::int64_t;

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyGenerators : public Error {
 public:
  EmptyGenerators()
      : Error("generator list is empty after dropping zeros and duplicates") {}
};

class GcdNotOne : public Error {
 public:
  explicit GcdNotOne(Int gcd)
      : Error("generators have gcd " + std::to_string(gcd) +
              ", a numerical semigroup needs gcd 1"),
        gcd_(gcd) {}
  Int gcd() const { return gcd_; }

 private:
  Int gcd_;
};

class NotAMember : public Error {
 public:
  explicit NotAMember(Int value)
      : Error(std::to_string(value) + " is not an element of the semigroup"),
        value_(value) {}
  Int value() const { return value_; }

 private:
  Int value_;
};

class GapNotInSemigroup : public Error {
 public:
  explicit GapNotInSemigroup(Int gap)
      : Error("gap " + std::to_string(gap) +
              " does not lie in the ambient semigroup"),
        gap_(gap) {}
  Int gap() const { return gap_; }

 private:
  Int gap_;
};

class NotDownClosed : public Error {
 public:
  NotDownClosed(Int gap, Int predecessor)
      : Error("gap set is not closed under semigroup predecessors: " +
              std::to_string(gap) + " is removed but " +
              std::to_string(predecessor) + " is not"),
        gap_(gap),
        predecessor_(predecessor) {}
  Int gap() const { return gap_; }
  Int predecessor() const { return predecessor_; }

 private:
  Int gap_;
  Int predecessor_;
};

class NotAMinimalGenerator : public Error {
 public:
  explicit NotAMinimalGenerator(Int value)
      : Error(std::to_string(value) +
              " is not a minimal generator of the semimodule"),
        value_(value) {}
  Int value() const { return value_; }

 private:
  Int value_;
};

class AlreadyFull : public Error {
 public:
  AlreadyFull() : Error("semimodule has codimension 0, no gap to restore") {}
};

}  // namespace numsemi
