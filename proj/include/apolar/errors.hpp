#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apolar {

/// Two values from different ambient rings (different variable counts) met.
class AmbientMismatch : public std::invalid_argument {
 public:
  AmbientMismatch(std::size_t lhs, std::size_t rhs)
      : std::invalid_argument("ambient mismatch: " + std::to_string(lhs) +
                              " vs " + std::to_string(rhs) + " variables") {}
};

/// An operation was called outside its mathematical domain
/// (unit ideal passed to docle, empty antichain, p = 0 mod the power ideal, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A homogeneous ideal did not become zero-dimensional before the degree cutoff.
class NotArtinian : public DomainError {
 public:
  explicit NotArtinian(int cutoff)
      : DomainError("ideal is not artinian below degree cutoff " +
                    std::to_string(cutoff)),
        cutoff_(cutoff) {}
  int cutoff() const noexcept { return cutoff_; }

 private:
  int cutoff_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error("parse error at offset " + std::to_string(offset) +
                           ": " + what),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace apolar
