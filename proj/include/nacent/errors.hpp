#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nacent {

/// A desk-scale size limit was hit. `reached` is how far the computation got
/// (for closures, the partial element count) when it stopped.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t cap, std::size_t reached)
      : std::runtime_error(what + " (cap " + std::to_string(cap) + ", reached " + std::to_string(reached) + ")"),
        cap_(cap),
        reached_(reached) {}

  std::size_t cap() const { return cap_; }
  std::size_t reached() const { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

/// A precondition on the group-theoretic input failed (not closed, not
/// normal, not nilpotent, ...).
class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace nacent
