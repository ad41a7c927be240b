#ifndef CONDALG_TYPES_HPP
#define CONDALG_TYPES_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace condalg {

// Element of a finite Boolean algebra, as a bitmask over atoms.
using Elem = std::uint32_t;

// Set of elements, one bit per element value.  Valid while 2^atoms <= 64.
using ElemSet = std::uint64_t;

// Set of ultrafilters (equivalently, of frame points), one bit per index.
using UfSet = std::uint32_t;
using PointSet = UfSet;

// Bad user-supplied data: malformed documents, out-of-range arguments.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Violated precondition or broken internal invariant.  Seeing one of these
// means either the caller fed a structure outside the documented domain or
// the library itself is wrong.
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

struct Binding {
  std::string name;
  std::uint64_t value = 0;
  bool operator==(const Binding&) const = default;
};

// Outcome of a checked law.  When holds is false, counterexample carries the
// lexicographically least violating assignment in quantifier-prefix order.
struct Verdict {
  bool holds = true;
  std::vector<Binding> counterexample;
  std::string note;

  static Verdict ok(std::string note = "") {
    Verdict v;
    v.note = std::move(note);
    return v;
  }
  static Verdict fail(std::vector<Binding> cex, std::string note = "") {
    Verdict v;
    v.holds = false;
    v.counterexample = std::move(cex);
    v.note = std::move(note);
    return v;
  }
};

}  // namespace condalg

#endif
