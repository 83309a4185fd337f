#ifndef PRAAG_ERROR_HPP
#define PRAAG_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace praag {

enum class errc {
  invalid_argument,  // bad inputs, violated preconditions
  validation,        // a verified construction failed one of its obligations
  io,                // file / parse problems
  not_found,         // searches that legitimately come up empty
  internal,          // "cannot happen" states; indicates a bug
};

/// Error with an optional machine-readable witness (JSON text) naming the
/// violated invariant and the offending object.
class Error : public std::runtime_error {
 public:
  Error(errc kind, std::string message, std::string witness_json = "")
      : std::runtime_error(std::move(message)),
        kind_(kind),
        witness_(std::move(witness_json)) {}

  errc kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  errc kind_;
  std::string witness_;
};

[[noreturn]] inline void fail(errc kind, const std::string& msg,
                              const std::string& witness = "") {
  throw Error(kind, msg, witness);
}

}  // namespace praag

#endif
