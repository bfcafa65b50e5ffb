#pragma once

#include <stdexcept>
#include <string>

namespace bacomp {

enum class ErrorKind {
  Parse,
  UnsupportedAcceptance,
  Capacity,
  Contract,
  AlphabetMismatch,
  Invariant,
};

/// Text prefix used by the CLI when reporting an error of this kind.
const char* error_prefix(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bacomp
