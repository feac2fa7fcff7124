#pragma once

#include <stdexcept>
#include <string>

namespace cralg {

// Every thrown error carries a stable machine-readable code ("AxiomViolation",
// "SyntaxError", ...) next to the human message; the CLI prints both.
class CralgError : public std::runtime_error {
  public:
    CralgError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& message) {
    throw CralgError(code, message);
}

}  // namespace cralg
