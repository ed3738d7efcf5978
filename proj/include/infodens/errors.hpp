#pragma once

#include <stdexcept>
#include <string>

namespace infodens {

// All errors carry the module and operation that raised them so the CLI can
// report "[module.op] message" and map the class to an exit code.
class error : public std::runtime_error {
  public:
    error(std::string module, std::string op, const std::string& message)
        : std::runtime_error("[" + module + "." + op + "] " + message),
          module_(std::move(module)), op_(std::move(op)) {}

    const std::string& module_name() const noexcept { return module_; }
    const std::string& op_name() const noexcept { return op_; }

  private:
    std::string module_;
    std::string op_;
};

// Rejected input, bad config, capacity overruns: CLI exit code 1.
class input_error : public error {
  public:
    using error::error;
};

// Numerical failure (non-convergence, accuracy loss): CLI exit code 2.
class solver_error : public error {
  public:
    using error::error;
};

} // namespace infodens
