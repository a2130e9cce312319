#ifndef QPC_ERROR_HPP
#define QPC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qpc {

// Every failure carries a short machine-readable code; the CLI prints
// "ERROR <code>: <message>" and exits nonzero.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

}  // namespace qpc

#endif
