#ifndef PCUBE_ERROR_HPP
#define PCUBE_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace pcube {

// Domain error with a stable machine-readable code ("NotAnEdge",
// "Disconnected", ...) alongside the human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace pcube

#endif
