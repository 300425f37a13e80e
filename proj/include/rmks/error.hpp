#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rmks {

// Error with a stable machine-readable code ("NonSquarefree", "BadSignPattern", ...)
// next to the human-readable message. The CLI surfaces the code and exits 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace rmks
