#ifndef LIGHTSOUT_ERRORS_HPP
#define LIGHTSOUT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lightsout {

// A configured size/degree cap was exceeded. The CLI maps this to exit code 3.
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lightsout

#endif
