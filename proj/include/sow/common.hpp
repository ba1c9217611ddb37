#ifndef SOW_COMMON_HPP
#define SOW_COMMON_HPP

#include <stdexcept>
#include <string>

namespace sow {

// Thrown when an exhaustive computation would exceed its configured size
// limit. Callers distinguish this from contract violations so the CLI can
// map it to a dedicated exit code.
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sow

#endif
