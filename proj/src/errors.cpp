#include "bolano/errors.hpp"

#include <utility>

namespace bolano {

ParseError::ParseError(std::string message, std::size_t offset,
                       std::vector<std::string> expected)
    : Error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

}  // namespace bolano
