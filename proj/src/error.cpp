#include "meshperm/error.hpp"

#include <cstdlib>
#include <string>

#include "meshperm/capacity.hpp"

namespace meshperm {

CapacityError::CapacityError(int requested, int limit)
    : Error("n = " + std::to_string(requested) +
            " is outside the enumeration capacity [0, " +
            std::to_string(limit) + "]"),
      requested_(requested),
      limit_(limit) {}

ParseError::ParseError(const std::string& what, int line)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

InvariantError::InvariantError(const std::string& pair_id,
                               const std::string& what)
    : Error(pair_id + ": " + what), pair_id_(pair_id) {}

int default_capacity() {
  const char* env = std::getenv("MESHPERM_NMAX");
  if (env == nullptr || *env == '\0') return kDefaultCapacity;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 0) {
    throw InvalidInput(std::string("MESHPERM_NMAX is not a nonnegative integer: ") + env);
  }
  if (value > kIntegerWidthCeiling) {
    throw InvalidInput("MESHPERM_NMAX = " + std::to_string(value) +
                       " exceeds the 64-bit count ceiling of " +
                       std::to_string(kIntegerWidthCeiling));
  }
  return static_cast<int>(value);
}

void check_capacity(int n, int limit) {
  if (n < 0 || n > limit) throw CapacityError(n, limit);
}

}  // namespace meshperm
