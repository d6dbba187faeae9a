#ifndef RECRUIT_ERRORS_HPP
#define RECRUIT_ERRORS_HPP

#include <stdexcept>

namespace recruit {

// Error taxonomy mirrors the CLI exit-code contract:
//   ConfigError -> 2, DataError -> 3, NumericalError -> 4.
// Plain std::domain_error is used for out-of-domain arguments to math kernels.

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace recruit

#endif
