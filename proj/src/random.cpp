#include "dmc/random.hpp"

namespace dmc {

RandomStream RandomStream::from_entropy() {
  std::random_device device;
  const std::uint64_t seed = (static_cast<std::uint64_t>(device()) << 32) ^ device();
  return RandomStream(seed);
}

}  // namespace dmc
