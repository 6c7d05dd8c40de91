#include "partgen/generate.hpp"

#include <string>

namespace partgen {

std::string_view to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::kV1: return "v1";
    case Algorithm::kV2: return "v2";
    case Algorithm::kV3: return "v3";
  }
  return "?";
}

std::vector<std::vector<Part>> collect(Algorithm alg, std::uint64_t n) {
  if (n > kMaxCollectN) {
    throw CapacityError("collect materializes p(n) compositions; n <= " +
                        std::to_string(kMaxCollectN) + " required, got " +
                        std::to_string(n));
  }
  std::vector<std::vector<Part>> out;
  generate(alg, n, [&](CompositionView c) { out.emplace_back(c.begin(), c.end()); });
  return out;
}

}  // namespace partgen
