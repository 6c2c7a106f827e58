#include "netocc/claims.hpp"

#include <stdexcept>

namespace netocc {

void ClaimMap::record(const std::string& name, bool pass, std::optional<nlohmann::json> witness) {
  if (claims_.contains(name)) throw std::logic_error("claim recorded twice: " + name);
  if (!pass && !witness) witness = nlohmann::json{{"reason", "check returned false"}};
  claims_.emplace(name, Claim{pass, std::move(witness)});
}

void ClaimMap::merge(const ClaimMap& other, const std::string& prefix) {
  for (const auto& [name, claim] : other.claims_) record(prefix + name, claim.pass, claim.witness);
}

std::size_t ClaimMap::failed_count() const {
  std::size_t failed = 0;
  for (const auto& [name, claim] : claims_) {
    if (!claim.pass) ++failed;
  }
  return failed;
}

}  // namespace netocc
