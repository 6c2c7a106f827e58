#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

namespace netocc {

struct Claim {
  bool pass = false;
  // Always present on failure; optional informational payload on success.
  std::optional<nlohmann::json> witness;
};

// Claim name -> outcome, ordered by name for stable output.
class ClaimMap {
 public:
  // A failing claim without a witness gets a generic one so that every
  // failure carries a payload.
  void record(const std::string& name, bool pass, std::optional<nlohmann::json> witness = std::nullopt);
  void merge(const ClaimMap& other, const std::string& prefix = "");

  const std::map<std::string, Claim>& claims() const { return claims_; }
  const Claim& at(const std::string& name) const { return claims_.at(name); }
  bool contains(const std::string& name) const { return claims_.contains(name); }
  std::size_t size() const { return claims_.size(); }
  std::size_t failed_count() const;
  bool all_pass() const { return failed_count() == 0; }

 private:
  std::map<std::string, Claim> claims_;
};

}  // namespace netocc
