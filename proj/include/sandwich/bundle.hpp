#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sandwich/sandwich.hpp"

namespace sandwich {

/// Everything `build` produces: ambient roots, alignment, center and the hat
/// system with its fibers.
struct Bundle {
  RootSystem ambient;
  Alignment alignment;
  CenterReport center;
  HatSystem hat;

  friend bool operator==(const Bundle&, const Bundle&) = default;
};

inline constexpr const char* kBundleFormat = "sandwich-bundle/1";

/// Malformed JSON input (wrong shape, non-reduced rational, unknown type).
class BundleParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json rat_to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);
nlohmann::json vec_to_json(const RatVec& v);
RatVec vec_from_json(const nlohmann::json& j);
/// {"rows": r, "cols": c, "entries": [row-major]}.
nlohmann::json mat_to_json(const RatMat& m);
RatMat mat_from_json(const nlohmann::json& j);

nlohmann::json center_to_json(const CenterReport& c);

nlohmann::json to_json(const Bundle& b);
/// Throws BundleParseError.
Bundle bundle_from_json(const nlohmann::json& j);

}  // namespace sandwich
