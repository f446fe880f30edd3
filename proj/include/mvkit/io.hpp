#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "mvkit/lusztig.hpp"
#include "mvkit/polytope.hpp"
#include "mvkit/prepmod.hpp"

namespace mvkit {

using json = nlohmann::ordered_json;
using RatModule = PrepModule<Rational>;

json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j, const std::string& ptr);

json datum_to_json(const CartanDatum& d);
DatumPtr datum_from_json(const json& j, const std::string& ptr = "/datum");

json coweight_to_json(const Coweight& c);
Coweight coweight_from_json(const CartanDatum& d, const json& j, const std::string& ptr);
RootVector root_from_json(const CartanDatum& d, const json& j, const std::string& ptr);

// Slices: {"height": H, "roots": [..]} with delta written as "delta", or {"word": [..]},
// or {"coweight": [..], "height": H}.
json slice_to_json(const RootContext& ctx, const ConvexOrderSlice& o);
ConvexOrderSlice slice_from_json(const RootContext& ctx, const json& j, const std::string& ptr);

json partitions_to_json(const std::vector<std::pair<Coweight, Partition>>& p);
std::vector<std::pair<Coweight, Partition>> partitions_from_json(const CartanDatum& d, const json& j,
                                                                 const std::string& ptr);

json lusztig_to_json(const RootContext& ctx, const LusztigDatum& d);
LusztigDatum lusztig_from_json(const RootContext& ctx, const json& j, const std::string& ptr = "");

json polytope_to_json(const GGMSPolytope& P);
// Accepts either {"vertices": [{side, word, coords}]} or {"points": [..]}.
GGMSPolytope polytope_from_json(ContextPtr ctx, const json& j, const std::string& ptr = "");

json module_to_json(const RatModule& m);
RatModule module_from_json(DatumPtr d, const json& j, const std::string& ptr = "");

struct Fixture {
  std::string name;
  std::string kind;  // "datum", "lusztig", "polytope" or "module"
  DatumPtr datum;
  ContextPtr ctx;
  std::optional<LusztigDatum> lusztig;
  std::optional<GGMSPolytope> polytope;
  std::optional<RatModule> module;
};

// Lists schema violations as JSON pointers with a message.
std::vector<std::string> schema_violations(const json& j);

Fixture fixture_from_json(const json& j);
json fixture_to_json(const Fixture& f);
Fixture load_fixture(const std::string& path);

// Directory of bundled fixtures; MVKIT_FIXTURES overrides the compiled default.
std::string fixture_dir();
std::string fixture_path(const std::string& name);

}  // namespace mvkit
