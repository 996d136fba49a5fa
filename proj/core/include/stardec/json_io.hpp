#pragma once

#include <string>
#include <vector>

#include <stardec/detail/json.hpp>

#include "stardec/decompose.hpp"
#include "stardec/hardness.hpp"
#include "stardec/multigraph.hpp"
#include "stardec/multiset.hpp"
#include "stardec/packing.hpp"
#include "stardec/tournament.hpp"

// JSON (de)serialization for every type the CLI speaks. All parsers throw
// InputError with a pointed message on malformed input; all emitters are
// deterministic so identical data gives byte-identical files.
namespace stardec::io {

using json = nlohmann::json;

json parse_file(const std::string& path);
json parse_text(const std::string& text, const std::string& origin);
std::string dump(const json& j);  // 2-space indent, trailing newline

// Multisets: flat array [9,5,1] or run-length [[121,323],[26,1]]. Emitters
// use run-length exactly when it is the shorter encoding.
IntMultiset multiset_from_json(const json& j, const std::string& what);
json multiset_to_json(const IntMultiset& m);

// Multigraphs: {"n":10,"edges":[[u,v,mult],...]} or {"n":10,"lambda":2}.
Multigraph multigraph_from_json(const json& j);
json multigraph_to_json(const Multigraph& g);

// Center prescriptions: {"0":[9,5,1],"3":[[2,4]]}; vertices may be omitted.
CenterSpec centers_from_json(const json& j, int n);
json centers_to_json(const CenterSpec& spec);

DecompInstance instance_from_json(const json& j);
json instance_to_json(const DecompInstance& inst);

std::vector<Star> stars_from_json(const json& j, int n);
json stars_to_json(const std::vector<Star>& stars);

// Restriction-function certificate with its evaluation.
json certificate_to_json(const RestrictionFunction& f, const DeltaReport& report);

TournamentSpec tournament_spec_from_json(const json& j);
Tournament tournament_from_json(const json& j);
json tournament_to_json(const Tournament& t);

// 3-partition values, either a JSON array or a comma list like "2,2,3".
ThreePartition partition_from_json(const json& j);
ThreePartition partition_from_text(const std::string& text);

json hard_odd_to_json(const HardOddParams& par);
json hard_even_to_json(const HardEvenParams& par);

}  // namespace stardec::io
