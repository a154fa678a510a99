#pragma once

#include <string>

#include "json.hpp"
#include "kron/rep.hpp"
#include "kron/structure.hpp"

namespace kron {

using Json = nlohmann::ordered_json;

// Wire format: {"p":2,"k":1,"n":3,"d":[d1,d2],"mats":[[[row],...],...]},
// entries as integers 0..q-1 in the monomial encoding; row-major;
// bit-exact round trip.
Json rep_to_json(const KronRep& m);
KronRep rep_from_json(const Json& j);  // ParseError on malformed input

Json matrix_to_json(const Matrix& m);
Json handle_to_json(const SubmoduleHandle& h);

// Fixed DOT style: source-side vertices as boxes, sink-side as circles,
// edge labels carry the arrow index.
std::string coeff_quiver_dot(const CoeffQuiver& q);

}  // namespace kron
