#pragma once

#include <string>

#include <json.hpp>

#include "semistab/surface_rep.hpp"

namespace semistab {

// Representation file format: JSON with exact scalars only. Rationals are
// strings "p" or "p/q" (integer JSON numbers also accepted on input), twists
// are {"k": k, "n": n}, matrices are {"twist": ..., "body": [[...]]} (a bare
// row array is accepted on input and means an untwisted matrix). A direct
// sum is {"sum": [rep, rep, ...]}. With a top-level "conductor" N, body
// entries may also be coefficient lists of length phi(N) in Q(zeta_N); such
// matrices must factor as root-of-unity * rational.
//
// Serialization is canonical: reduced fractions, sorted keys, twists always
// present, two-space indent, trailing newline. parse(serialize(x)) is the
// identity and serialize(parse(s)) == s for canonical s.

RepInput parse_representation(const nlohmann::json& j);
RepInput parse_representation_text(const std::string& text);
RepInput load_representation(const std::string& path);

nlohmann::json representation_json(const SurfaceRepresentation& rep);
nlohmann::json representation_json(const RepInput& input);
std::string serialize_representation(const RepInput& input);
void save_representation(const RepInput& input, const std::string& path);

// Helpers shared with the CLI report writers.
nlohmann::json rational_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

}  // namespace semistab
