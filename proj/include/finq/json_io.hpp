#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "finq/born.hpp"
#include "finq/character_table.hpp"
#include "finq/class_algebra.hpp"
#include "finq/cyclotomic.hpp"
#include "finq/decomposition.hpp"
#include "finq/group.hpp"
#include "finq/matrix.hpp"
#include "finq/mixing.hpp"

// JSON forms of the library types. Objects use nlohmann::json's sorted keys,
// so output is byte-stable. Readers throw InputError on malformed input.
namespace finq::io {

using json = nlohmann::json;

/// "p/q", or "p" for integers.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);

/// {"conductor": n, "coeffs": [...]}: coefficients of 1, z, ..., z^{phi(n)-1}
/// for z = exp(2 pi i / n). With `with_float`, adds "float": [re, im].
json to_json(const Cyclotomic& x, bool with_float = false);
Cyclotomic cyclotomic_from_json(const json& j);

/// {"cols", "entries", "rows"}.
json to_json(const CycMatrix& m, bool with_float = false);
CycMatrix matrix_from_json(const json& j);

json classes_to_json(const FiniteGroup& group, const ClassDecomposition& classes);
/// Order, degree, exponent, generators, classes and c(i,j,k) as nested arrays.
json group_report(const FiniteGroup& group, const ClassDecomposition& classes, const ClassAlgebra& algebra);
json to_json(const CharacterTable& table, const FiniteGroup& group, bool with_float = false);
json to_json(const Decomposition& dec, const FiniteGroup& group, bool with_float = false);

json to_json(const NatState& n);
NatState nat_state_from_json(const json& j);
json to_json(const std::vector<InterferencePair>& pairs);

json to_json(const MixTable& t);
json to_json(const PatternReport& r);
json to_json(const Deviation& d);
/// Measured: {"source", "kind": "magnitudes" | "moduli_squared", "entries"}
/// with decimal entries; magnitudes are squared on load. Exact: the output of
/// to_json(MixTable), {"provenance": "exact", "entries": rational strings}.
MixTable mix_table_from_json(const json& j);
MixTable mix_table_from_file(const std::filesystem::path& path);

}  // namespace finq::io
