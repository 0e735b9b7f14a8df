#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "vbraid/gsd.hpp"
#include "vbraid/homology.hpp"
#include "vbraid/linrep.hpp"
#include "vbraid/matrix.hpp"
#include "vbraid/sdstruct.hpp"

namespace vbraid {

using Json = nlohmann::json;

// [[coeff, [et, es, eu, ev]], ...]; coefficients beyond 64 bits are decimal
// strings. Input also accepts a bare integer or a to_string polynomial.
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

// {"rows": r, "cols": c, "entries": [[i, j, poly], ...]} with 0-based
// indices; input may also be a dense array of rows.
Json to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const Json& j);

// Elements are 1-indexed in JSON: {"size": m, "op": [[...]], "inv": ..., "f": [...]}.
// A bare array of rows is accepted as "op".
Json to_json(const FiniteRackTable& t);
FiniteRackTable rack_from_json(const Json& j);
Json table_to_json(const Table& t);
Table table_from_json(const Json& j, int size);

// {"dim": d, "mu": [i][j][k], "nu": [...], "bracket": ..., "group": table}.
Json to_json(const StructureConstants& sc);
StructureConstants constants_from_json(const Json& j);

// {"name", "dim", "mode": "sum" | "tensor", "sigma", "sigma_inv", "c", "f"};
// c defaults to the flip.
Json to_json(const LinearBraidedObject& o);
LinearBraidedObject braided_object_from_json(const Json& j);

// Set backend: {"backend": "set", "size": m, "delta": [[a, b], ...],
// "triangle": table, "triangle_tilde": table}, 1-indexed.
// Linear backend: {"backend": "linear", "dim": d, "delta": matrix,
// "triangle": matrix, "counit": matrix, "triangle_tilde": matrix}.
Json to_json(const GsdStructure& g);
GsdStructure gsd_from_json(const Json& j);

Json to_json(const GsdReport& r);
Json to_json(const CoalgebraReport& r);
Json to_json(const ComplexReport& r);
Json to_json(const HomologyResult& h);
Json to_json(const YbReport& r);

Json load_json_file(const std::string& path);

}  // namespace vbraid
