#pragma once

#include <string>

#include "json.hpp"

#include "census/crystallographic.hpp"
#include "census/homology.hpp"
#include "census/lowindex.hpp"
#include "census/presentations.hpp"

namespace census {

// "p/q" with the slash omitted for integers; parse accepts both forms.
std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& s);

nlohmann::json table_to_json(const CosetTable& t);
CosetTable table_from_json(const nlohmann::json& j);

// {"rank": r, "torsion": [d1, ...], "name": "Z^r x Z/d1 ..."}; torsion
// entries that fit in 64 bits are numbers, larger ones decimal strings.
nlohmann::json abelian_to_json(const AbelianGroup& A);

nlohmann::json presentation_to_json(const Presentation& P);

// {"dim": n, "gram": [[..]], "ops": [{"matrix": [[..]], "translation":
// ["0", "1/2", ...]}, ...]}
nlohmann::json crystal_to_json(const CrystalGroup& C);
CrystalGroup crystal_from_json(const nlohmann::json& j);

CrystalGroup load_crystal_file(const std::string& path);

}  // namespace census
