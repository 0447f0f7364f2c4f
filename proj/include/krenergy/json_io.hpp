#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "krenergy/birational.hpp"
#include "krenergy/crystal.hpp"
#include "krenergy/identities.hpp"
#include "krenergy/lsym.hpp"
#include "krenergy/tableaux.hpp"

namespace krenergy {

using Json = nlohmann::json;

/// Malformed or out-of-range user input.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses text, mapping syntax errors to InputError.
Json parse_json(const std::string& text);

// Tensors: {"n":4,"factors":[[1,0,1,0],...]} with counts per letter 1..n, or
// {"n":4,"rows":["13","1224"]} for n <= 9.
TensorElement tensor_from_json(const Json& j);
Json tensor_to_json(const TensorElement& b);

// A pair of factors uses the tensor format with exactly two factors.
std::pair<CrystalElement, CrystalElement> pair_from_json(const Json& j);
Json pair_to_json(const CrystalElement& b1, const CrystalElement& b2);

Json poly_to_json(const ColoredPoly& p);
ColoredPoly poly_from_json(const Json& j);

Json point_to_json(const RationalPoint& p);
RationalPoint point_from_json(const Json& j);

Json grid_to_json(const TropicalGrid& g);

/// Array of rows; inner cells of a skew shape are null.
Json ssyt_to_json(const Ssyt& t);
Ssyt ssyt_from_json(const Json& j, int max_entry);

Json rational_to_json(const mpq_class& q);

Json report_to_json(const IdentityReport& report);

}  // namespace krenergy
