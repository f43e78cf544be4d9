#pragma once

#include <string>

#include "polyscheme/census.hpp"
#include "polyscheme/cone_manifold.hpp"
#include "polyscheme/hermitian.hpp"
#include "polyscheme/orthoscheme.hpp"

namespace polyscheme {

// Deterministic JSON serialization: fixed field order, floating-point values
// printed with 17 significant digits. Angles appear in the CLI grammar
// ("p/q" meaning p*pi/q, decimals meaning radians); indices are 1-based.

std::string to_json(const Classification& c);
std::string to_json(const TableReport& r);
std::string to_json(const std::vector<SearchHit>& hits);
std::string to_json(const Unfolding& u);
std::string to_json(const OrthoschemeReport& r);

}  // namespace polyscheme
