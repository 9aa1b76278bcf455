#pragma once

#include "core/moduli.hpp"

#include <string>

namespace semitoric {

// Deterministic standalone SVG documents: same input, same bytes.
std::string render_svg(const ToricFan& f);
std::string render_svg(const SemitoricFan& f);
std::string render_svg(const PrimitiveSemitoricPolygon& p);
std::string render_svg(const IngredientList& m);
std::string render_svg_empty();

}  // namespace semitoric
