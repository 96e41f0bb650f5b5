#pragma once

#include <optional>
#include <string>

#include "sturm/complex.hpp"

namespace sturm {

struct ComplexFile {
  CellComplex2 complex;
  std::optional<ThreeCellTemplate> tmpl;
};

// Parses and validates the JSON complex format; sign tokens "+", "-" and "−" are accepted.
ComplexFile parse_complex(const std::string& text);
ComplexFile load_complex(const std::string& path);

std::string complex_to_json(const CellComplex2& c, const ThreeCellTemplate* t = nullptr);
inline std::string template_to_json(const ThreeCellTemplate& t) { return complex_to_json(t.sphere, &t); }

}  // namespace sturm
