#pragma once

#include <string>
#include <variant>

#include "mla/catalog.hpp"
#include "mla/errors.hpp"

namespace mla::io {

inline constexpr const char* kFormatVersion = "1";

enum class Kind { lie, metric, representation, cocycle, extension, catalog_row };
std::string to_string(Kind k);

// A pair (l, a, rho, <,>_a) with a quadratic cocycle on it.
struct CocycleDocument {
  Pair pair;
  QuadraticCocycle cocycle;
};

// `extension` documents hold a standard model (modified when ip_l is present).
using Document = std::variant<LieAlgebra, MetricLieAlgebra, Representation, CocycleDocument, StandardModel, RowKey>;

Kind kind_of(const Document& d);

// Canonical text: fixed key order, sparse brackets and cochains in lexicographic order.
std::string serialize(const Document& d);
// Throws ParseError naming the offending location, or InvalidInput for well-formed but invalid data.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);

template <class T>
const T& expect(const Document& d, const std::string& what) {
  if (const T* p = std::get_if<T>(&d)) return *p;
  throw ParseError("kind", "expected a " + what + " document, got " + to_string(kind_of(d)));
}

}  // namespace mla::io
