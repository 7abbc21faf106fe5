#pragma once

#include <string>

#include "json.hpp"
#include "nrb/matrix.hpp"

namespace nrb {

/// Strict converters for the on-disk JSON formats. Matrix documents look like
/// {"rows": m, "cols": n, "entries": [[[re,im], ...], ...]} with m rows of n
/// [re,im] pairs; vectors use {"dim": d, "entries": [[re,im], ...]}; block
/// documents use {"dims": [d1,...,dn], "blocks": [[cell, ...], ...]} where a
/// cell is null (zero block) or a full matrix document of matching shape.
/// Malformed documents raise std::invalid_argument with a description.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
ComplexVector vector_from_json(const nlohmann::json& j);
BlockMatrix block_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ComplexMatrix& m);
nlohmann::json vector_to_json(const ComplexVector& v);
nlohmann::json block_to_json(const BlockMatrix& t);

/// File loaders: read, parse, convert; failures (missing file, bad JSON,
/// format violations) raise std::invalid_argument naming the path.
ComplexMatrix load_matrix(const std::string& path);
ComplexVector load_vector(const std::string& path);
BlockMatrix load_block(const std::string& path);

/// A real matrix (e.g. a bound matrix) as a plain 2-d array of reals; used by
/// the CLI report schema. Imaginary parts must be exactly zero.
nlohmann::json real_matrix_to_json(const ComplexMatrix& m);

}  // namespace nrb
