#pragma once

#include <string>

#include "json.hpp"
#include "zeta/dirichlet_series.hpp"
#include "zeta/posets.hpp"
#include "zeta/power_series.hpp"
#include "zeta/rational_function.hpp"
#include "zeta/simplicial.hpp"

namespace zeta {

using Json = nlohmann::json;

/// Series serialize as arrays of canonical rational strings ("p" or "p/q"),
/// ascending: power series by exponent from t^0, Dirichlet coefficients from
/// c_1.  Readers throw InvalidInputError on shape or number-format problems.
Json series_to_json(const PowerSeries& s);
PowerSeries series_from_json(const Json& j);

Json dirichlet_to_json(const DirichletCoefficients& c);
DirichletCoefficients dirichlet_from_json(const Json& j);

/// {"numerator": [...], "denominator": [...]}: two integer-coefficient
/// arrays in ascending degree, each entry a decimal string.
Json rational_function_to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const Json& j);

/// {"elements": [ids...], "covers": [[lo, hi], ...]}.  The writer emits
/// elements in index order and the covering relations of the order (its
/// transitive reduction); the reader accepts any relations whose transitive
/// closure is a partial order, per FinitePoset::from_covers.
Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

/// {"levels": [[ids...], ...],
///  "faces": {"n,i": {src: dst, ...}, ...},
///  "degeneracies": {"n,i": {src: dst, ...}, ...}}
/// where "n,i" names d_i (1 <= n <= L, 0 <= i <= n) or s_i (0 <= n < L,
/// 0 <= i <= n) on level n, and each inner object maps every level-n id to
/// its image id.  The reader rejects missing/duplicate/unknown entries and
/// then revalidates the simplicial identities via the constructor.
Json simplicial_to_json(const TruncatedSimplicialSet& k);
TruncatedSimplicialSet simplicial_from_json(const Json& j);

/// Functionals on K_1 as {edge-id: rational-string, ...}.  Edges absent from
/// the object read as 0; unknown ids are rejected.
Json functional_to_json(const Functional& f, const TruncatedSimplicialSet& k);
Functional functional_from_json(const Json& j, const TruncatedSimplicialSet& k);

/// File helpers; both throw InvalidInputError (missing file, parse error).
/// save_json_file writes 2-space-indented text with a trailing newline.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);

}  // namespace zeta
