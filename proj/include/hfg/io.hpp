#ifndef HFG_IO_HPP
#define HFG_IO_HPP

#include "hfg/fatgrid.hpp"
#include "hfg/ideal.hpp"
#include "hfg/invariants.hpp"
#include "hfg/polynomial.hpp"
#include "hfg/projective.hpp"
#include "hfg/verify.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace hfg {

using Json = nlohmann::json;

/// Parses "c*x0^a*x1^b + ..." over `block`. Coefficients may be written
/// num/den; a missing coefficient or exponent means 1.
Polynomial parse_polynomial(std::string_view text, const BlockPtr& block = plane_block());

/// Accepts either the text form or a list of ["num/den", [e0, e1, ...]].
Polynomial polynomial_from_json(const Json& j, const BlockPtr& block = plane_block());
Json polynomial_to_json(const Polynomial& p);

/// {"vars": [...], "gens": [...]}; "vars" defaults to x0, x1, x2.
IdealPresentation ideal_from_json(const Json& j);
Json ideal_to_json(const IdealPresentation& ideal);

/// ["1", "2", "3/2"]; plain numbers are accepted too.
Point point_from_json(const Json& j);
Json point_to_json(const Point& p);

/// {"P": [[...]], "M": [...], "Q": [[...]], "N": [...]} or abstract {"M", "N"}.
/// Explicit points take precedence when both forms are present.
FatGrid grid_from_json(const Json& j);
Json grid_to_json(const FatGrid& grid);

/// "2,3,3" -> {2, 3, 3}; entries must be positive.
std::vector<unsigned> parse_multiplicities(std::string_view text);

/// Reads and parses a JSON file; throws ParseError with the path on failure.
Json load_json_file(const std::string& path);

Json resolution_to_json(const FatGrid& grid);
Json generators_to_json(const FatGrid& grid);
/// Invariants report; "resurgence" is 1 when the certificate up to t_max
/// passes and null otherwise.
Json invariants_to_json(const FatGrid& grid, unsigned t_max);
Json certificate_to_json(const ResurgenceCertificate& cert);
Json report_to_json(const VerificationReport& report);

/// Aligned plain-text rendering of the same data.
std::string render_table(const Json& j);

} // namespace hfg

#endif
