// Text and JSON renderings, and the group fixture format.
//
// Group file: {"q": 3, "m": 7, "generators": [[1, 2, 4]]}
//
// Table JSON: {"q":7,"rows":{"2":[{"n":"64","factors":[[2,6]],"witness":[2,0,0,0,0,0,0]}], ...}}
// Keys appear in the order shown and rows by ascending d, so equal tables
// serialize to identical bytes. Big values are decimal strings.

#pragma once

#include "wexc/circulant.hpp"
#include "wexc/classify.hpp"
#include "wexc/cyclotomic.hpp"
#include "wexc/monomial.hpp"
#include "wexc/semiinv.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace wexc {

/// Throws GroupError(Malformed) on syntax errors, missing fields, negative or
/// non-integer entries.
DiagonalGroup parse_group_json(std::string_view text);
/// As parse_group_json; a missing or unreadable file is also Malformed.
DiagonalGroup read_group_file(const std::filesystem::path& path);

std::string table_to_json(const ClassificationTable& table);
std::string table_to_text(const ClassificationTable& table);

/// {"error": kind, "message": ..., "generator": i?, "witness": [...]?}
std::string group_error_to_json(const GroupError& e);

std::string verdict_to_json(const MonomialGroup& g, const Verdict& v);
std::string verdict_to_text(const MonomialGroup& g, const Verdict& v);

std::string scan_to_text(const ScanReport& r);
std::string bound_report_to_text(const BoundReport& r);

}  // namespace wexc
