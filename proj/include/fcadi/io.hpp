#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "fcadi/context.hpp"

namespace fcadi {

/* Burmeister .cxt layout:
 *
 *   B
 *   <optional name line, followed by a blank line; or just a blank line>
 *   |G|
 *   |M|
 *   <blank line>
 *   |G| object name lines
 *   |M| attribute name lines
 *   |G| rows of exactly |M| characters, 'X' or 'x' incident, '.' not
 *
 * The writer emits no name line. CSV input: header row of attribute names
 * (first cell is the corner and is ignored), then one row per object with the
 * object name first and cells '1'/'X'/'x' vs '0'/'.'/empty.
 */

FormalContext read_cxt(std::istream& in);
FormalContext read_csv(std::istream& in);
void write_cxt(std::ostream& out, const FormalContext& ctx);
std::string to_cxt(const FormalContext& ctx);

enum class ContextFormat { Auto, Cxt, Csv };

// Format from the extension unless forced; InputError on unreadable or
// unrecognizable files, with line/column positions for parse errors.
FormalContext read_context_file(const std::string& path,
                                ContextFormat format = ContextFormat::Auto);

}  // namespace fcadi
