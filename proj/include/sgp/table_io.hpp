// Table file format:
//   line 1:        sgp-table 1
//   line 2:        n
//   lines 3..n+2:  n space-separated 0-based entries each
//   then optional: name <index> <utf8-token>
// Lines starting with '#' are ignored; LF line endings on output.

#ifndef SGP_TABLE_IO_HPP_
#define SGP_TABLE_IO_HPP_

#include <iosfwd>
#include <string>

#include "sgp/finite.hpp"

namespace sgp {

// Throws format_error on any deviation from the format.
RawTable read_table(std::istream& in);
RawTable read_table_file(const std::string& path);

void write_table(std::ostream& out, const RawTable& table);
void write_table_file(const std::string& path, const RawTable& table);

}  // namespace sgp

#endif  // SGP_TABLE_IO_HPP_
