#ifndef REES_MATFILE_HPP
#define REES_MATFILE_HPP

#include <iosfwd>
#include <string>

#include "rees/matrix.hpp"

namespace rees {

// Plain-text matrix file:
//
//   # comments run to end of line
//   ring d=3 T=4 field=32003      (field=QQ for rationals)
//   matrix 4 3
//   x1 0 0
//   ...
//
// Entries are whitespace-separated polynomial strings; layout within the
// body is free-form as long as rows*cols entries follow the matrix line.
PolyMatrix matfile_parse(std::istream& in);
PolyMatrix matfile_parse_string(const std::string& text);

// Serialize in the same format; `header_comment` lines (if any) are
// emitted first, each prefixed with "# ".
std::string matfile_write(const PolyMatrix& M,
                          const std::vector<std::string>& header_comment = {});

}  // namespace rees

#endif
