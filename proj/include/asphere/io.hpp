#ifndef ASPHERE_IO_HPP_
#define ASPHERE_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "asphere/complex2.hpp"
#include "asphere/freegroup.hpp"
#include "asphere/intlinalg.hpp"
#include "asphere/pi2probe.hpp"
#include "asphere/presentation.hpp"
#include "asphere/ribbon.hpp"

namespace asphere::io {

  using json = nlohmann::json;

  // Word syntax: whitespace separated tokens `g<k>`, `g<k>^<int>` (or an
  // alias in place of g<k>); `1` is the empty word. Errors report the
  // 1-based column of the offending token, offset by `column`.
  Word parse_word(std::string_view                text,
                  std::vector<std::string> const& aliases = {},
                  std::size_t                     line    = 1,
                  std::size_t                     column  = 1);

  // Runs of a letter are written as powers; aliases replace g<k> when given.
  std::string format_word(Word const& w, std::vector<std::string> const& aliases = {});

  // Text file format:
  //   gens: <k>            or   gens: name1 name2 ...
  //   rel <name>: <word>
  //   # comment
  Presentation parse_presentation(std::string_view text);
  std::string  format_presentation(Presentation const& p);

  // { "generators": k, "relators": [[[i, s], ...], ...] }
  json         presentation_to_json(Presentation const& p);
  Presentation presentation_from_json(json const& j);

  json    integer_to_json(Integer const& x);
  Integer integer_from_json(json const& j);

  // { "rows": R, "cols": C, "entries": [[i, j, v], ...] }, 1-based.
  json            matrix_to_json(SparseIntMatrix const& m);
  SparseIntMatrix matrix_from_json(json const& j);

  json       base_change_to_json(BaseChange const& bc);
  BaseChange base_change_from_json(json const& j);
  json       row_log_to_json(RowOpLog const& log);

  json homology_to_json(Homology const& h);

  // { "handles": n, "components": [word, ...] }
  json        surgery_code_to_json(SurgeryCode const& sc);
  SurgeryCode surgery_code_from_json(json const& j);

  json complex_to_json(TwoComplex const& c);

  json cell_set_to_json(CellSet const& s);
  json subcomplex_to_json(SubcomplexSpec const& s);

  // "1,3,5" -> {1, 3, 5}; empty string -> {}.
  std::vector<std::size_t> parse_index_list(std::string_view text);

}  // namespace asphere::io

#endif  // ASPHERE_IO_HPP_
