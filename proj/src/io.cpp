#include "asphere/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <set>

#include "asphere/error.hpp"

namespace asphere::io {

  namespace {
    constexpr long long max_exponent = 1'000'000;

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    bool is_identifier(std::string_view s) {
      if (s.empty()) {
        return false;
      }
      if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
      }
      for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
          return false;
        }
      }
      return true;
    }

    template <typename T>
    bool parse_number(std::string_view s, T& out) {
      if (s.empty()) {
        return false;
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size();
    }

    GenIndex resolve_generator(std::string_view                base,
                               std::vector<std::string> const& aliases,
                               std::size_t line, std::size_t column) {
      for (std::size_t k = 0; k < aliases.size(); ++k) {
        if (aliases[k] == base) {
          return static_cast<GenIndex>(k + 1);
        }
      }
      if (base.size() >= 2 && base[0] == 'g') {
        GenIndex index = 0;
        if (parse_number(base.substr(1), index) && index >= 1) {
          return index;
        }
        if (parse_number(base.substr(1), index)) {
          throw ParseError(line, column, "generator index must be at least 1 in '"
                                             + std::string(base) + "'");
        }
      }
      throw ParseError(line, column, "unknown generator '" + std::string(base) + "'");
    }

    std::string trim(std::string_view s) {
      std::size_t b = 0, e = s.size();
      while (b < e && is_space(s[b])) {
        ++b;
      }
      while (e > b && is_space(s[e - 1])) {
        --e;
      }
      return std::string(s.substr(b, e - b));
    }
  }  // namespace

  Word parse_word(std::string_view                text,
                  std::vector<std::string> const& aliases,
                  std::size_t                     line,
                  std::size_t                     column) {
    std::vector<Letter> raw;
    std::size_t         pos    = 0;
    bool                tokens = false;
    while (pos < text.size()) {
      if (is_space(text[pos])) {
        ++pos;
        continue;
      }
      std::size_t const start = pos;
      while (pos < text.size() && !is_space(text[pos])) {
        ++pos;
      }
      std::string_view const token = text.substr(start, pos - start);
      std::size_t const      col   = column + start;
      tokens                       = true;
      if (token == "1") {
        continue;
      }
      std::size_t const caret = token.find('^');
      std::string_view  base  = token.substr(0, caret);
      long long         exp   = 1;
      if (caret != std::string_view::npos) {
        std::string_view const e = token.substr(caret + 1);
        if (!parse_number(e, exp)) {
          throw ParseError(line, col, "malformed exponent in '" + std::string(token) + "'");
        }
        if (exp > max_exponent || exp < -max_exponent) {
          throw ParseError(line, col, "exponent out of range in '" + std::string(token) + "'");
        }
      }
      if (base.empty()) {
        throw ParseError(line, col, "missing generator in '" + std::string(token) + "'");
      }
      GenIndex const index = resolve_generator(base, aliases, line, col);
      int const      sign  = exp < 0 ? -1 : 1;
      for (long long k = 0; k < (exp < 0 ? -exp : exp); ++k) {
        raw.push_back(Letter{index, sign});
      }
    }
    if (!tokens) {
      throw ParseError(line, column, "empty word must be written as 1");
    }
    return Word(std::move(raw));
  }

  std::string format_word(Word const& w, std::vector<std::string> const& aliases) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t k = 0; k < w.size();) {
      std::size_t run = 1;
      while (k + run < w.size() && w[k + run] == w[k]) {
        ++run;
      }
      GenIndex const i = w[k].index;
      if (!out.empty()) {
        out += ' ';
      }
      out += i <= aliases.size() ? aliases[i - 1] : "g" + std::to_string(i);
      long long const e = static_cast<long long>(run) * w[k].sign;
      if (e != 1) {
        out += "^" + std::to_string(e);
      }
      k += run;
    }
    return out;
  }

  Presentation parse_presentation(std::string_view text) {
    bool                     have_gens = false;
    GenIndex                 n         = 0;
    std::vector<std::string> gen_names;
    std::vector<Word>        rels;
    std::vector<std::string> rel_names;
    std::set<std::string>    seen_rel_names;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) {
        eol = text.size();
      }
      std::string_view line = text.substr(pos, eol - pos);
      pos                   = eol + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      std::size_t first = 0;
      while (first < line.size() && is_space(line[first])) {
        ++first;
      }
      if (first == line.size()) {
        continue;
      }
      std::string_view const body = line.substr(first);
      std::size_t const      col  = first + 1;

      if (body.starts_with("gens:")) {
        if (have_gens) {
          throw ParseError(line_no, col, "duplicate gens line");
        }
        have_gens                = true;
        std::string const spec   = trim(body.substr(5));
        GenIndex          count  = 0;
        if (parse_number(std::string_view(spec), count)) {
          n = count;
          continue;
        }
        std::size_t p = 0;
        std::string_view const rest = body.substr(5);
        while (p < rest.size()) {
          if (is_space(rest[p])) {
            ++p;
            continue;
          }
          std::size_t const s = p;
          while (p < rest.size() && !is_space(rest[p])) {
            ++p;
          }
          std::string const name(rest.substr(s, p - s));
          if (!is_identifier(name)) {
            throw ParseError(line_no, col + 5 + s,
                             "invalid generator name '" + name + "'");
          }
          if (std::find(gen_names.begin(), gen_names.end(), name) != gen_names.end()) {
            throw ParseError(line_no, col + 5 + s,
                             "duplicate generator name '" + name + "'");
          }
          gen_names.push_back(name);
        }
        if (gen_names.empty()) {
          throw ParseError(line_no, col, "gens line needs a count or names");
        }
        n = static_cast<GenIndex>(gen_names.size());
        continue;
      }

      if (body.starts_with("rel") && body.size() > 3 && is_space(body[3])) {
        if (!have_gens) {
          throw ParseError(line_no, col, "rel line before gens line");
        }
        std::size_t const colon = body.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError(line_no, col, "expected 'rel <name>: <word>'");
        }
        std::string const name = trim(body.substr(3, colon - 3));
        if (name.empty() || name.find_first_of(" \t") != std::string::npos) {
          throw ParseError(line_no, col + 4, "invalid relator name '" + name + "'");
        }
        if (!seen_rel_names.insert(name).second) {
          throw ParseError(line_no, col + 4, "duplicate relator name '" + name + "'");
        }
        Word w = parse_word(body.substr(colon + 1), gen_names, line_no,
                            col + colon + 1);
        for (auto const& l : w) {
          if (l.index > n) {
            throw ParseError(line_no, col + colon + 1,
                             "relator " + name + " uses generator g"
                                 + std::to_string(l.index) + " beyond "
                                 + std::to_string(n));
          }
        }
        rels.push_back(std::move(w));
        rel_names.push_back(name);
        continue;
      }
      throw ParseError(line_no, col, "expected 'gens:' or 'rel <name>: <word>'");
    }
    if (!have_gens) {
      throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing gens line");
    }
    return Presentation(n, std::move(rels), std::move(gen_names),
                        std::move(rel_names));
  }

  std::string format_presentation(Presentation const& p) {
    std::string out = "gens:";
    if (p.generator_names().empty()) {
      out += " " + std::to_string(p.generators());
    } else {
      for (auto const& name : p.generator_names()) {
        out += " " + name;
      }
    }
    out += "\n";
    for (std::size_t j = 1; j <= p.relator_count(); ++j) {
      out += "rel " + p.relator_name(j) + ": "
             + format_word(p.relator(j), p.generator_names()) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  json presentation_to_json(Presentation const& p) {
    json rels = json::array();
    for (auto const& r : p.relators()) {
      json letters = json::array();
      for (auto const& l : r) {
        letters.push_back(json::array({l.index, l.sign}));
      }
      rels.push_back(std::move(letters));
    }
    return json{{"generators", p.generators()}, {"relators", std::move(rels)}};
  }

  Presentation presentation_from_json(json const& j) {
    try {
      auto const        n = j.at("generators").get<GenIndex>();
      std::vector<Word> rels;
      for (auto const& r : j.at("relators")) {
        std::vector<Letter> raw;
        for (auto const& l : r) {
          raw.push_back(make_letter(l.at(0).get<GenIndex>(), l.at(1).get<int>()));
        }
        rels.emplace_back(std::move(raw));
      }
      return Presentation(n, std::move(rels));
    } catch (json::exception const& e) {
      throw ParseError(1, 1, std::string("presentation JSON: ") + e.what());
    }
  }

  json integer_to_json(Integer const& x) {
    if (x >= std::numeric_limits<long long>::min()
        && x <= std::numeric_limits<long long>::max()) {
      return json(static_cast<long long>(x));
    }
    return json(x.str());
  }

  Integer integer_from_json(json const& j) {
    if (j.is_string()) {
      return Integer(j.get<std::string>());
    }
    return Integer(j.get<long long>());
  }

  json matrix_to_json(SparseIntMatrix const& m) {
    json entries = json::array();
    for (auto const& [r, c, v] : m.entries()) {
      entries.push_back(json::array({r, c, integer_to_json(v)}));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
  }

  SparseIntMatrix matrix_from_json(json const& j) {
    try {
      SparseIntMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
      for (auto const& e : j.at("entries")) {
        m.add(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
              integer_from_json(e.at(2)));
      }
      return m;
    } catch (json::exception const& e) {
      throw ParseError(1, 1, std::string("matrix JSON: ") + e.what());
    }
  }

  json base_change_to_json(BaseChange const& bc) {
    json moves = json::array();
    for (auto const& m : bc.moves()) {
      switch (m.kind()) {
        case NielsenMove::Kind::Swap:
          moves.push_back({{"move", "Swap"}, {"i", m.first()}, {"j", m.second()}});
          break;
        case NielsenMove::Kind::Invert:
          moves.push_back({{"move", "Invert"}, {"i", m.first()}});
          break;
        case NielsenMove::Kind::RightMultiply:
          moves.push_back(
              {{"move", "RightMultiply"}, {"i", m.first()}, {"j", m.second()}});
          break;
      }
    }
    return moves;
  }

  BaseChange base_change_from_json(json const& j) {
    try {
      BaseChange bc;
      for (auto const& m : j) {
        auto const kind = m.at("move").get<std::string>();
        auto const i    = m.at("i").get<GenIndex>();
        if (kind == "Swap") {
          bc.push_back(NielsenMove::swap(i, m.at("j").get<GenIndex>()));
        } else if (kind == "Invert") {
          bc.push_back(NielsenMove::invert(i));
        } else if (kind == "RightMultiply") {
          bc.push_back(NielsenMove::right_multiply(i, m.at("j").get<GenIndex>()));
        } else {
          throw ParseError(1, 1, "unknown move '" + kind + "'");
        }
      }
      return bc;
    } catch (json::exception const& e) {
      throw ParseError(1, 1, std::string("base change JSON: ") + e.what());
    }
  }

  json row_log_to_json(RowOpLog const& log) {
    json ops = json::array();
    for (auto const& op : log.ops()) {
      switch (op.kind) {
        case ElementaryOp::Kind::Swap:
          ops.push_back({{"op", "SwapRows"}, {"i", op.target}, {"j", op.source}});
          break;
        case ElementaryOp::Kind::Negate:
          ops.push_back({{"op", "NegateRow"}, {"i", op.target}});
          break;
        case ElementaryOp::Kind::AddMultiple:
          ops.push_back({{"op", "AddMultiple"},
                         {"target", op.target},
                         {"source", op.source},
                         {"k", integer_to_json(op.coefficient)}});
          break;
      }
    }
    return ops;
  }

  json homology_to_json(Homology const& h) {
    json torsion = json::array();
    for (auto const& d : h.h1_torsion) {
      torsion.push_back(integer_to_json(d));
    }
    return json{{"H0", h.h0},
                {"H1", {{"rank", h.h1_rank}, {"torsion", std::move(torsion)}}},
                {"H2", h.h2},
                {"chi", h.chi}};
  }

  json surgery_code_to_json(SurgeryCode const& sc) {
    json comps = json::array();
    for (auto const& w : sc.components()) {
      comps.push_back(format_word(w));
    }
    return json{{"handles", sc.handles()}, {"components", std::move(comps)}};
  }

  SurgeryCode surgery_code_from_json(json const& j) {
    try {
      auto const        n = j.at("handles").get<GenIndex>();
      std::vector<Word> comps;
      std::size_t       k = 0;
      for (auto const& w : j.at("components")) {
        comps.push_back(parse_word(w.get<std::string>(), {}, ++k, 1));
      }
      return SurgeryCode(n, std::move(comps));
    } catch (json::exception const& e) {
      throw ParseError(1, 1, std::string("surgery code JSON: ") + e.what());
    }
  }

  json complex_to_json(TwoComplex const& c) {
    json edges = json::array();
    for (std::size_t e = 1; e <= c.edges().size(); ++e) {
      auto const& edge = c.edges()[e - 1];
      edges.push_back({{"source", edge.source}, {"target", edge.target},
                       {"label", c.edge_label(e)}});
    }
    json faces = json::array();
    for (auto const& w : c.faces()) {
      faces.push_back(format_word(w));
    }
    return json{{"vertices", c.vertices()}, {"edges", std::move(edges)},
                {"faces", std::move(faces)}};
  }

  json cell_set_to_json(CellSet const& s) {
    return json{{"vertices", s.vertices}, {"edges", s.edges}, {"faces", s.faces}};
  }

  json subcomplex_to_json(SubcomplexSpec const& s) {
    return json{{"generators", s.generators},
                {"relators", s.relators},
                {"one_full", s.is_1_full()}};
  }

  std::vector<std::size_t> parse_index_list(std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t              pos = 0;
    std::string const        trimmed = trim(text);
    std::string_view         s       = trimmed;
    if (s.empty()) {
      return out;
    }
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      if (comma == std::string_view::npos) {
        comma = s.size();
      }
      std::string const item = trim(s.substr(pos, comma - pos));
      std::size_t       v    = 0;
      if (!parse_number(std::string_view(item), v)) {
        throw ParseError(1, pos + 1, "expected an index, got '" + item + "'");
      }
      out.push_back(v);
      pos = comma + 1;
    }
    return out;
  }

}  // namespace asphere::io
