#include "asphere/presentation.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "asphere/error.hpp"

namespace asphere {

  Presentation::Presentation(GenIndex                 n_generators,
                             std::vector<Word>        relators,
                             std::vector<std::string> generator_names,
                             std::vector<std::string> relator_names)
      : _n(n_generators),
        _relators(std::move(relators)),
        _incidence(n_generators),
        _generator_names(std::move(generator_names)),
        _relator_names(std::move(relator_names)) {
    if (!_generator_names.empty() && _generator_names.size() != _n) {
      throw Error(ErrorKind::InvalidPresentation,
                  "expected " + std::to_string(_n) + " generator names, got "
                      + std::to_string(_generator_names.size()));
    }
    if (!_relator_names.empty() && _relator_names.size() != _relators.size()) {
      throw Error(ErrorKind::InvalidPresentation,
                  "expected " + std::to_string(_relators.size())
                      + " relator names, got "
                      + std::to_string(_relator_names.size()));
    }
    for (std::size_t j = 0; j < _relators.size(); ++j) {
      for (auto const& l : _relators[j]) {
        if (l.index > _n) {
          throw Error(ErrorKind::InvalidPresentation,
                      "relator " + std::to_string(j + 1) + " uses generator "
                          + std::to_string(l.index) + " but only "
                          + std::to_string(_n) + " exist");
        }
        _incidence[l.index - 1].insert(j + 1);
      }
    }
  }

  Word const& Presentation::relator(std::size_t j) const {
    if (j == 0 || j > _relators.size()) {
      throw Error(ErrorKind::BadSelection,
                  "no relator " + std::to_string(j));
    }
    return _relators[j - 1];
  }

  std::set<std::size_t> const& Presentation::incidence(GenIndex i) const {
    if (i == 0 || i > _n) {
      throw Error(ErrorKind::BadSelection, "no generator " + std::to_string(i));
    }
    return _incidence[i - 1];
  }

  std::string Presentation::generator_name(GenIndex i) const {
    if (i >= 1 && i <= _generator_names.size()) {
      return _generator_names[i - 1];
    }
    return "g" + std::to_string(i);
  }

  std::string Presentation::relator_name(std::size_t j) const {
    if (j >= 1 && j <= _relator_names.size()) {
      return _relator_names[j - 1];
    }
    return "r" + std::to_string(j);
  }

  SparseIntMatrix exponent_matrix(Presentation const& p) {
    SparseIntMatrix m(p.generators(), p.relator_count());
    for (std::size_t j = 1; j <= p.relator_count(); ++j) {
      for (auto const& [i, e] : exponent_vector(p.relator(j))) {
        m.set(i, j, e);
      }
    }
    return m;
  }

  LocalFiniteness is_locally_finite(Presentation const& p) {
    LocalFiniteness result;
    for (GenIndex i = 1; i <= p.generators(); ++i) {
      result.max_incidence = std::max(result.max_incidence, p.incidence(i).size());
    }
    return result;
  }

  LocalFiniteness is_locally_finite(StreamedPresentation const& s,
                                    GenIndex                    max_window) {
    LocalFiniteness result;
    for (GenIndex n = 1; n <= max_window; ++n) {
      Presentation const p = s.window(n);
      for (GenIndex i = 1; i <= p.generators(); ++i) {
        std::size_t const count = p.incidence(i).size();
        result.max_incidence    = std::max(result.max_incidence, count);
        if (count > s.incidence_bound && result.holds) {
          result.holds               = false;
          result.offending_generator = i;
          result.offending_window    = n;
        }
      }
      if (!result.holds) {
        break;
      }
    }
    return result;
  }

  Presentation truncate(Presentation const& p, GenIndex n) {
    n = std::min(n, p.generators());
    std::vector<Word>        rels;
    std::vector<std::string> rel_names;
    for (std::size_t j = 1; j <= p.relator_count(); ++j) {
      if (p.relator(j).max_index() <= n) {
        rels.push_back(p.relator(j));
        rel_names.push_back(p.relator_name(j));
      }
    }
    std::vector<std::string> gen_names;
    if (!p.generator_names().empty()) {
      gen_names.assign(p.generator_names().begin(),
                       p.generator_names().begin() + n);
    }
    return Presentation(n, std::move(rels), std::move(gen_names),
                        std::move(rel_names));
  }

  StreamedPresentation finite_stream(Presentation const& p) {
    std::size_t bound = is_locally_finite(p).max_incidence;
    return StreamedPresentation{bound,
                                [p](GenIndex n) { return truncate(p, n); }};
  }

  bool is_homology_trivial_unit(Presentation const& p) {
    if (p.relator_count() != p.generators()) {
      throw Error(ErrorKind::WindowMismatch,
                  std::to_string(p.relator_count()) + " relators on a window of "
                      + std::to_string(p.generators()) + " generators");
    }
    return exponent_matrix(p).is_identity();
  }

  BaseChange lift_row_ops(RowOpLog const& log) {
    BaseChange bc;
    for (auto const& op : log.ops()) {
      auto const t = static_cast<GenIndex>(op.target);
      auto const s = static_cast<GenIndex>(op.source);
      switch (op.kind) {
        case ElementaryOp::Kind::Swap:
          if (t != s) {
            bc.push_back(NielsenMove::swap(t, s));
          }
          break;
        case ElementaryOp::Kind::Negate:
          bc.push_back(NielsenMove::invert(t));
          break;
        case ElementaryOp::Kind::AddMultiple: {
          // x_s -> x_s x_t adds the x_s exponent to the x_t exponent; with
          // x_s conjugated by Invert it subtracts instead.
          bool const negative = op.coefficient < 0;
          Integer const k     = negative ? Integer(-op.coefficient) : op.coefficient;
          if (k > std::numeric_limits<std::uint32_t>::max()) {
            throw Error(ErrorKind::InvariantViolation,
                        "row operation coefficient too large to lift");
          }
          auto const count = static_cast<std::uint32_t>(k);
          if (negative) {
            bc.push_back(NielsenMove::invert(s));
          }
          for (std::uint32_t c = 0; c < count; ++c) {
            bc.push_back(NielsenMove::right_multiply(s, t));
          }
          if (negative) {
            bc.push_back(NielsenMove::invert(s));
          }
          break;
        }
      }
    }
    return bc;
  }

  NormalizationCertificate normalize(Presentation const& p) {
    NormalizationCertificate cert;
    cert.row_log     = reduce_to_identity(exponent_matrix(p));
    cert.base_change = lift_row_ops(cert.row_log);
    cert.new_relators.reserve(p.relator_count());
    for (auto const& r : p.relators()) {
      cert.new_relators.push_back(apply_base_change(cert.base_change, r));
    }
    Presentation const rewritten(p.generators(), cert.new_relators);
    cert.exponent_check = exponent_matrix(rewritten).is_identity();
    return cert;
  }

  Presentation normalized(Presentation const&             p,
                          NormalizationCertificate const& cert) {
    return Presentation(p.generators(), cert.new_relators, p.generator_names(),
                        p.relator_names());
  }

  Presentation subpresentation(Presentation const&          p,
                               std::set<GenIndex> const&    gens,
                               std::set<std::size_t> const& rels) {
    std::map<GenIndex, GenIndex> renumber;
    std::vector<std::string>     gen_names;
    for (GenIndex i : gens) {
      if (i == 0 || i > p.generators()) {
        throw Error(ErrorKind::BadSelection,
                    "no generator " + std::to_string(i));
      }
      renumber[i] = static_cast<GenIndex>(renumber.size() + 1);
      if (!p.generator_names().empty()) {
        gen_names.push_back(p.generator_name(i));
      }
    }
    std::vector<Word>        words;
    std::vector<std::string> rel_names;
    for (std::size_t j : rels) {
      Word const&         r = p.relator(j);
      std::vector<Letter> raw;
      raw.reserve(r.size());
      for (auto const& l : r) {
        auto it = renumber.find(l.index);
        if (it == renumber.end()) {
          throw Error(ErrorKind::DanglingRelator,
                      "relator " + p.relator_name(j) + " uses unselected generator "
                          + p.generator_name(l.index));
        }
        raw.push_back(Letter{it->second, l.sign});
      }
      words.emplace_back(std::move(raw));
      if (!p.relator_names().empty()) {
        rel_names.push_back(p.relator_name(j));
      }
    }
    return Presentation(static_cast<GenIndex>(gens.size()), std::move(words),
                        std::move(gen_names), std::move(rel_names));
  }

  std::set<GenIndex> all_generators(Presentation const& p) {
    std::set<GenIndex> s;
    for (GenIndex i = 1; i <= p.generators(); ++i) {
      s.insert(i);
    }
    return s;
  }

  std::set<std::size_t> all_relators(Presentation const& p) {
    std::set<std::size_t> s;
    for (std::size_t j = 1; j <= p.relator_count(); ++j) {
      s.insert(j);
    }
    return s;
  }

}  // namespace asphere
