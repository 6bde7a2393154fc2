#ifndef ASPHERE_PRESENTATION_HPP_
#define ASPHERE_PRESENTATION_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asphere/freegroup.hpp"
#include "asphere/intlinalg.hpp"

namespace asphere {

  // <x_1, ..., x_n | r_1, ..., r_m> on a finite window. Names are optional
  // display aliases and do not take part in equality.
  class Presentation {
   public:
    Presentation() = default;
    Presentation(GenIndex                 n_generators,
                 std::vector<Word>        relators,
                 std::vector<std::string> generator_names = {},
                 std::vector<std::string> relator_names   = {});

    GenIndex generators() const noexcept {
      return _n;
    }
    std::vector<Word> const& relators() const noexcept {
      return _relators;
    }
    std::size_t relator_count() const noexcept {
      return _relators.size();
    }
    Word const& relator(std::size_t j) const;

    // Relator indices (1-based) containing x_i.
    std::set<std::size_t> const& incidence(GenIndex i) const;

    std::vector<std::string> const& generator_names() const noexcept {
      return _generator_names;
    }
    std::vector<std::string> const& relator_names() const noexcept {
      return _relator_names;
    }
    // Alias of x_i, or "g<i>" when there are none.
    std::string generator_name(GenIndex i) const;
    std::string relator_name(std::size_t j) const;

    friend bool operator==(Presentation const& a, Presentation const& b) {
      return a._n == b._n && a._relators == b._relators;
    }

   private:
    GenIndex                           _n = 0;
    std::vector<Word>                  _relators;
    std::vector<std::set<std::size_t>> _incidence;
    std::vector<std::string>           _generator_names;
    std::vector<std::string>           _relator_names;
  };

  // Entry (i, j) is the exponent sum of x_i in r_j.
  SparseIntMatrix exponent_matrix(Presentation const& p);

  struct LocalFiniteness {
    bool                    holds = true;
    std::size_t             max_incidence = 0;
    std::optional<GenIndex> offending_generator;
    std::optional<GenIndex> offending_window;
  };

  LocalFiniteness is_locally_finite(Presentation const& p);

  // Pull interface for a possibly infinite presentation: window(N) returns
  // the generators x_1..x_N together with every relator that only uses them.
  // The producer promises that no generator ever lies in more than
  // incidence_bound relators.
  struct StreamedPresentation {
    std::size_t                           incidence_bound = 0;
    std::function<Presentation(GenIndex)> window;
  };

  // Checks the declared bound on windows 1..max_window.
  LocalFiniteness is_locally_finite(StreamedPresentation const& s,
                                    GenIndex                    max_window);

  StreamedPresentation finite_stream(Presentation const& p);

  // Relators restricted to x_1..x_n: relators using larger generators are
  // dropped.
  Presentation truncate(Presentation const& p, GenIndex n);

  // Exponent matrix is the identity. Throws WindowMismatch if m != n.
  bool is_homology_trivial_unit(Presentation const& p);

  struct NormalizationCertificate {
    RowOpLog          row_log;
    BaseChange        base_change;
    std::vector<Word> new_relators;
    bool              exponent_check = false;
  };

  // Nielsen moves whose abelianization is the given row operation sequence.
  BaseChange lift_row_ops(RowOpLog const& log);

  // Throws NotUnimodular when the exponent matrix has no inverse over Z.
  NormalizationCertificate normalize(Presentation const& p);

  Presentation normalized(Presentation const&             p,
                          NormalizationCertificate const& cert);

  // Generators are renumbered in increasing order; throws DanglingRelator if
  // a selected relator uses an unselected generator.
  Presentation subpresentation(Presentation const&          p,
                               std::set<GenIndex> const&    gens,
                               std::set<std::size_t> const& rels);

  std::set<GenIndex> all_generators(Presentation const& p);
  std::set<std::size_t> all_relators(Presentation const& p);

}  // namespace asphere

#endif  // ASPHERE_PRESENTATION_HPP_
