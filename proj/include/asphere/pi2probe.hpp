#ifndef ASPHERE_PI2PROBE_HPP_
#define ASPHERE_PI2PROBE_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "asphere/freegroup.hpp"
#include "asphere/intlinalg.hpp"
#include "asphere/presentation.hpp"

namespace asphere {

  // Cosets of the trivial subgroup, i.e. elements of the group when the
  // enumeration completes. Coset 1 is the identity.
  class CosetTable {
   public:
    enum class Status { Complete, Overflow };

    CosetTable() = default;
    CosetTable(GenIndex                              generators,
               std::vector<std::vector<std::size_t>> action,
               Status                                status,
               std::size_t                           limit);

    Status status() const noexcept {
      return _status;
    }
    bool complete() const noexcept {
      return _status == Status::Complete;
    }
    std::size_t limit() const noexcept {
      return _limit;
    }
    // Live cosets; for an overflowed table, the number defined so far.
    std::size_t cosets() const noexcept {
      return _action.size();
    }
    GenIndex generators() const noexcept {
      return _generators;
    }

    std::size_t act(std::size_t coset, Letter const& l) const;
    std::size_t act(std::size_t coset, Word const& w) const;

   private:
    GenIndex                              _generators = 0;
    std::vector<std::vector<std::size_t>> _action;  // 0 = undefined
    Status                                _status = Status::Overflow;
    std::size_t                           _limit  = 0;
  };

  // HLT enumeration: every live coset in order scans every relator, defining
  // cosets as needed, then fills its row. Stops with Overflow once `limit`
  // cosets have been defined.
  CosetTable coset_enumerate(Presentation const& p, std::size_t limit);

  // Formal integer combination of free-group words.
  using FreeGroupRingElement = std::map<Word, Integer>;

  FreeGroupRingElement fox_derivative(Word const& r, GenIndex i);

  FreeGroupRingElement add(FreeGroupRingElement const& a,
                           FreeGroupRingElement const& b);
  FreeGroupRingElement multiply(FreeGroupRingElement const& a,
                                FreeGroupRingElement const& b);
  Integer              augmentation(FreeGroupRingElement const& a);

  // Fox derivatives pushed into the finite quotient: entry [i-1][j-1] maps a
  // group element (coset) to its coefficient in d r_j / d x_i.
  using GroupRingElement = std::map<std::size_t, Integer>;
  using FoxMatrix        = std::vector<std::vector<GroupRingElement>>;

  FoxMatrix fox_matrix(Presentation const& p, CosetTable const& t);

  // (n N) x (m N) integer matrix; block (i, j) is right multiplication by
  // d r_j / d x_i on ZG. Throws IncompleteTable.
  SparseIntMatrix lifted_boundary(Presentation const& p, CosetTable const& t);

  struct Pi2Verdict {
    enum class Kind { Aspherical, NotAspherical, Inconclusive };

    Kind                       kind = Kind::Inconclusive;
    std::optional<CosetTable>  table;
    std::optional<std::size_t> kernel_rank;
    std::vector<Integer>       witness;
    std::string                reason;
  };

  std::string_view to_string(Pi2Verdict::Kind kind) noexcept;

  Pi2Verdict asphericity_verdict(Presentation const& p, std::size_t limit);

}  // namespace asphere

#endif  // ASPHERE_PI2PROBE_HPP_
