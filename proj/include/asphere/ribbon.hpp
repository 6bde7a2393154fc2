#ifndef ASPHERE_RIBBON_HPP_
#define ASPHERE_RIBBON_HPP_

#include <cstddef>
#include <set>
#include <string_view>
#include <vector>

#include "asphere/complex2.hpp"
#include "asphere/freegroup.hpp"
#include "asphere/presentation.hpp"

namespace asphere {

  // Symbolic ribbon link: one 1-handle per generator and one loop word per
  // component. Component j meets the belt sphere of handle i with algebraic
  // intersection +1 when i == j and 0 otherwise.
  class SurgeryCode {
   public:
    SurgeryCode() = default;
    // Throws NotHomologyTrivialUnit when the intersection numbers are off.
    SurgeryCode(GenIndex handles, std::vector<Word> components);

    GenIndex handles() const noexcept {
      return _handles;
    }
    std::vector<Word> const& components() const noexcept {
      return _components;
    }
    std::size_t component_count() const noexcept {
      return _components.size();
    }

    friend bool operator==(SurgeryCode const&, SurgeryCode const&) = default;

   private:
    GenIndex          _handles = 0;
    std::vector<Word> _components;
  };

  // Components whose tubular neighbourhoods are glued back.
  struct SublinkSelection {
    std::set<std::size_t> fill;

    friend bool operator==(SublinkSelection const&,
                           SublinkSelection const&) = default;
  };

  // Throws NotHomologyTrivialUnit unless the exponent matrix is the identity.
  SurgeryCode build_surgery_code(Presentation const& p);

  // Free exterior group on the handles with the meridian words of the
  // filled components as relators. Throws BadSelection.
  Presentation exterior(SurgeryCode const& sc, SublinkSelection const& sel);

  // Throws NotOneFull when generators are missing.
  SublinkSelection subcomplex_to_sublink(SubcomplexSpec const& s);
  // Throws BadSelection for indices outside 1..components when given.
  SubcomplexSpec sublink_to_subcomplex(SublinkSelection const& sel,
                                       GenIndex                n_generators);

  bool verify_meridian_correspondence(SurgeryCode const& sc, Presentation const& p);

  void validate(SublinkSelection const& sel, SurgeryCode const& sc);

  // Every subset of 1..m in binary-counter order (bit k <-> component k+1).
  std::vector<SublinkSelection> all_sublinks(std::size_t m);

  // Attached to exterior reports; asphericity of the exterior is a geometric
  // fact consumed here, not something the library checks.
  inline constexpr std::string_view exterior_asphericity_tag
      = "exterior of a ribbon disk-link: aspherical (geometric theorem, assumed)";

}  // namespace asphere

#endif  // ASPHERE_RIBBON_HPP_
