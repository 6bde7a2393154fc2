#include "asphere/ribbon.hpp"

#include <string>

#include "asphere/error.hpp"

namespace asphere {

  SurgeryCode::SurgeryCode(GenIndex handles, std::vector<Word> components)
      : _handles(handles), _components(std::move(components)) {
    if (_components.size() != _handles) {
      throw Error(ErrorKind::NotHomologyTrivialUnit,
                  std::to_string(_components.size()) + " components on "
                      + std::to_string(_handles) + " handles");
    }
    for (std::size_t j = 1; j <= _components.size(); ++j) {
      auto const ev = exponent_vector(_components[j - 1]);
      bool const ok = ev.size() == 1 && ev.begin()->first == j
                      && ev.begin()->second == 1;
      if (!ok || _components[j - 1].max_index() > _handles) {
        throw Error(ErrorKind::NotHomologyTrivialUnit,
                    "component " + std::to_string(j)
                        + " does not meet its handle exactly once algebraically");
      }
    }
  }

  SurgeryCode build_surgery_code(Presentation const& p) {
    bool trivial = false;
    try {
      trivial = is_homology_trivial_unit(p);
    } catch (Error const& e) {
      if (e.kind() != ErrorKind::WindowMismatch) {
        throw;
      }
    }
    if (!trivial) {
      throw Error(ErrorKind::NotHomologyTrivialUnit,
                  "exponent matrix of the presentation is not the identity");
    }
    return SurgeryCode(p.generators(), p.relators());
  }

  void validate(SublinkSelection const& sel, SurgeryCode const& sc) {
    for (std::size_t j : sel.fill) {
      if (j == 0 || j > sc.component_count()) {
        throw Error(ErrorKind::BadSelection,
                    "component " + std::to_string(j) + " out of range 1.."
                        + std::to_string(sc.component_count()));
      }
    }
  }

  Presentation exterior(SurgeryCode const& sc, SublinkSelection const& sel) {
    validate(sel, sc);
    std::vector<Word> relators;
    for (std::size_t j : sel.fill) {
      relators.push_back(sc.components()[j - 1]);
    }
    return Presentation(sc.handles(), std::move(relators));
  }

  SublinkSelection subcomplex_to_sublink(SubcomplexSpec const& s) {
    if (!s.is_1_full()) {
      throw Error(ErrorKind::NotOneFull,
                  "subcomplex keeps " + std::to_string(s.generators.size())
                      + " of " + std::to_string(s.ambient_generators)
                      + " generators");
    }
    return SublinkSelection{s.relators};
  }

  SubcomplexSpec sublink_to_subcomplex(SublinkSelection const& sel,
                                       GenIndex                n_generators) {
    for (std::size_t j : sel.fill) {
      if (j == 0) {
        throw Error(ErrorKind::BadSelection, "component indices start at 1");
      }
    }
    SubcomplexSpec s;
    s.ambient_generators = n_generators;
    for (GenIndex i = 1; i <= n_generators; ++i) {
      s.generators.insert(i);
    }
    s.relators = sel.fill;
    return s;
  }

  bool verify_meridian_correspondence(SurgeryCode const&  sc,
                                      Presentation const& p) {
    if (sc.handles() != p.generators()
        || sc.component_count() != p.relator_count()) {
      return false;
    }
    for (std::size_t j = 1; j <= p.relator_count(); ++j) {
      // Word equality is on freely reduced forms.
      if (!(sc.components()[j - 1] == p.relator(j))) {
        return false;
      }
    }
    return true;
  }

  std::vector<SublinkSelection> all_sublinks(std::size_t m) {
    if (m >= 8 * sizeof(std::size_t) - 1) {
      throw Error(ErrorKind::BadSelection, "too many components to enumerate");
    }
    std::vector<SublinkSelection> result;
    std::size_t const             total = std::size_t{1} << m;
    result.reserve(total);
    for (std::size_t mask = 0; mask < total; ++mask) {
      SublinkSelection sel;
      for (std::size_t k = 0; k < m; ++k) {
        if (mask & (std::size_t{1} << k)) {
          sel.fill.insert(k + 1);
        }
      }
      result.push_back(std::move(sel));
    }
    return result;
  }

}  // namespace asphere
