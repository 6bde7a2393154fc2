#ifndef ASPHERE_TESTS_SUPPORT_HPP_
#define ASPHERE_TESTS_SUPPORT_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "asphere/error.hpp"
#include "asphere/io.hpp"
#include "asphere/presentation.hpp"

namespace asphere::testing {

  inline std::string fixture_path(std::string const& name) {
    return std::string(ASPHERE_FIXTURES) + "/" + name;
  }

  inline Presentation fixture(std::string const& name) {
    std::ifstream      in(fixture_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return io::parse_presentation(ss.str());
  }

  inline Presentation pres(std::string const& text) {
    return io::parse_presentation(text);
  }

  inline Word word(std::string const& text, std::vector<std::string> const& aliases = {}) {
    return io::parse_word(text, aliases);
  }

  // Fixtures whose exponent matrix is square and unimodular.
  inline std::vector<std::string> const& unimodular_fixtures() {
    static std::vector<std::string> const names = {
        "trivial.pres", "xinv.pres", "ab2.pres", "commutator.pres", "three.pres",
        "cyclic10.pres"};
    return names;
  }

  // Exponent matrix is the identity.
  inline std::vector<std::string> const& homology_trivial_fixtures() {
    static std::vector<std::string> const names = {
        "trivial.pres", "commutator.pres", "three.pres", "cyclic10.pres"};
    return names;
  }

  template <class F>
  ErrorKind kind_of(F&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    return ErrorKind::InvariantViolation;
  }

}  // namespace asphere::testing

#endif  // ASPHERE_TESTS_SUPPORT_HPP_
