#ifndef ASPHERE_COMMANDS_HPP_
#define ASPHERE_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "asphere/freegroup.hpp"

namespace asphere::cli {

  using json = nlohmann::json;

  inline constexpr char const* tool_name    = "asphere";
  inline constexpr char const* tool_version = "0.3.0";

  enum ExitCode : int {
    ok             = 0,
    check_failed   = 1,
    usage_error    = 2,
    internal_error = 3,
  };

  struct Options {
    bool                    json_output = false;
    std::optional<GenIndex> window;
    std::uint64_t           seed  = 0;
    std::size_t             limit = 10000;

    // normalize / ribbon
    std::string out;
    std::string log;
    bool        normalize_first = false;

    // sublinks
    std::optional<std::string> fill;
    bool                       enumerate = false;
    std::size_t                cap       = 12;
    bool                       force     = false;
    bool                       probe     = false;

    // telescope; each entry is "<gens>:<rels>" with comma separated indices
    std::vector<std::string> stages;
    bool                     emit_complex = false;

    json to_json() const;
  };

  struct InputDigest {
    std::string path;
    std::string sha256;
  };

  struct RunReport {
    std::string              command;
    json                     config;
    std::vector<InputDigest> inputs;
    json                     findings = json::object();
    std::vector<std::string> warnings;
    int                      exit_code = ExitCode::ok;

    json to_json() const;
    // Human-readable view derived from to_json().
    std::string to_text() const;
  };

  std::string sha256_hex(std::string const& data);

  // Each command catches library errors and reports them in findings with
  // the matching exit code.
  RunReport cmd_check(std::string const& input, Options const& opts);
  RunReport cmd_normalize(std::string const& input, Options const& opts);
  RunReport cmd_ribbon(std::string const& input, Options const& opts);
  RunReport cmd_sublinks(std::string const& input, Options const& opts);
  RunReport cmd_homology(std::string const& input, Options const& opts);
  RunReport cmd_telescope(std::string const& input, Options const& opts);
  RunReport cmd_pi2probe(std::string const& input, Options const& opts);

  RunReport run_command(std::string const& command, std::string const& input,
                        Options const& opts);

  std::vector<std::string> const& command_names();

}  // namespace asphere::cli

#endif  // ASPHERE_COMMANDS_HPP_
