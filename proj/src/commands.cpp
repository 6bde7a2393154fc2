#include "asphere/commands.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "asphere/complex2.hpp"
#include "asphere/error.hpp"
#include "asphere/fuzz.hpp"
#include "asphere/intlinalg.hpp"
#include "asphere/io.hpp"
#include "asphere/pi2probe.hpp"
#include "asphere/presentation.hpp"
#include "asphere/ribbon.hpp"

namespace asphere::cli {

  namespace {
    // Bad flags, missing files: exit code 2.
    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    constexpr char const* group_trivial_tag
        = "assumed (hypothesis: the complex is contractible); not verified";
    constexpr char const* contractible_tag
        = "assumed; checked consequences: balanced window, H1 = 0, H2 = 0";

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw UsageError("cannot read '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    void write_file(std::string const& path, std::string const& data) {
      std::ofstream out(path, std::ios::binary);
      if (!out) {
        throw UsageError("cannot write '" + path + "'");
      }
      out << data;
    }

    bool looks_like_json(std::string const& text) {
      auto const pos = text.find_first_not_of(" \t\r\n");
      return pos != std::string::npos && text[pos] == '{';
    }

    io::json parse_json(std::string const& text) {
      try {
        return io::json::parse(text);
      } catch (io::json::parse_error const& e) {
        throw ParseError(1, e.byte, "invalid JSON");
      }
    }

    // Raw input bytes plus digest bookkeeping.
    std::string load_bytes(std::string const& input, Options const& opts,
                           RunReport& report) {
      std::string bytes;
      if (input.starts_with("fuzz:")) {
        GenIndex n = 0;
        try {
          n = static_cast<GenIndex>(std::stoul(input.substr(5)));
        } catch (std::exception const&) {
          throw UsageError("expected fuzz:<generators>, got '" + input + "'");
        }
        if (n == 0 || n > 64) {
          throw UsageError("fuzz generator count must be in 1..64");
        }
        fuzz::Rng rng(opts.seed);
        bytes = io::format_presentation(fuzz::random_unimodular_presentation(rng, n));
      } else {
        bytes = read_file(input);
      }
      report.inputs.push_back(InputDigest{input, sha256_hex(bytes)});
      return bytes;
    }

    Presentation presentation_from_bytes(std::string const& bytes,
                                         Options const&     opts) {
      Presentation p = looks_like_json(bytes)
                           ? io::presentation_from_json(parse_json(bytes))
                           : io::parse_presentation(bytes);
      if (opts.window) {
        p = truncate(p, *opts.window);
      }
      return p;
    }

    Presentation load_presentation(std::string const& input, Options const& opts,
                                   RunReport& report) {
      return presentation_from_bytes(load_bytes(input, opts, report), opts);
    }

    io::json presentation_summary(Presentation const& p) {
      io::json rels = io::json::array();
      for (std::size_t j = 1; j <= p.relator_count(); ++j) {
        rels.push_back({{"name", p.relator_name(j)},
                        {"word", io::format_word(p.relator(j), p.generator_names())}});
      }
      io::json gens = io::json::array();
      for (GenIndex i = 1; i <= p.generators(); ++i) {
        gens.push_back(p.generator_name(i));
      }
      return {{"generators", std::move(gens)}, {"relators", std::move(rels)}};
    }

    io::json integers_to_json(std::vector<Integer> const& v) {
      io::json out = io::json::array();
      for (auto const& x : v) {
        out.push_back(io::integer_to_json(x));
      }
      return out;
    }

    io::json verdict_to_json(Pi2Verdict const& v) {
      io::json out;
      out["verdict"] = std::string(to_string(v.kind));
      out["reason"]  = v.reason;
      if (v.table) {
        out["cosets"] = v.table->cosets();
        out["status"] = v.table->complete() ? "Complete" : "Overflow";
      } else {
        out["cosets"] = nullptr;
        out["status"] = nullptr;
      }
      out["kernel_rank"] = v.kernel_rank ? io::json(*v.kernel_rank) : io::json(nullptr);
      out["witness"]     = integers_to_json(v.witness);
      return out;
    }

    RunReport guarded(std::string const& command, Options const& opts,
                      std::function<void(RunReport&)> const& body) {
      RunReport report;
      report.command = command;
      report.config  = opts.to_json();
      try {
        body(report);
      } catch (ParseError const& e) {
        report.findings["error"] = {{"kind", "ParseError"},
                                    {"line", e.line()},
                                    {"column", e.column()},
                                    {"message", e.what()}};
        report.exit_code = ExitCode::usage_error;
      } catch (Error const& e) {
        report.findings["error"] = {{"kind", std::string(to_string(e.kind()))},
                                    {"message", e.what()}};
        report.exit_code = e.kind() == ErrorKind::InvariantViolation
                               ? ExitCode::internal_error
                               : ExitCode::check_failed;
      } catch (UsageError const& e) {
        report.findings["error"] = {{"kind", "Usage"}, {"message", e.what()}};
        report.exit_code         = ExitCode::usage_error;
      }
      return report;
    }

    SubcomplexSpec parse_stage(std::string const& text, Presentation const& p) {
      auto const colon = text.find(':');
      if (colon == std::string::npos) {
        throw UsageError("stage '" + text + "' is not of the form <gens>:<rels>");
      }
      SubcomplexSpec s{p.generators(), {}, {}};
      std::string const gens = text.substr(0, colon);
      std::string const rels = text.substr(colon + 1);
      if (gens == "*") {
        s.generators = all_generators(p);
      } else {
        for (auto i : io::parse_index_list(gens)) {
          s.generators.insert(static_cast<GenIndex>(i));
        }
      }
      if (rels == "*") {
        s.relators = all_relators(p);
      } else {
        for (auto j : io::parse_index_list(rels)) {
          s.relators.insert(j);
        }
      }
      return s;
    }
  }  // namespace

  std::string sha256_hex(std::string const& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int  length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr)
        != 1) {
      throw Error(ErrorKind::InvariantViolation, "sha256 failed");
    }
    std::ostringstream ss;
    for (unsigned int k = 0; k < length; ++k) {
      ss << std::hex << std::setw(2) << std::setfill('0')
         << static_cast<int>(digest[k]);
    }
    return ss.str();
  }

  json Options::to_json() const {
    return json{{"json", json_output},
                {"window", window ? json(*window) : json(nullptr)},
                {"seed", seed},
                {"limit", limit},
                {"out", out},
                {"log", log},
                {"normalize", normalize_first},
                {"fill", fill ? json(*fill) : json(nullptr)},
                {"enumerate", enumerate},
                {"cap", cap},
                {"force", force},
                {"probe", probe},
                {"stages", stages},
                {"emit_complex", emit_complex}};
  }

  json RunReport::to_json() const {
    json ins = json::array();
    for (auto const& d : inputs) {
      ins.push_back({{"path", d.path}, {"sha256", d.sha256}});
    }
    return json{{"tool", tool_name},
                {"version", tool_version},
                {"command", command},
                {"config", config},
                {"inputs", std::move(ins)},
                {"findings", findings},
                {"warnings", warnings},
                {"exit_code", exit_code}};
  }

  namespace {
    void flatten(std::ostringstream& out, std::string const& prefix,
                 json const& value) {
      if (value.is_object()) {
        for (auto it = value.begin(); it != value.end(); ++it) {
          flatten(out, prefix.empty() ? it.key() : prefix + "." + it.key(),
                  it.value());
        }
      } else if (value.is_array()
                 && std::any_of(value.begin(), value.end(), [](json const& v) {
                      return v.is_structured();
                    })) {
        for (std::size_t k = 0; k < value.size(); ++k) {
          flatten(out, prefix + "[" + std::to_string(k) + "]", value[k]);
        }
      } else {
        out << prefix << ": "
            << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  }  // namespace

  std::string RunReport::to_text() const {
    std::ostringstream out;
    out << tool_name << " " << tool_version << " " << command << "\n";
    for (auto const& d : inputs) {
      out << "input: " << d.path << " (sha256 " << d.sha256.substr(0, 16) << ")\n";
    }
    flatten(out, "", findings);
    for (auto const& w : warnings) {
      out << "warning: " << w << "\n";
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  RunReport cmd_check(std::string const& input, Options const& opts) {
    return guarded("check", opts, [&](RunReport& report) {
      Presentation const p    = load_presentation(input, opts, report);
      auto const         c    = exponent_matrix(p);
      auto const         snf  = smith_normal_form(c);
      bool const         bal  = p.relator_count() == p.generators();
      bool const         unim = bal && snf.all_ones();
      auto const         h    = homology(TwoComplex::from_presentation(p));
      bool const         hc   = is_homologically_contractible(h);
      auto const         lf   = is_locally_finite(p);

      auto& f                       = report.findings;
      f["presentation"]             = presentation_summary(p);
      f["balanced"]                 = bal;
      f["locally_finite"]           = {{"holds", lf.holds},
                                       {"max_incidence", lf.max_incidence}};
      f["exponent_matrix"]          = io::matrix_to_json(c);
      f["snf_diagonal"]             = integers_to_json(snf.diagonal);
      f["unimodular"]               = unim;
      f["homology"]                 = io::homology_to_json(h);
      f["homologically_contractible"] = hc;
      f["homology_trivial_unit"]
          = bal ? json(is_homology_trivial_unit(p)) : json(nullptr);
      f["hypotheses"] = {{"group_trivial", group_trivial_tag},
                         {"contractible", contractible_tag}};
      report.warnings.push_back("group triviality assumed, not verified");
      report.exit_code = bal && unim && hc ? ExitCode::ok : ExitCode::check_failed;
    });
  }

  RunReport cmd_normalize(std::string const& input, Options const& opts) {
    return guarded("normalize", opts, [&](RunReport& report) {
      Presentation const p = load_presentation(input, opts, report);
      auto&              f = report.findings;
      NormalizationCertificate cert;
      try {
        cert = normalize(p);
      } catch (Error const& e) {
        if (e.kind() != ErrorKind::NotUnimodular) {
          throw;
        }
        f["error"]        = {{"kind", "NotUnimodular"}, {"message", e.what()}};
        f["snf_diagonal"] = integers_to_json(smith_normal_form(exponent_matrix(p)).diagonal);
        report.exit_code  = ExitCode::check_failed;
        return;
      }
      Presentation const np   = normalized(p, cert);
      BaseChange const   back = cert.base_change.inverse();
      bool               round_trip = true;
      for (std::size_t j = 1; j <= p.relator_count(); ++j) {
        round_trip = round_trip
                     && apply_base_change(back, np.relator(j)) == p.relator(j);
      }
      f["presentation"]          = presentation_summary(np);
      f["base_change"]           = io::base_change_to_json(cert.base_change);
      f["moves"]                 = cert.base_change.size();
      f["row_ops"]               = cert.row_log.size();
      f["exponent_check"]        = cert.exponent_check;
      f["round_trip"]            = round_trip;
      f["homology_trivial_unit"] = is_homology_trivial_unit(np);
      f["hypotheses"]            = {{"group_trivial", group_trivial_tag}};
      if (!opts.out.empty()) {
        std::string const log = opts.log.empty() ? opts.out + ".basechange.json" : opts.log;
        write_file(opts.out, io::format_presentation(np));
        io::json const bc = {{"base_change", io::base_change_to_json(cert.base_change)},
                             {"row_log", io::row_log_to_json(cert.row_log)}};
        write_file(log, bc.dump(2) + "\n");
        f["files"] = {{"presentation", opts.out}, {"base_change", log}};
      }
      if (!cert.exponent_check || !round_trip) {
        throw Error(ErrorKind::InvariantViolation, "normalization certificate failed");
      }
    });
  }

  namespace {
    SurgeryCode code_from_presentation(Presentation p, Options const& opts) {
      if (opts.normalize_first) {
        p = normalized(p, normalize(p));
      }
      return build_surgery_code(p);
    }
  }  // namespace

  RunReport cmd_ribbon(std::string const& input, Options const& opts) {
    return guarded("ribbon", opts, [&](RunReport& report) {
      Presentation p = load_presentation(input, opts, report);
      if (opts.normalize_first) {
        p = normalized(p, normalize(p));
      }
      SurgeryCode const sc        = build_surgery_code(p);
      auto&             f         = report.findings;
      f["surgery_code"]           = io::surgery_code_to_json(sc);
      f["meridian_correspondence"] = verify_meridian_correspondence(sc, p);
      f["exterior"]               = {{"free_rank", sc.handles()},
                                     {"asphericity", exterior_asphericity_tag}};
      if (!opts.out.empty()) {
        write_file(opts.out, io::surgery_code_to_json(sc).dump(2) + "\n");
        f["files"] = {{"surgery_code", opts.out}};
      }
    });
  }

  RunReport cmd_sublinks(std::string const& input, Options const& opts) {
    return guarded("sublinks", opts, [&](RunReport& report) {
      std::string const bytes = load_bytes(input, opts, report);
      SurgeryCode       sc;
      if (looks_like_json(bytes) && parse_json(bytes).contains("handles")) {
        sc = io::surgery_code_from_json(parse_json(bytes));
      } else {
        sc = code_from_presentation(presentation_from_bytes(bytes, opts), opts);
      }
      std::size_t const m = sc.component_count();

      std::vector<SublinkSelection> selections;
      if (opts.enumerate) {
        if (m > opts.cap && !opts.force) {
          throw UsageError("enumerating 2^" + std::to_string(m)
                           + " sublinks exceeds the cap of 2^" + std::to_string(opts.cap)
                           + "; pass --force");
        }
        selections = all_sublinks(m);
      } else if (opts.fill) {
        SublinkSelection sel;
        for (auto j : io::parse_index_list(*opts.fill)) {
          sel.fill.insert(j);
        }
        validate(sel, sc);
        selections.push_back(std::move(sel));
      } else {
        throw UsageError("sublinks needs --fill <indices> or --enumerate");
      }

      SublinkSelection all;
      for (std::size_t j = 1; j <= m; ++j) {
        all.fill.insert(j);
      }
      Presentation const whole = exterior(sc, all);

      io::json rows      = io::json::array();
      bool     all_match = true;
      for (auto const& sel : selections) {
        Presentation const   ext  = exterior(sc, sel);
        SubcomplexSpec const spec = sublink_to_subcomplex(sel, sc.handles());
        Presentation const   sub  = subcomplex_presentation(whole, spec);
        bool const           same = ext == sub;
        bool const           bij  = subcomplex_to_sublink(spec) == sel;
        all_match                 = all_match && same && bij;
        auto const           h    = homology(TwoComplex::from_presentation(ext));

        io::json words = io::json::array();
        for (auto const& r : ext.relators()) {
          words.push_back(io::format_word(r));
        }
        io::json row = {{"fill", sel.fill},
                        {"exterior_relators", std::move(words)},
                        {"subcomplex", io::subcomplex_to_json(spec)},
                        {"matches_subcomplex", same},
                        {"bijection", bij},
                        {"homology", io::homology_to_json(h)},
                        {"homologically_contractible", is_homologically_contractible(h)}};
        if (opts.probe) {
          row["pi2probe"] = verdict_to_json(asphericity_verdict(ext, opts.limit));
        }
        rows.push_back(std::move(row));
      }
      auto& f          = report.findings;
      f["handles"]     = sc.handles();
      f["components"]  = m;
      f["count"]       = selections.size();
      f["all_match"]   = all_match;
      f["asphericity"] = exterior_asphericity_tag;
      f["selections"]  = std::move(rows);
      if (!all_match) {
        throw Error(ErrorKind::InvariantViolation,
                    "sublink and subcomplex presentations disagree");
      }
    });
  }

  RunReport cmd_homology(std::string const& input, Options const& opts) {
    return guarded("homology", opts, [&](RunReport& report) {
      std::string const bytes = load_bytes(input, opts, report);
      Homology          h;
      if (looks_like_json(bytes) && parse_json(bytes).contains("rows")) {
        // A bare d2 of a one-vertex complex.
        auto const d2 = io::matrix_from_json(parse_json(bytes));
        h = homology(ChainComplex{d2, SparseIntMatrix(1, d2.rows())});
        report.findings["source"] = "matrix";
      } else {
        Presentation const p = presentation_from_bytes(bytes, opts);
        h                    = homology(TwoComplex::from_presentation(p));
        report.findings["source"] = "presentation";
      }
      report.findings["homology"]                   = io::homology_to_json(h);
      report.findings["homologically_contractible"] = is_homologically_contractible(h);
    });
  }

  RunReport cmd_telescope(std::string const& input, Options const& opts) {
    return guarded("telescope", opts, [&](RunReport& report) {
      Presentation const          p = load_presentation(input, opts, report);
      std::vector<SubcomplexSpec> specs;
      for (auto const& s : opts.stages) {
        specs.push_back(parse_stage(s, p));
      }
      if (specs.empty()) {
        for (std::size_t k = 0; k <= p.relator_count(); ++k) {
          SubcomplexSpec s{p.generators(), all_generators(p), {}};
          for (std::size_t j = 1; j <= k; ++j) {
            s.relators.insert(j);
          }
          specs.push_back(std::move(s));
        }
      }
      if (!(specs.back() == full_spec(p))) {
        specs.push_back(full_spec(p));
        report.warnings.push_back("whole complex appended as the final stage");
      }
      Filtration const f      = presentation_filtration(p, specs);
      Telescope const  t      = telescope(f);
      Homology const   h_tel  = homology(t.complex);
      Homology const   h_fin  = homology(f.complex);
      bool const       equal  = h_tel == h_fin;
      bool const       stage0 = is_subcomplex(t.complex, t.stage0)
                          && restrict(t.complex, t.stage0)
                                 == restrict(f.complex, f.stages.front());

      io::json stages = io::json::array();
      for (auto const& s : specs) {
        stages.push_back(io::subcomplex_to_json(s));
      }
      io::json collars = io::json::array();
      for (auto const& c : t.collars) {
        collars.push_back({{"stage", c.stage},
                           {"gamma", {{"vertices", c.gamma_vertices},
                                      {"edges", c.gamma_edges},
                                      {"chi", c.gamma_chi()}}},
                           {"cylinder", {{"vertices", c.cylinder_vertices},
                                         {"edges", c.cylinder_edges},
                                         {"faces", c.cylinder_faces},
                                         {"chi", c.cylinder_chi()}}}});
      }
      auto& out               = report.findings;
      out["stages"]           = std::move(stages);
      out["collars"]          = std::move(collars);
      out["telescope"]        = {{"vertices", t.complex.vertices()},
                                 {"edges", t.complex.edges().size()},
                                 {"faces", t.complex.faces().size()},
                                 {"chi", t.complex.euler_characteristic()}};
      out["homology_telescope"] = io::homology_to_json(h_tel);
      out["homology_final"]     = io::homology_to_json(h_fin);
      out["homology_equal"]     = equal;
      out["stage0_subcomplex"]  = stage0;
      if (opts.emit_complex) {
        out["complex"] = io::complex_to_json(t.complex);
      }
      if (!equal || !stage0) {
        throw Error(ErrorKind::InvariantViolation,
                    "telescope does not preserve homology or stage 0");
      }
    });
  }

  RunReport cmd_pi2probe(std::string const& input, Options const& opts) {
    return guarded("pi2probe", opts, [&](RunReport& report) {
      Presentation const p = load_presentation(input, opts, report);
      report.findings      = verdict_to_json(asphericity_verdict(p, opts.limit));
    });
  }

  std::vector<std::string> const& command_names() {
    static std::vector<std::string> const names = {
        "check", "normalize", "ribbon", "sublinks", "homology", "telescope", "pi2probe"};
    return names;
  }

  RunReport run_command(std::string const& command, std::string const& input,
                        Options const& opts) {
    if (command == "check") {
      return cmd_check(input, opts);
    }
    if (command == "normalize") {
      return cmd_normalize(input, opts);
    }
    if (command == "ribbon") {
      return cmd_ribbon(input, opts);
    }
    if (command == "sublinks") {
      return cmd_sublinks(input, opts);
    }
    if (command == "homology") {
      return cmd_homology(input, opts);
    }
    if (command == "telescope") {
      return cmd_telescope(input, opts);
    }
    if (command == "pi2probe") {
      return cmd_pi2probe(input, opts);
    }
    RunReport report;
    report.command           = command;
    report.config            = opts.to_json();
    report.findings["error"] = {{"kind", "Usage"}, {"message", "unknown command"}};
    report.exit_code         = ExitCode::usage_error;
    return report;
  }

}  // namespace asphere::cli
