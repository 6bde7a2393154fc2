// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Usage: acceptance [path-to-asphere-binary]

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "asphere/commands.hpp"
#include "asphere/fuzz.hpp"
#include "asphere/pi2probe.hpp"
#include "asphere/ribbon.hpp"
#include "support.hpp"

using namespace asphere;
using namespace asphere::testing;

namespace {

  constexpr double unimodular_budget_s = 10.0;
  constexpr double lattice_budget_s    = 30.0;

  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  // Collects failures without stopping at the first one.
  class Tally {
   public:
    void expect(bool ok, std::string const& what) {
      ++_checks;
      if (!ok) {
        if (_failures++ < 5) {
          _first << " [" << what << "]";
        }
      }
    }
    std::size_t checks() const {
      return _checks;
    }
    Outcome outcome(std::string const& summary) const {
      std::ostringstream out;
      out << summary << "; " << _checks << " checks, " << _failures << " failures"
          << _first.str();
      return Outcome{_failures == 0, out.str()};
    }

   private:
    std::size_t        _checks   = 0;
    std::size_t        _failures = 0;
    std::ostringstream _first;
  };

  double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }

  bool throws_not_unimodular(SparseIntMatrix const& m) {
    try {
      reduce_to_identity(m);
    } catch (Error const& e) {
      return e.kind() == ErrorKind::NotUnimodular;
    }
    return false;
  }

  Outcome pivot_suite() {
    Tally      t;
    fuzz::Rng  rng(1001);
    auto const t0 = std::chrono::steady_clock::now();
    std::size_t uni = 0, non = 0;
    for (; uni < 500; ++uni) {
      std::size_t const     n = 1 + uni % 10;
      SparseIntMatrix const c = fuzz::random_unimodular(rng, n, fuzz::uniform(rng, 0, 50));
      bool                  ok = false;
      try {
        ok = apply_row_ops(reduce_to_identity(c), c).is_identity();
      } catch (Error const&) {
      }
      t.expect(ok, "unimodular #" + std::to_string(uni));
    }
    for (; non < 500; ++non) {
      std::size_t const     n = 1 + non % 10;
      SparseIntMatrix const c = fuzz::random_non_unimodular(rng, n, fuzz::uniform(rng, 0, 50));
      t.expect(!smith_normal_form(c).all_ones(), "oracle #" + std::to_string(non));
      t.expect(throws_not_unimodular(c), "non-unimodular #" + std::to_string(non));
    }
    double const elapsed = seconds_since(t0);
    t.expect(elapsed < unimodular_budget_s, "runtime");
    std::ostringstream s;
    s << uni << " unimodular + " << non << " non-unimodular, sizes 1-10, " << elapsed
      << " s (budget " << unimodular_budget_s << " s)";
    return t.outcome(s.str());
  }

  void check_normalization(Tally& t, Presentation const& p, std::string const& label) {
    NormalizationCertificate cert;
    try {
      cert = normalize(p);
    } catch (Error const& e) {
      t.expect(false, label + ": " + e.what());
      return;
    }
    t.expect(cert.exponent_check, label + ": exponent check");
    Presentation const np   = normalized(p, cert);
    BaseChange const   back = cert.base_change.inverse();
    for (std::size_t j = 1; j <= p.relator_count(); ++j) {
      t.expect(apply_base_change(back, np.relator(j)) == p.relator(j), label + ": round trip");
    }
    SparseIntMatrix const lhs = exponent_matrix(np);
    SparseIntMatrix const rhs = apply_row_ops(cert.row_log, exponent_matrix(p));
    for (std::size_t i = 1; i <= p.generators(); ++i) {
      for (std::size_t j = 1; j <= p.relator_count(); ++j) {
        t.expect(lhs.at(i, j) == rhs.at(i, j), label + ": equivariance");
      }
    }
  }

  Outcome normalization_suite() {
    Tally t;
    for (auto const& name : unimodular_fixtures()) {
      check_normalization(t, fixture(name), name);
    }
    fuzz::Rng rng(1002);
    for (int k = 0; k < 120; ++k) {
      Presentation const p = fuzz::random_unimodular_presentation(rng, fuzz::uniform(rng, 1, 6),
                                                                  fuzz::uniform(rng, 1, 8));
      check_normalization(t, p, "fuzz #" + std::to_string(k));
    }
    return t.outcome(std::to_string(unimodular_fixtures().size()) + " fixtures + 120 fuzz");
  }

  Outcome ribbon_round_trip() {
    Tally t;
    for (auto const& name : homology_trivial_fixtures()) {
      Presentation const p  = fixture(name);
      SurgeryCode const  sc = build_surgery_code(p);
      t.expect(exterior(sc, SublinkSelection{all_relators(p)}) == p, name + ": fill all");
      t.expect(verify_meridian_correspondence(sc, p), name + ": meridians");
      t.expect(exterior(sc, SublinkSelection{}).relator_count() == 0, name + ": fill none");
    }
    return t.outcome(std::to_string(homology_trivial_fixtures().size())
                     + " homology-trivial fixtures");
  }

  Outcome lattice_bijection() {
    Tally       t;
    double      slowest = 0;
    std::size_t largest = 0;
    for (auto const& name : homology_trivial_fixtures()) {
      Presentation const p = fixture(name);
      if (p.relator_count() > 10) {
        continue;
      }
      auto const        t0 = std::chrono::steady_clock::now();
      SurgeryCode const sc = build_surgery_code(p);
      auto const        lattice = all_sublinks(sc.component_count());
      t.expect(lattice.size() == (std::size_t{1} << p.relator_count()), name + ": 2^m");
      std::set<std::set<std::size_t>> images;
      for (auto const& sel : lattice) {
        SubcomplexSpec const s = sublink_to_subcomplex(sel, sc.handles());
        t.expect(s.is_1_full(), name + ": 1-full");
        t.expect(subcomplex_to_sublink(s) == sel, name + ": inverse");
        t.expect(exterior(sc, sel) == subcomplex_presentation(p, s), name + ": words");
        images.insert(s.relators);
      }
      t.expect(images.size() == lattice.size(), name + ": injective");
      slowest = std::max(slowest, seconds_since(t0));
      largest = std::max(largest, p.relator_count());
    }
    t.expect(largest == 10, "an m = 10 fixture is present");
    t.expect(slowest < lattice_budget_s, "runtime");
    std::ostringstream s;
    s << "largest m = " << largest << ", slowest fixture " << slowest << " s (budget "
      << lattice_budget_s << " s)";
    return t.outcome(s.str());
  }

  Outcome telescope_suite() {
    Tally       t;
    fuzz::Rng   rng(1005);
    std::size_t built = 0, collars = 0;
    while (built < 60) {
      Presentation const p      = fuzz::random_presentation(rng, 6, 6, 8);
      auto const         stages = fuzz::random_filtration(rng, p, 4);
      if (stages.size() < 2 || stages.size() > 4) {
        continue;
      }
      ++built;
      Filtration const f  = presentation_filtration(p, stages);
      Telescope const  tl = telescope(f);
      collars += tl.collars.size();
      t.expect(homology(tl.complex) == homology(f.complex), "homology #" + std::to_string(built));
      t.expect(is_subcomplex(tl.complex, tl.stage0)
                   && restrict(tl.complex, tl.stage0) == restrict(f.complex, f.stages.front()),
               "stage 0 #" + std::to_string(built));
    }
    return t.outcome(std::to_string(built) + " filtrations, " + std::to_string(collars)
                     + " collars");
  }

  bool witness_checks(Presentation const& p, Pi2Verdict const& v) {
    if (!v.table) {
      return false;
    }
    bool nonzero = false;
    for (auto const& x : v.witness) {
      nonzero = nonzero || x != 0;
    }
    for (auto const& x : multiply(lifted_boundary(p, *v.table), v.witness)) {
      if (x != 0) {
        return false;
      }
    }
    return nonzero;
  }

  Outcome pi2_calibration() {
    Tally            t;
    constexpr std::size_t limit = 5000;
    Presentation const rp2 = fixture("x2.pres");
    Pi2Verdict const   v   = asphericity_verdict(rp2, limit);
    t.expect(v.kind == Pi2Verdict::Kind::NotAspherical, "<x | x^2> verdict");
    t.expect(v.kernel_rank == std::size_t{1}, "<x | x^2> kernel rank");
    t.expect(witness_checks(rp2, v), "<x | x^2> witness");
    t.expect(asphericity_verdict(fixture("trivial.pres"), limit).kind
                 == Pi2Verdict::Kind::Aspherical,
             "<x | x>");
    for (GenIndex n = 1; n <= 5; ++n) {
      t.expect(asphericity_verdict(Presentation(n, {}), limit).kind
                   == Pi2Verdict::Kind::Aspherical,
               "free rank " + std::to_string(n));
    }
    std::size_t one_coset = 0;
    for (auto const& name : homology_trivial_fixtures()) {
      Presentation const p = fixture(name);
      Pi2Verdict const   w = asphericity_verdict(p, limit);
      if (w.table && w.table->complete() && w.table->cosets() == 1) {
        ++one_coset;
        t.expect(w.kind == Pi2Verdict::Kind::Aspherical, name + ": verdict");
        SurgeryCode const sc = build_surgery_code(p);
        t.expect(is_homologically_contractible(TwoComplex::from_presentation(
                     exterior(sc, SublinkSelection{all_relators(p)}))),
                 name + ": exterior");
      }
    }
    t.expect(one_coset > 0, "some fixture completes at one coset");
    return t.outcome(std::to_string(one_coset) + " homology-trivial fixtures complete at 1 coset");
  }

  Outcome free_group_laws() {
    Tally     t;
    fuzz::Rng rng(1007);
    for (int k = 0; k < 2500; ++k) {
      auto const raw = fuzz::random_letters(rng, 4, fuzz::uniform(rng, 0, 24));
      Word const r   = reduce(raw);
      t.expect(reduce(r.letters()) == r, "idempotence");

      Word const u = fuzz::random_word(rng, 4, 12), v = fuzz::random_word(rng, 4, 12),
                 w = fuzz::random_word(rng, 4, 12);
      t.expect(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)), "associativity");
      t.expect(invert(invert(u)) == u
                   && invert(multiply(u, v)) == multiply(invert(v), invert(u)),
               "involution");

      NielsenMove const m     = fuzz::random_move(rng, 4);
      auto              image = exponent_vector(u);
      std::map<GenIndex, long long> expected;
      for (auto const& [i, e] : image) {
        switch (m.kind()) {
          case NielsenMove::Kind::Swap:
            expected[i == m.first() ? m.second() : i == m.second() ? m.first() : i] += e;
            break;
          case NielsenMove::Kind::Invert:
            expected[i] += i == m.first() ? -e : e;
            break;
          case NielsenMove::Kind::RightMultiply:
            expected[i] += e;
            if (i == m.first()) {
              expected[m.second()] += e;
            }
            break;
        }
      }
      std::erase_if(expected, [](auto const& kv) { return kv.second == 0; });
      t.expect(exponent_vector(apply_move(m, u)) == expected, "equivariance");
    }
    return t.outcome("2500 rounds of 4 laws");
  }

  std::string capture(std::string const& command, int& status) {
    std::string out;
    FILE*       pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
      status = -1;
      return out;
    }
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
      out.append(buf.data(), n);
    }
    status = pclose(pipe);
    return out;
  }

  Outcome determinism(std::string const& tool) {
    Tally                          t;
    std::vector<std::string> const inputs = {fixture_path("commutator.pres"),
                                             fixture_path("ab2.pres"), "fuzz:4"};
    for (auto const& name : cli::command_names()) {
      std::string extra = name == "sublinks" ? " --enumerate" : "";
      for (auto const& input : inputs) {
        if (tool.empty()) {
          cli::Options opts;
          opts.enumerate = name == "sublinks";
          opts.seed      = 9;
          t.expect(cli::run_command(name, input, opts).to_json()["findings"].dump()
                       == cli::run_command(name, input, opts).to_json()["findings"].dump(),
                   name + " " + input);
          continue;
        }
        std::string const cmd = "'" + tool + "' --json --seed 9 " + name + " '" + input + "'"
                                + extra + " 2>/dev/null";
        int               s1 = 0, s2 = 0;
        std::string const a = capture(cmd, s1);
        std::string const b = capture(cmd, s2);
        bool parsed = false;
        try {
          parsed = cli::json::parse(a)["findings"] == cli::json::parse(b)["findings"];
        } catch (std::exception const&) {
        }
        t.expect(parsed && a == b && s1 == s2, name + " " + input);
      }
    }
    return t.outcome(std::string(tool.empty() ? "in-process" : "via the CLI binary") + ", "
                     + std::to_string(cli::command_names().size()) + " commands x "
                     + std::to_string(inputs.size()) + " inputs");
  }

}  // namespace

int main(int argc, char** argv) {
  std::string const tool = argc > 1 ? argv[1] : "";

  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria = {
      {"pivot reduction on unimodular / non-unimodular matrices", pivot_suite},
      {"normalization certificates", normalization_suite},
      {"surgery code round trip", ribbon_round_trip},
      {"sublink / 1-full subcomplex bijection", lattice_bijection},
      {"telescope homology and stage 0", telescope_suite},
      {"pi2 probe calibration", pi2_calibration},
      {"free-group laws", free_group_laws},
      {"CLI determinism", [&] { return determinism(tool); }},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (std::exception const& e) {
      o = Outcome{false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << (k + 1) << ": "
              << criteria[k].first << " -- " << o.detail << "\n";
  }
  return all ? 0 : 1;
}
