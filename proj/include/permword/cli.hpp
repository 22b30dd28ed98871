#pragma once

#include <algorithm>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permword/analysis.hpp"
#include "permword/doubling.hpp"
#include "permword/error.hpp"
#include "permword/patterns.hpp"
#include "permword/perm_set.hpp"
#include "permword/report.hpp"
#include "permword/spec_text.hpp"
#include "permword/suites.hpp"
#include "permword/word.hpp"

namespace permword {

namespace cli_detail {

struct CommonOpts {
  std::size_t horizon = kDefaultHorizon;
  std::size_t hard_cap = kDefaultHardCap;
  std::size_t compare_cap = CapPolicy{}.absolute;
  bool json = false;
  bool csv = false;

  CapPolicy policy() const {
    CapPolicy p;
    p.absolute = compare_cap;
    return p;
  }
};

inline void add_output_flags(CLI::App* cmd, CommonOpts& o) {
  auto* j = cmd->add_flag("--json", o.json, "Emit a JSON document");
  auto* c = cmd->add_flag("--csv", o.csv, "Emit CSV rows");
  j->excludes(c);
  c->excludes(j);
}

inline void add_limits(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--horizon", o.horizon, "Start positions to scan")->capture_default_str();
  cmd->add_option("--hard-cap", o.hard_cap, "Maximum materialized prefix length")
      ->capture_default_str();
  cmd->add_option("--compare-cap", o.compare_cap, "Absolute shift-comparison cap")
      ->capture_default_str();
}

struct Range {
  std::size_t lo = 0, hi = 0;
};

// "A..B" or a single "N"
inline Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  Range r;
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoull(text);
    } else {
      r.lo = std::stoull(text.substr(0, dots));
      r.hi = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or A..B, got '" + text + "'");
  }
  if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + text + "'");
  return r;
}

inline std::string cell(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : "-";
}

inline std::string match_cell(const ReportRow& r) {
  if (r.match) return *r.match ? "pass" : "FAIL";
  if (r.converged && !*r.converged) return "inconclusive";
  return "-";
}

inline void print_table(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << "word\tn\ttau\ttau_ev\ttau_odd\trho\tformula\tmatch\tconverged\thorizon\n";
  for (const auto& r : rows) {
    out << r.word << '\t' << r.n << '\t' << cell(r.tau) << '\t' << cell(r.tau_even) << '\t'
        << cell(r.tau_odd) << '\t' << cell(r.rho) << '\t' << cell(r.formula) << '\t'
        << match_cell(r) << '\t' << (r.converged ? (*r.converged ? "yes" : "no") : "-") << '\t'
        << r.horizon;
    if (!r.note.empty()) out << '\t' << r.note;
    out << '\n';
  }
}

inline void emit_rows(std::ostream& out, const CommonOpts& o, const std::string& command,
                      const std::string& word, const std::vector<ReportRow>& rows) {
  if (o.csv) {
    out << to_csv(rows);
  } else if (o.json) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["command"] = command;
    j["word"] = word;
    j["rows"] = rows_to_json(rows);
    out << j.dump(2) << '\n';
  } else {
    print_table(out, rows);
  }
}

}  // namespace cli_detail

// Dispatches one command line (without the program name).  Returns 0 on
// success or a passing suite, 1 on failure or engine error, 2 on usage
// errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using cli_detail::CommonOpts;
  using cli_detail::Range;

  CLI::App app{"infinite-permutation toolkit for aperiodic binary words"};
  app.require_subcommand(1);
  app.set_config("--config", "permword.ini",
                 "INI file with per-command defaults (horizon, caps)");

  std::string spec_text, range_text, suite_name;
  std::size_t at = 0, len = 0;
  bool split = false, no_cross_check = false;
  std::size_t samples = 1000;

  CommonOpts o;

  auto* cmd_word = app.add_subcommand("word", "Print a prefix of the word");
  cmd_word->add_option("spec", spec_text, "Word spec")->required();
  cmd_word->add_option("--len", len, "Prefix length")->required();
  cli_detail::add_limits(cmd_word, o);

  auto* cmd_rho = app.add_subcommand("rho", "Distinct factor counts over a range of lengths");
  cmd_rho->add_option("spec", spec_text)->required();
  cmd_rho->add_option("-n,--range", range_text, "Length or range A..B")->required();
  cli_detail::add_limits(cmd_rho, o);
  cli_detail::add_output_flags(cmd_rho, o);

  auto* cmd_tau = app.add_subcommand("tau", "Distinct subpermutation counts over a range");
  cmd_tau->add_option("spec", spec_text)->required();
  cmd_tau->add_option("-n,--range", range_text, "Length or range A..B")->required();
  cmd_tau->add_flag("--split", split, "Report even/odd start-parity counts");
  cli_detail::add_limits(cmd_tau, o);
  cli_detail::add_output_flags(cmd_tau, o);

  auto* cmd_perm = app.add_subcommand("perm", "Extract one subpermutation");
  cmd_perm->add_option("spec", spec_text)->required();
  cmd_perm->add_option("--at", at, "Start position")->required();
  cmd_perm->add_option("--len", len, "Window length")->required();
  cli_detail::add_limits(cmd_perm, o);

  auto* cmd_delta = app.add_subcommand("delta", "Forward image of a window in the doubled word");
  cmd_delta->add_option("spec", spec_text)->required();
  cmd_delta->add_option("--at", at, "Window start")->required();
  cmd_delta->add_option("--len", len, "Window length n (input has length n+k)")->required();
  cmd_delta->add_flag("--no-cross-check", no_cross_check, "Skip the extraction cross-check");
  cli_detail::add_limits(cmd_delta, o);
  cli_detail::add_output_flags(cmd_delta, o);

  auto* cmd_classes = app.add_subcommand("classes", "Run classes of the word");
  cmd_classes->add_option("spec", spec_text)->required();
  cli_detail::add_limits(cmd_classes, o);
  cli_detail::add_output_flags(cmd_classes, o);

  auto* cmd_pairs = app.add_subcommand("pairs", "Same-form groups and their pair types");
  cmd_pairs->add_option("spec", spec_text)->required();
  cmd_pairs->add_option("--len", len, "Subpermutation length")->required();
  cli_detail::add_limits(cmd_pairs, o);
  cli_detail::add_output_flags(cmd_pairs, o);

  auto* cmd_verify = app.add_subcommand("verify", "Run a named verification suite");
  cmd_verify->add_option("suite", suite_name, "One of: sturmian-tau, doubled-sturmian, tm-rho, "
                                              "tm-tau, doubled-tm, complement, bounds, "
                                              "delta-oracle, restrictions, type1-exclusion, "
                                              "restriction-equivalence, tm-pairs, tm-injectivity")
      ->required();
  cmd_verify->add_option("spec", spec_text)->required();
  cmd_verify->add_option("-n,--range", range_text, "Range A..B")->required();
  cmd_verify->add_option("--samples", samples, "Sample count for randomized suites")
      ->capture_default_str();
  cli_detail::add_limits(cmd_verify, o);
  cli_detail::add_output_flags(cmd_verify, o);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    WordSpec spec = parse_spec(spec_text);
    Word w(spec, o.hard_cap);

    if (*cmd_word) {
      out << w.prefix_string(len) << '\n';
      return 0;
    }

    if (*cmd_rho || *cmd_tau) {
      Range r = cli_detail::parse_range(range_text);
      PermEnumerator en(w, o.policy());
      std::vector<ReportRow> rows;
      if (*cmd_tau) en.reserve(o.horizon + r.hi);
      for (std::size_t n = r.lo; n <= r.hi; ++n) {
        ReportRow row;
        row.word = spec.render();
        row.n = n;
        row.horizon = o.horizon;
        if (*cmd_rho) {
          RhoReport rr = en.rho(n, o.horizon);
          row.rho = rr.count;
          row.converged = rr.converged;
        } else {
          PermSetReport ps = en.perm_set(n, o.horizon);
          row.tau = ps.tau;
          if (split) {
            row.tau_even = ps.even_count;
            row.tau_odd = ps.odd_count;
          }
          row.converged = ps.converged;
        }
        rows.push_back(std::move(row));
      }
      cli_detail::emit_rows(out, o, *cmd_rho ? "rho" : "tau", spec.render(), rows);
      return 0;
    }

    if (*cmd_perm) {
      out << extract_subperm(w, at, len, CapPolicy::for_window(len)).to_string() << '\n';
      return 0;
    }

    if (*cmd_delta) {
      DoublingMap dm(w, kDefaultScanHorizon, o.policy());
      DeltaResult d = dm.delta(at, len, !no_cross_check);
      if (o.json) {
        nlohmann::ordered_json j;
        j["schema"] = kReportSchema;
        j["command"] = "delta";
        j["word"] = spec.render();
        j["at"] = at;
        j["n"] = len;
        j["k"] = dm.k();
        j["input"] = d.input.to_string();
        j["window"] = d.window;
        j["classes"] = d.class_of;
        nlohmann::ordered_json sums = nlohmann::ordered_json::array();
        for (int jj = 0; jj < dm.classes().class_count(); ++jj) sums.push_back(d.profile.S(jj));
        j["S"] = sums;
        j["image"] = d.image.to_string();
        j["cross_check"] = d.cross_checked ? "ok" : "skipped";
        out << j.dump(2) << '\n';
      } else {
        out << "input:   " << d.input.to_string() << '\n';
        out << "window:  " << d.window << " (a=" << at << ", n=" << len << ", k=" << dm.k()
            << ")\n";
        out << "classes:";
        for (int c : d.class_of) out << ' ' << c;
        out << '\n';
        out << "S:      ";
        for (int jj = 0; jj < dm.classes().class_count(); ++jj) out << ' ' << d.profile.S(jj);
        out << '\n';
        out << "image:   " << d.image.to_string() << '\n';
        out << "cross-check: " << (d.cross_checked ? "ok" : "skipped") << '\n';
      }
      return 0;
    }

    if (*cmd_classes) {
      ClassTable table(w, std::max(o.horizon, kDefaultScanHorizon));
      if (o.json) {
        nlohmann::ordered_json j;
        j["schema"] = kReportSchema;
        j["command"] = "classes";
        j["word"] = spec.render();
        j["k0"] = table.k0();
        j["k1"] = table.k1();
        j["k"] = table.k();
        j["classes"] = table.classes();
        out << j.dump(2) << '\n';
      } else {
        out << "k0=" << table.k0() << " k1=" << table.k1() << " k=" << table.k() << '\n';
        for (int jj = 0; jj < table.class_count(); ++jj)
          out << "C" << jj << " = " << table.classes()[static_cast<std::size_t>(jj)] << '\n';
      }
      return 0;
    }

    if (*cmd_pairs) {
      PermEnumerator en(w, o.policy());
      PermSetReport ps = en.perm_set(len, o.horizon);
      std::map<std::string, std::vector<const SubPermutation*>> by_form;
      for (const auto& p : ps.perms) by_form[form_of(p)].push_back(&p);
      nlohmann::ordered_json groups = nlohmann::ordered_json::array();
      for (const auto& [form, members] : by_form) {
        if (members.size() < 2) continue;
        if (o.json) {
          nlohmann::ordered_json g;
          g["form"] = form;
          nlohmann::ordered_json perms = nlohmann::ordered_json::array();
          for (auto* p : members) perms.push_back(p->to_string());
          g["perms"] = perms;
          nlohmann::ordered_json types = nlohmann::ordered_json::array();
          for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y) {
              auto t = complementary_pair_type(*members[x], *members[y]);
              types.push_back(t ? nlohmann::ordered_json(*t) : nlohmann::ordered_json(nullptr));
            }
          g["pair_types"] = types;
          groups.push_back(std::move(g));
        } else {
          out << "form " << form << ":";
          for (auto* p : members) out << ' ' << p->to_string();
          for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y) {
              auto t = complementary_pair_type(*members[x], *members[y]);
              out << " type " << (t ? std::to_string(*t) : std::string("none"));
            }
          out << '\n';
        }
      }
      if (o.json) {
        nlohmann::ordered_json j;
        j["schema"] = kReportSchema;
        j["command"] = "pairs";
        j["word"] = spec.render();
        j["n"] = len;
        j["horizon"] = o.horizon;
        j["tau"] = ps.tau;
        j["groups"] = groups;
        out << j.dump(2) << '\n';
      } else if (groups.empty()) {
        out << "no same-form groups of size >= 2 at length " << len << '\n';
      }
      return 0;
    }

    if (*cmd_verify) {
      Range r = cli_detail::parse_range(range_text);
      SuiteReport sr = verify_suite(suite_name, spec, r.lo, r.hi, o.horizon, o.policy(), samples);
      if (o.json) {
        out << to_json(sr).dump(2) << '\n';
      } else if (o.csv) {
        out << to_csv(sr.rows);
      } else {
        cli_detail::print_table(out, sr.rows);
        for (const auto& ce : sr.counterexamples) out << "counterexample: " << ce << '\n';
        out << "outcome: "
            << (sr.outcome() == SuiteOutcome::pass
                    ? "pass"
                    : sr.outcome() == SuiteOutcome::fail ? "fail" : "inconclusive")
            << '\n';
      }
      return sr.outcome() == SuiteOutcome::pass ? 0 : 1;
    }
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const error& e) {
    err << "error: " << e.what() << " [spec: " << spec_text << "]" << '\n';
    return 1;
  }

  err << "usage error: no command\n";
  return 2;
}

}  // namespace permword
