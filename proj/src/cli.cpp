#include "cartk/cli.hpp"

#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cartk/verify.hpp"

namespace cartk {

namespace {

using Json = nlohmann::ordered_json;

struct RingFlags {
  unsigned characteristic = 3;
  std::string vars = "x";
  std::string filtvar;
};

struct ModuleFlags {
  long carrier_shift = 0;
  std::string twist = "1";
  bool model = false;
};

struct BoundFlags {
  int emax = 6;
  unsigned denom_bound = 30;
  long budget = 1000000;
};

void add_ring_flags(CLI::App* cmd, RingFlags& rf) {
  cmd->add_option("--char", rf.characteristic, "characteristic p (odd prime <= 97)")
      ->required();
  cmd->add_option("--vars", rf.vars, "comma-separated variable names (default x)");
  cmd->add_option("--filtvar", rf.filtvar, "filtration variable (default: first)");
}

void add_module_flags(CLI::App* cmd, ModuleFlags& mf) {
  cmd->add_option("--carrier-shift", mf.carrier_shift, "carrier is x^{-shift} R");
  cmd->add_option("--twist", mf.twist, "twist polynomial g (default 1)");
  cmd->add_flag("--model", mf.model, "mark the module as a pushforward model");
}

void add_bound_flags(CLI::App* cmd, BoundFlags& bf) {
  cmd->add_option("--emax", bf.emax, "Frobenius level bound (default 6)");
  cmd->add_option("--denom-bound", bf.denom_bound, "denominator bound (default 30)");
  cmd->add_option("--budget", bf.budget, "Buchberger pair budget (default 10^6)");
}

RingHandle build_ring(const RingFlags& rf) {
  std::vector<std::string> names;
  std::stringstream ss(rf.vars);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) names.push_back(item);
  }
  if (names.empty()) throw invalid_argument("no variables given");
  std::size_t filt = 0;
  if (!rf.filtvar.empty()) {
    auto it = std::find(names.begin(), names.end(), rf.filtvar);
    if (it == names.end())
      throw invalid_argument("filtration variable '" + rf.filtvar + "' not in --vars");
    filt = static_cast<std::size_t>(it - names.begin());
  }
  return make_ring(rf.characteristic, std::move(names), filt);
}

Budgets build_budgets(const BoundFlags& bf) {
  Budgets b;
  b.e_max = bf.emax;
  b.pair_budget = bf.budget;
  return b;
}

CartierModuleDesc build_module(const RingHandle& ring, const ModuleFlags& mf,
                               const Budgets& budgets) {
  if (mf.carrier_shift < 0) throw invalid_argument("carrier shift must be >= 0");
  FractionalSubmodule carrier =
      FractionalSubmodule::fractional_full(ring, Integer(mf.carrier_shift));
  Polynomial twist = parse_polynomial(mf.twist, ring);
  Provenance prov = mf.model ? Provenance::pushforward_model : Provenance::plain;
  return CartierModuleDesc(carrier, twist, prov, budgets);
}

Json ring_json(const RingHandle& ring) {
  Json j;
  j["char"] = ring->characteristic();
  j["vars"] = ring->variables();
  j["filtvar"] = ring->filtration_variable();
  return j;
}

Json submodule_json(const FractionalSubmodule& v) {
  Json j;
  j["shift"] = v.shift().get_str();
  Json basis = Json::array();
  for (const auto& g : v.basis().elements()) basis.push_back(to_string(g));
  j["basis"] = basis;
  return j;
}

std::string submodule_tsv(const FractionalSubmodule& v) {
  std::ostringstream os;
  os << v.shift().get_str();
  for (const auto& g : v.basis().elements()) os << "\t" << to_string(g);
  return os.str();
}

void parse_window(const std::string& text, Rational& lo, Rational& hi) {
  auto pos = text.find(':');
  if (pos == std::string::npos)
    throw invalid_argument("window must look like lo:hi");
  lo = parse_rational(text.substr(0, pos));
  hi = parse_rational(text.substr(pos + 1));
  if (!(lo <= hi)) throw invalid_argument("window must satisfy lo <= hi");
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact Cartier-module and test-module calculator over F_p"};
  app.require_subcommand(1);

  RingFlags rf;
  ModuleFlags mf;
  BoundFlags bf;
  std::string f_text, t_text = "0", format = "json", window_text = "0:2";
  std::string lo_text = "0", hi_text = "1";
  unsigned kummer_degree = 1;
  long twist_exponent = 0;
  std::vector<unsigned> char_filter;

  auto* tau = app.add_subcommand("tau", "test module tau(M, f^t)");
  auto* jumps = app.add_subcommand("jumps", "jumping numbers on an interval");
  auto* fpt = app.add_subcommand("fpt", "first jumping number in (0,1]");
  auto* gr = app.add_subcommand("gr", "graded piece of the test module filtration");
  auto* vfil = app.add_subcommand("vfilt", "tame V-filtration table");
  auto* axioms = app.add_subcommand("axioms", "V-filtration axiom checks");
  auto* compare = app.add_subcommand("compare", "V-filtration vs test module filtration");
  auto* counter = app.add_subcommand("counterexample",
                                     "graph-embedding p-power obstruction");
  auto* verify = app.add_subcommand("verify-paper", "run the full verification matrix");

  for (CLI::App* cmd : {tau, jumps, fpt, gr}) {
    add_ring_flags(cmd, rf);
    add_module_flags(cmd, mf);
    add_bound_flags(cmd, bf);
    cmd->add_option("--f", f_text, "filtration element (default: the filtration variable)");
    cmd->add_option("--format", format, "json or tsv");
  }
  tau->add_option("--t", t_text, "exact rational parameter a/b")->required();
  gr->add_option("--t", t_text, "exact rational parameter a/b")->required();
  jumps->add_option("--lo", lo_text, "interval start (default 0)");
  jumps->add_option("--hi", hi_text, "interval end (default 1)");

  for (CLI::App* cmd : {vfil, axioms, compare}) {
    add_ring_flags(cmd, rf);
    add_bound_flags(cmd, bf);
    cmd->add_option("--n", kummer_degree, "covering degree (divides p-1)")->required();
    cmd->add_option("--s", twist_exponent, "twist exponent")->required();
    cmd->add_option("--window", window_text, "window lo:hi (default 0:2)");
    cmd->add_option("--format", format, "json or tsv");
  }

  counter->add_option("--char", rf.characteristic, "characteristic p")->required();
  counter->add_option("--s", twist_exponent, "twist exponent, 1 <= s <= p-2")->required();
  counter->add_option("--format", format, "json or tsv");

  verify->add_option("--char", char_filter, "restrict to these characteristics");
  verify->add_option("--format", format, "json or tsv");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    if (e.get_exit_code() == 0) {
      std::ostringstream help;
      help << app.help();
      return CliResult{0, help.str()};
    }
    os << "usage error: " << e.what() << "\n";
    return CliResult{1, os.str()};
  }

  const bool json_out = format != "tsv";
  std::ostringstream out;
  try {
    Budgets budgets = build_budgets(bf);
    if (verify->parsed()) {
      auto results = run_verification(char_filter);
      bool all = true;
      if (json_out) {
        Json arr = Json::array();
        for (const auto& r : results) {
          all = all && r.pass;
          Json row;
          row["id"] = r.id;
          row["label"] = r.label;
          row["status"] = r.pass ? "pass" : "fail";
          row["detail"] = r.detail;
          arr.push_back(row);
        }
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& r : results) {
          all = all && r.pass;
          out << (r.pass ? "PASS" : "FAIL") << "\t" << r.id << "\t" << r.label << "\t"
              << r.detail << "\n";
        }
      }
      return CliResult{all ? 0 : 3, out.str()};
    }

    if (counter->parsed()) {
      CounterexampleReport rep = graph_embedding_counterexample(
          rf.characteristic, static_cast<unsigned>(twist_exponent), budgets);
      std::string summary = std::string(rep.member ? "MEMBER" : "NON-MEMBER") +
                            " witness " + to_string(rep.witness);
      if (json_out) {
        Json j;
        j["command"] = "counterexample";
        j["char"] = rf.characteristic;
        j["s"] = twist_exponent;
        j["member"] = rep.member;
        j["witness"] = to_string(rep.witness);
        j["ideal"] = rep.ideal_basis;
        j["summary"] = summary;
        j["interpretation"] = rep.interpretation;
        out << j.dump(2) << "\n";
      } else {
        out << summary << "\n";
      }
      return CliResult{0, out.str()};
    }

    RingHandle ring = build_ring(rf);
    if (tau->parsed() || jumps->parsed() || fpt->parsed() || gr->parsed()) {
      CartierModuleDesc M = build_module(ring, mf, budgets);
      Polynomial f = f_text.empty()
                         ? Polynomial::variable(ring, ring->filtration_index())
                         : parse_polynomial(f_text, ring);
      if (tau->parsed()) {
        Rational t = parse_rational(t_text);
        FractionalSubmodule result = test_module(M, f, t, std::nullopt, budgets);
        if (json_out) {
          Json j;
          j["command"] = "tau";
          j["ring"] = ring_json(ring);
          j["f"] = to_string(f);
          j["t"] = rational_to_string(t);
          j["result"] = submodule_json(result);
          out << j.dump(2) << "\n";
        } else {
          out << submodule_tsv(result) << "\n";
        }
      } else if (gr->parsed()) {
        Rational t = parse_rational(t_text);
        GradedPiece piece = graded_piece(M, f, t, bf.denom_bound, budgets);
        if (json_out) {
          Json j;
          j["command"] = "gr";
          j["ring"] = ring_json(ring);
          j["f"] = to_string(f);
          j["t"] = rational_to_string(t);
          j["numerator"] = submodule_json(piece.numerator);
          j["denominator"] = submodule_json(piece.denominator);
          j["twist_exponent"] = piece.twist_exponent.get_str();
          j["zero_piece"] = piece.is_zero_piece();
          j["annihilated_by_f"] = piece.annihilated_by_f;
          out << j.dump(2) << "\n";
        } else {
          out << submodule_tsv(piece.numerator) << "\n"
              << submodule_tsv(piece.denominator) << "\n";
        }
      } else {
        Rational lo = parse_rational(lo_text), hi = parse_rational(hi_text);
        bool lo_is_zero_fpt = fpt->parsed();
        if (lo_is_zero_fpt) {
          lo = 0;
          hi = 1;
        }
        std::vector<Rational> found =
            jumping_numbers(M, f, lo, hi, bf.denom_bound, true, budgets);
        if (fpt->parsed()) {
          if (json_out) {
            Json j;
            j["command"] = "fpt";
            j["ring"] = ring_json(ring);
            j["f"] = to_string(f);
            j["fpt"] = found.empty() ? Json(nullptr) : Json(rational_to_string(found.front()));
            out << j.dump(2) << "\n";
          } else {
            out << (found.empty() ? "none" : rational_to_string(found.front())) << "\n";
          }
        } else {
          if (json_out) {
            Json j;
            j["command"] = "jumps";
            j["ring"] = ring_json(ring);
            j["f"] = to_string(f);
            j["interval"] = {rational_to_string(lo), rational_to_string(hi)};
            j["grid_denominator"] =
                std::to_string(bf.denom_bound * rf.characteristic * rf.characteristic);
            Json arr = Json::array();
            for (const auto& t : found) arr.push_back(rational_to_string(t));
            j["jumps"] = arr;
            out << j.dump(2) << "\n";
          } else {
            for (const auto& t : found) out << rational_to_string(t) << "\n";
          }
        }
      }
      return CliResult{0, out.str()};
    }

    // V-filtration family.
    Rational lo, hi;
    parse_window(window_text, lo, hi);
    TameDescriptor d{ring, kummer_degree, Integer(twist_exponent)};
    if (vfil->parsed()) {
      FiltrationTable table = v_filtration(d, lo, hi, budgets);
      if (json_out) {
        Json j;
        j["command"] = "vfilt";
        j["ring"] = ring_json(ring);
        j["n"] = kummer_degree;
        j["s"] = twist_exponent;
        j["window"] = {rational_to_string(lo), rational_to_string(hi)};
        Json arr = Json::array();
        for (const auto& entry : table.entries()) {
          Json row;
          row["t"] = rational_to_string(entry.t);
          row["value"] = submodule_json(entry.value);
          arr.push_back(row);
        }
        j["entries"] = arr;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& entry : table.entries())
          out << rational_to_string(entry.t) << "\t" << submodule_tsv(entry.value) << "\n";
      }
    } else if (axioms->parsed()) {
      FiltrationTable table = v_filtration(d, lo, hi, budgets);
      Polynomial f = Polynomial::variable(ring, ring->filtration_index());
      VAxiomReport rep = check_v_axioms(table, f, budgets);
      if (json_out) {
        Json arr = Json::array();
        for (const auto& row : rep.rows) {
          Json jr;
          jr["axiom"] = row.axiom;
          jr["status"] = row.pass ? "pass" : "fail";
          jr["witness"] = row.witness;
          jr["notes"] = row.notes;
          arr.push_back(jr);
        }
        Json j;
        j["command"] = "axioms";
        j["all_pass"] = rep.all_pass;
        j["rows"] = arr;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& row : rep.rows)
          out << (row.pass ? "pass" : "fail") << "\t" << row.axiom << "\t" << row.notes
              << "\n";
      }
    } else if (compare->parsed()) {
      CompareReport rep = compare_v_with_tau(d, lo, hi, budgets);
      if (json_out) {
        Json arr = Json::array();
        for (const auto& row : rep.rows) {
          Json jr;
          jr["t"] = rational_to_string(row.t);
          jr["status"] = row.pass ? "pass" : "fail";
          jr["witness"] = row.v_value;
          jr["notes"] = "tau side: " + row.tau_value;
          arr.push_back(jr);
        }
        Json j;
        j["command"] = "compare";
        j["all_pass"] = rep.all_pass;
        j["graded"] = rep.graded_pass ? "pass" : "fail";
        j["graded_notes"] = rep.graded_notes;
        j["rows"] = arr;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& row : rep.rows)
          out << (row.pass ? "pass" : "fail") << "\t" << rational_to_string(row.t)
              << "\n";
      }
    }
    return CliResult{0, out.str()};
  } catch (const budget_exceeded& e) {
    return CliResult{2, std::string("budget: ") + e.what() + "\n"};
  } catch (const stabilization_failure& e) {
    return CliResult{2, std::string("stabilization: ") + e.what() + "\n"};
  } catch (const error& e) {
    return CliResult{1, std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return CliResult{1, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace cartk
