#include "qfib/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>

#include "qfib/codec.hpp"
#include "qfib/families.hpp"
#include "qfib/morse.hpp"
#include "qfib/operators.hpp"
#include "qfib/qseries.hpp"
#include "qfib/verify.hpp"

namespace qfib {

namespace {

struct Substitution {
  Var var = Var::s;
  int power = 0;
};

const std::regex kSubstPattern(R"(^([xs])=q\^?(-?\d+)?$)");

std::optional<Substitution> parse_subst(const std::string& text) {
  std::smatch m;
  if (!std::regex_match(text, m, kSubstPattern)) return std::nullopt;
  Substitution out;
  out.var = m[1] == "x" ? Var::x : Var::s;
  out.power = m[2].matched ? std::stoi(m[2]) : 1;
  return out;
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (FamilyId id : all_families()) out.emplace_back(to_string(id));
  return out;
}

std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (const auto* list : {&registry(), &harness_registry()}) {
    for (const auto& id : *list) out.push_back(id.name);
  }
  return out;
}

std::vector<std::string> gf_names() {
  std::vector<std::string> out;
  for (GfId id : {GfId::fib_num, GfId::lucas_num, GfId::f_xs, GfId::L_xs, GfId::f_carlitz, GfId::fib}) {
    out.emplace_back(to_string(id));
  }
  return out;
}

const CLI::Validator kSubstValidator(
    [](std::string& value) -> std::string {
      return parse_subst(value) ? std::string() : "expected s=q^j or x=q^j, got '" + value + "'";
    },
    "s=q^j|x=q^j", "substitution");

void print_poly(std::ostream& out, const XsPoly& p, const std::string& format) {
  if (format == "json") {
    out << encode_poly(p).dump() << '\n';
  } else {
    out << render(p) << '\n';
  }
}

std::string report_line(const VerifyReport& r) {
  std::string line = (r.pass ? "PASS " : "FAIL ") + r.name + " [" + r.range + "]";
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    line += " at";
    for (const auto& [name, value] : c.indices) line += " " + name + "=" + std::to_string(value);
    line += " (" + c.part + "): " + c.lhs + " != " + c.rhs;
  }
  return line;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-Fibonacci and q-Lucas polynomial toolkit", "qfib"};
  app.require_subcommand(1, 1);
  const auto families = family_names();

  std::string id_name;
  std::string format = "text";
  int n = 0;
  int nmax = 0;
  std::optional<int> mmax;
  std::string subst;

  auto* family_cmd = app.add_subcommand("family", "print one family member");
  family_cmd->add_option("--id", id_name, "family id")->required()->check(CLI::IsMember(families));
  family_cmd->add_option("--n", n, "index")->required()->check(CLI::NonNegativeNumber);
  family_cmd->add_option("--subst", subst, "substitution s=q^j or x=q^j")->check(kSubstValidator);
  family_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* table_cmd = app.add_subcommand("table", "print a family for n = 0..nmax");
  table_cmd->add_option("--id", id_name, "family id")->required()->check(CLI::IsMember(families));
  table_cmd->add_option("--nmax", nmax)->required()->check(CLI::NonNegativeNumber);
  table_cmd->add_option("--format", format)->required()->check(CLI::IsMember({"csv", "json", "text"}));

  std::string identity;
  bool all = false;
  auto* verify_cmd = app.add_subcommand("verify", "check identities");
  auto* identity_opt =
      verify_cmd->add_option("--identity", identity, "identity name")->check(CLI::IsMember(identity_names()));
  auto* all_opt = verify_cmd->add_flag("--all", all, "run the whole registry");
  identity_opt->excludes(all_opt);
  verify_cmd->add_option("--nmax", nmax)->required()->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mmax", mmax)->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string kind;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force Morse sums for n = 0..nmax");
  oracle_cmd->add_option("--kind", kind)->required()->check(CLI::IsMember({"count", "w", "v", "W", "periodic"}));
  oracle_cmd->add_option("--nmax", nmax)->required()->check(CLI::NonNegativeNumber);
  oracle_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string gf_name;
  int order = 0;
  bool check = false;
  auto* series_cmd = app.add_subcommand("series", "generating function coefficients");
  series_cmd->add_option("--gf", gf_name)->required()->check(CLI::IsMember(gf_names()));
  series_cmd->add_option("--order", order)->required()->check(CLI::NonNegativeNumber);
  series_cmd->add_flag("--check", check, "compare every coefficient with the family");
  series_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string moment_family;
  auto* moments_cmd = app.add_subcommand("moments", "moments Lambda(x^n) for n = 0..nmax");
  moments_cmd->add_option("--family", moment_family)->required()->check(CLI::IsMember({"f", "l", "fib", "luc"}));
  moments_cmd->add_option("--nmax", nmax)->required()->check(CLI::NonNegativeNumber);
  moments_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string path;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "write Morse sequences of length n as JSON Lines");
  fixtures_cmd->add_option("--n", n)->required()->check(CLI::Range(0, 30));
  fixtures_cmd->add_option("--out", path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qfib: " << e.what() << '\n';
    return 2;
  }

  if (*verify_cmd && !all && identity.empty()) {
    err << "qfib: verify needs --identity <name> or --all\n";
    return 2;
  }

  try {
    if (*family_cmd) {
      XsPoly p = family(id_name, n);
      if (!subst.empty()) {
        const Substitution sub = *parse_subst(subst);
        p = subst_scale(p, sub.var, sub.power);
      }
      print_poly(out, p, format);
      return 0;
    }

    if (*table_cmd) {
      if (format == "csv") out << "n,polynomial\n";
      Json rows = Json::array();
      for (int i = 0; i <= nmax; ++i) {
        const XsPoly p = family(id_name, i);
        if (format == "csv") {
          out << i << ',' << render(p) << '\n';
        } else if (format == "text") {
          out << i << ": " << render(p) << '\n';
        } else {
          rows.push_back({{"n", i}, {"poly", encode_poly(p)}});
        }
      }
      if (format == "json") out << rows.dump() << '\n';
      return 0;
    }

    if (*verify_cmd) {
      std::vector<VerifyReport> reports;
      if (all) {
        reports = run_all(nmax, mmax);
      } else {
        reports.push_back(run_identity(identity, nmax, mmax));
      }
      const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(encode_report(r));
        out << arr.dump() << '\n';
      } else {
        for (const auto& r : reports) out << report_line(r) << '\n';
      }
      return ok ? 0 : 1;
    }

    if (*oracle_cmd) {
      const OracleKind k = kind == "count" ? OracleKind::count
                           : kind == "w"   ? OracleKind::w_sum
                           : kind == "v"   ? OracleKind::v_sum
                           : kind == "W"   ? OracleKind::W_sum
                                           : OracleKind::periodic_w;
      Json rows = Json::array();
      for (int i = 0; i <= nmax; ++i) {
        const XsPoly p = oracle(k, i);
        if (format == "json") {
          rows.push_back({{"n", i}, {"poly", encode_poly(p)}});
        } else {
          out << i << ": " << render(p) << '\n';
        }
      }
      if (format == "json") out << rows.dump() << '\n';
      return 0;
    }

    if (*series_cmd) {
      const GfId id = parse_gf_id(gf_name);
      const ZSeries series = gf(id, order);
      bool ok = true;
      Json rows = Json::array();
      for (int i = 0; i <= order; ++i) {
        const XsPoly& c = series.coeff(i);
        const bool match = !check || c == gf_expected(id, i);
        ok = ok && match;
        if (format == "json") {
          Json row{{"n", i}, {"coeff", encode_poly(c)}};
          if (check) row["match"] = match;
          rows.push_back(std::move(row));
        } else {
          out << "z^" << i << ": " << render(c) << (check && !match ? "  MISMATCH" : "") << '\n';
        }
      }
      if (format == "json") out << rows.dump() << '\n';
      if (check && format == "text") out << (ok ? "check: ok" : "check: FAILED") << '\n';
      return ok ? 0 : 1;
    }

    if (*moments_cmd) {
      const MomentFamily basis = moment_family == "f"     ? MomentFamily::f_xs
                                 : moment_family == "l"   ? MomentFamily::l_xs
                                 : moment_family == "fib" ? MomentFamily::fib
                                                          : MomentFamily::luc;
      Json rows = Json::array();
      for (int i = 0; i <= nmax; ++i) {
        const XsPoly m = moment(basis, i);
        if (format == "json") {
          rows.push_back({{"n", i}, {"moment", encode_poly(m)}});
        } else {
          out << i << ": " << render(m) << '\n';
        }
      }
      if (format == "json") out << rows.dump() << '\n';
      return 0;
    }

    if (*fixtures_cmd) {
      std::ofstream file(path);
      if (!file) {
        err << "qfib: cannot open --out " << path << " for writing\n";
        return 2;
      }
      const auto seqs = enumerate(n);
      for (const auto& c : seqs) file << encode_fixture(c).dump() << '\n';
      out << "wrote " << seqs.size() << " sequences to " << path << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    err << "qfib: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace qfib
