#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circfol/arithmetic.hpp"
#include "circfol/asymptotics.hpp"
#include "circfol/chebyshev.hpp"
#include "circfol/errors.hpp"
#include "circfol/foliation.hpp"
#include "circfol/foliation_json.hpp"
#include "circfol/kirchhoff.hpp"
#include "circfol/tree_counter.hpp"

using namespace circfol;
using nlohmann::json;

namespace {

struct Config {
  std::string family;
  std::string spec_path;
  std::string format;
  mp::Bits precision = mp::kDefaultBits;
  long n = 0;
  long from = 0;
  long to = 0;
  bool verify = false;
  bool oracle = false;
  std::size_t oracle_max_vertices = 400;
  std::vector<long> samples{25, 50, 100, 200};
  int digits = 30;
};

FoliationSpec load_spec(const Config& cfg) {
  if (!cfg.family.empty()) return parse_family(cfg.family);
  return read_spec_file(cfg.spec_path);
}

// Rows of strings rendered as csv / tsv; json is built separately per command.
void print_delimited(std::ostream& os, const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows, char sep) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? std::string(1, sep) : "") << cells[i];
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

json poly_json(const IntPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return {{"low_degree", 0}, {"coeffs", coeffs}, {"text", p.str("w")}};
}

json laurent_json(const IntLaurent& p) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return {{"low_degree", p.low_degree()}, {"coeffs", coeffs}, {"text", p.str("z")}};
}

bool oracle_allowed(const FoliationSpec& spec, long n, const Config& cfg) {
  return static_cast<std::size_t>(n) * spec.vertex_count() <= cfg.oracle_max_vertices;
}

// ---- count

int cmd_count(const Config& cfg) {
  const FoliationSpec spec = load_spec(cfg);
  if (cfg.n < 3) throw InvalidSpec("n must be at least 3");

  if (cfg.oracle) {
    const TauResult r = tau_by_oracle(spec, cfg.n);
    if (cfg.format == "json")
      std::cout << json{{"n", cfg.n}, {"tau", r.tau.get_str()}, {"route", "oracle"}}.dump(2) << '\n';
    else
      std::cout << r.tau.get_str() << '\n';
    return 0;
  }

  const TauResult exact = tau_exact(spec, cfg.n);
  if (!cfg.verify) {
    if (cfg.format == "json")
      std::cout << json{{"n", cfg.n}, {"tau", exact.tau.get_str()}}.dump(2) << '\n';
    else
      std::cout << exact.tau.get_str() << '\n';
    return 0;
  }

  std::vector<TauResult> routes{exact, tau_spectral_roots(spec, cfg.n, cfg.precision),
                                tau_spectral_eps(spec, cfg.n, cfg.precision)};
  const bool gated = oracle_allowed(spec, cfg.n, cfg);
  if (gated) routes.push_back(tau_by_oracle(spec, cfg.n));
  bool agree = true;
  for (const auto& r : routes) agree = agree && r.tau == exact.tau;

  std::vector<std::vector<std::string>> rows;
  json jr = json::array();
  for (const auto& r : routes) {
    std::string residual, bits;
    if (r.diagnostics) {
      std::ostringstream os;
      os.precision(3);
      os << std::scientific << r.diagnostics->residual;
      residual = os.str();
      bits = std::to_string(r.diagnostics->bits);
    }
    const bool ok = r.tau == exact.tau;
    rows.push_back({route_name(r.route), r.tau.get_str(), residual, bits, ok ? "true" : "false"});
    json o{{"route", route_name(r.route)}, {"tau", r.tau.get_str()}, {"agree", ok}};
    if (r.diagnostics) {
      o["residual"] = residual;
      o["bits"] = r.diagnostics->bits;
    }
    jr.push_back(o);
  }
  if (!gated) rows.push_back({"oracle", "", "", "", "skipped"});

  if (cfg.format == "json") {
    json out{{"n", cfg.n}, {"tau", exact.tau.get_str()}, {"routes", jr}, {"agree", agree}};
    if (!gated) out["oracle"] = "skipped: cover exceeds --oracle-max-vertices";
    std::cout << out.dump(2) << '\n';
  } else if (cfg.format == "csv" || cfg.format == "tsv") {
    print_delimited(std::cout, {"route", "tau", "residual", "bits", "agree"}, rows, cfg.format == "csv" ? ',' : '\t');
  } else {
    std::cout << exact.tau.get_str() << '\n';
    for (const auto& r : rows) {
      std::cout << "  " << r[0] << ' ' << (r[1].empty() ? "-" : r[1]);
      if (!r[2].empty()) std::cout << " residual=" << r[2] << " bits=" << r[3];
      std::cout << ' ' << (r[4] == "true" ? "agree" : r[4] == "skipped" ? "skipped" : "MISMATCH") << '\n';
    }
    std::cout << "agreement: " << (agree ? "yes" : "no") << '\n';
  }
  if (!agree) throw InternalError("routes disagree on tau(" + std::to_string(cfg.n) + ")");
  return 0;
}

// ---- table

int cmd_table(const Config& cfg) {
  const FoliationSpec spec = load_spec(cfg);
  if (cfg.from < 3 || cfg.to < cfg.from) throw InvalidSpec("range must satisfy 3 <= from <= to");

  const std::vector<std::string> header{"n", "tau", "parity", "p", "a", "connected"};
  std::vector<std::vector<std::string>> rows;
  json out = json::array();
  for (long n = cfg.from; n <= cfg.to; ++n) {
    const bool connected = is_cover_connected(spec, n);
    const std::string parity = n % 2 == 0 ? "even" : "odd";
    std::string tau, p, a;
    if (connected && jumps_nonzero_mod(spec, n)) {
      const TauDecomposition d = decompose_tau(spec, n);
      tau = d.tau.get_str();
      p = d.p.get_str();
      a = d.a.get_str();
    } else if (oracle_allowed(spec, n, cfg)) {
      try {
        tau = tau_by_oracle(spec, n).tau.get_str();
      } catch (const DegenerateJump&) {
      }
    }
    rows.push_back({std::to_string(n), tau, parity, p, a, connected ? "true" : "false"});
    json o{{"n", n}, {"parity", parity}, {"connected", connected}};
    o["tau"] = tau.empty() ? json(nullptr) : json(tau);
    o["p"] = p.empty() ? json(nullptr) : json(p);
    o["a"] = a.empty() ? json(nullptr) : json(a);
    out.push_back(o);
  }
  if (cfg.format == "json")
    std::cout << out.dump(2) << '\n';
  else
    print_delimited(std::cout, header, rows, cfg.format == "tsv" ? '\t' : ',');
  return 0;
}

// ---- qpoly

int cmd_qpoly(const Config& cfg) {
  const FoliationSpec spec = load_spec(cfg);
  const Lemma1Report lemma = check_lemma1(spec);
  const IntLaurent P = build_P(spec);
  const IntPolynomial g = shifted_g(lemma.Q);
  const BigInt qm1 = q_minus_one(spec);
  std::optional<BigInt> p;
  if (qm1 > 0) p = square_free_part(qm1).p;

  if (cfg.format == "json") {
    json out{{"Q", poly_json(lemma.Q)},
             {"P", laurent_json(P)},
             {"g", poly_json(g)},
             {"q", lemma.q.get_str()},
             {"tau_H", lemma.tau_H.get_str()},
             {"Q_at_minus_1", qm1.get_str()},
             {"p", p ? json(p->get_str()) : json(nullptr)},
             {"checks",
              {{"Q_at_1", lemma.Q_at_1.get_str()},
               {"dQ_at_1", lemma.dQ_at_1.get_str()},
               {"expected_dQ_at_1", lemma.expected_dQ_at_1.get_str()},
               {"degree", lemma.degree},
               {"expected_degree", lemma.expected_degree},
               {"lead", lemma.lead.get_str()},
               {"expected_lead", lemma.expected_lead.get_str()},
               {"ok", lemma.ok()}}}};
    out["g"]["text"] = g.str("zeta");
    std::cout << out.dump(2) << '\n';
  } else {
    auto yes = [](bool b) { return b ? "ok" : "FAIL"; };
    std::cout << "Q(w) = " << lemma.Q.str("w") << '\n'
              << "P(z) = " << P.str("z") << '\n'
              << "g(zeta) = " << g.str("zeta") << '\n'
              << "q = " << lemma.q.get_str() << '\n'
              << "tau(H) = " << lemma.tau_H.get_str() << '\n'
              << "Q(-1) = " << qm1.get_str() << '\n'
              << "p = " << (p ? p->get_str() : "undefined (Q(-1) = 0)") << '\n'
              << "check Q(1) = 0: " << yes(lemma.root_at_one()) << '\n'
              << "check Q'(1) = " << lemma.dQ_at_1.get_str() << " (expected " << lemma.expected_dQ_at_1.get_str()
              << "): " << yes(lemma.derivative_ok()) << '\n'
              << "check deg Q = " << lemma.degree << " (expected " << lemma.expected_degree
              << "): " << yes(lemma.degree_ok()) << '\n'
              << "check lead = " << lemma.lead.get_str() << " (expected " << lemma.expected_lead.get_str()
              << "): " << yes(lemma.lead_ok()) << '\n';
  }
  if (!lemma.ok()) throw InternalError("identities on Q failed");
  return 0;
}

// ---- asymptotics

int cmd_asymptotics(const Config& cfg) {
  const FoliationSpec spec = load_spec(cfg);
  const AsymptoticReport rep = check_asymptotics(spec, cfg.samples, cfg.precision);
  json samples = json::array();
  for (const auto& s : rep.samples)
    samples.push_back({{"n", s.n},
                       {"tau", s.tau.get_str()},
                       {"ratio", s.ratio.str(cfg.digits)},
                       {"ratio_with_tau_H", s.ratio_with_tau_H.str(cfg.digits)},
                       {"discrepancy", s.discrepancy.str(6)}});
  json out{{"A", rep.A_roots.str(cfg.digits)},
           {"A_integral", rep.A_integral.str(cfg.digits)},
           {"q", rep.q.get_si()},
           {"tau_H", rep.tau_H.get_str()},
           {"samples", samples},
           {"discrepancy_decreasing", rep.discrepancy_decreasing()}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

void add_source(CLI::App* sub, Config& cfg) {
  auto* fam = sub->add_option("--family", cfg.family, "built-in family, e.g. gp:2, torus:4, circulant:1,2");
  auto* spc = sub->add_option("--spec", cfg.spec_path, "JSON spec file")->check(CLI::ExistingFile);
  fam->excludes(spc);
  spc->excludes(fam);
  sub->add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64, 65536));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning-tree counts of circulant foliations"};
  app.require_subcommand(1);
  Config cfg;

  auto* count = app.add_subcommand("count", "tau(n) for a single n");
  add_source(count, cfg);
  count->add_option("--n", cfg.n, "number of layers")->required();
  count->add_flag("--verify", cfg.verify, "cross-check against the spectral routes and the matrix-tree oracle");
  count->add_flag("--oracle", cfg.oracle, "count by the matrix-tree oracle only (works outside the closed formulas)");
  count->add_option("--oracle-max-vertices", cfg.oracle_max_vertices, "largest cover checked by --verify");
  count->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "csv", "tsv"}));

  auto* table = app.add_subcommand("table", "tau(n) = p n tau(H) a^2 over a range of n");
  add_source(table, cfg);
  table->add_option("--from", cfg.from)->required();
  table->add_option("--to", cfg.to)->required();
  table->add_option("--oracle-max-vertices", cfg.oracle_max_vertices, "largest cover counted for skipped rows");
  table->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "tsv"}));

  auto* qpoly = app.add_subcommand("qpoly", "Q(w), P(z), g(zeta) and the identities on Q");
  add_source(qpoly, cfg);
  qpoly->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

  auto* asym = app.add_subcommand("asymptotics", "growth constant A and tau(n) q / (n A^n)");
  add_source(asym, cfg);
  asym->add_option("--samples", cfg.samples, "values of n")->delimiter(',');
  asym->add_option("--digits", cfg.digits, "significant digits printed")->check(CLI::Range(6, 200));
  asym->add_option("--format", cfg.format)->check(CLI::IsMember({"json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error[2:spec] " << e.what() << '\n';
    return 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    if (cfg.family.empty() && cfg.spec_path.empty()) throw InvalidSpec("one of --family or --spec is required");
    if (sub == count) return cmd_count(cfg);
    if (sub == table) return cmd_table(cfg);
    if (sub == qpoly) return cmd_qpoly(cfg);
    return cmd_asymptotics(cfg);
  } catch (const Error& e) {
    std::cout.flush();
    std::cerr << "error[" << static_cast<int>(e.code()) << ':' << error_code_name(e.code()) << "] " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error[5:internal] " << e.what() << '\n';
    return 5;
  }
}
