// derivant: finite-permutation-group queries and relative-integrability
// decisions, plus the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 parse/usage error,
// 3 budget exhausted (Inconclusive), 4 G is not a subgroup of U.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "derivant/group_spec.hpp"
#include "derivant/integrability.hpp"
#include "derivant/report.hpp"
#include "derivant/verify.hpp"

using namespace derivant;

namespace {

std::string default_data_dir() {
  if (const char *env = std::getenv("DERIVANT_DATA_DIR"))
    return env;
#ifdef DERIVANT_DATA_DIR_DEFAULT
  return DERIVANT_DATA_DIR_DEFAULT;
#else
  return "data";
#endif
}

std::uint64_t env_budget(const char *name, std::uint64_t dflt) {
  if (const char *env = std::getenv(name))
    return std::stoull(env);
  return dflt;
}

Budgets budgets_from_env() {
  Budgets b;
  b.elements = env_budget("DERIVANT_BUDGET_ELEMENTS", b.elements);
  b.index = env_budget("DERIVANT_BUDGET_INDEX", b.index);
  b.scan = env_budget("DERIVANT_BUDGET_SCAN", b.scan);
  b.candidates = env_budget("DERIVANT_BUDGET_CANDIDATES", b.candidates);
  b.lattice = env_budget("DERIVANT_BUDGET_LATTICE", b.lattice);
  return b;
}

/// "sym:<n>" ambient specifier.
std::optional<PermGroup> parse_ambient(const std::string &arg) {
  if (arg.rfind("sym:", 0) != 0)
    return std::nullopt;
  unsigned long n = std::stoul(arg.substr(4));
  if (n < 1 || n > max_degree)
    throw group_error("ambient degree out of range");
  return symmetric(static_cast<unsigned>(n));
}

std::vector<std::string> group_strings(const std::vector<Perm> &gens) {
  std::vector<std::string> out;
  for (const Perm &g : gens)
    out.push_back(format_cycles(g));
  return out;
}

std::string joined_generators(const PermGroup &g) {
  std::string s;
  for (const Perm &p : canonical_generators(g)) {
    if (!s.empty())
      s += ";";
    s += format_cycles(p);
  }
  return s;
}

void emit(const Report &rep, bool json_like) {
  std::cout << rep.render(json_like);
}

int run_query(const std::string &file, const std::string &query, std::size_t k,
              const std::string &normalizer_ambient, const std::string &data_dir,
              const Budgets &budgets, bool json_like) {
  PermGroup g = load_group_file(file, data_dir);
  Report rep;
  Record r;
  r.set("kind", query);
  r.set("status", "ok");
  if (query == "order") {
    r.set("order", g.order_string());
    r.set("degree", g.degree());
  } else if (query == "derived") {
    PermGroup d = derived_subgroup(g);
    r.set("order", d.order_string());
    r.set("degree", d.degree());
    r.set_quoted("generators", joined_generators(d));
  } else if (query == "series") {
    DerivedSeries s = derived_series(g);
    std::vector<std::string> orders;
    for (const PermGroup &t : s.terms)
      orders.push_back(t.order_string());
    r.set_list("orders", orders);
    r.set("length", s.terms.size());
  } else if (query == "socle") {
    PermGroup s = socle(g, budgets.elements);
    r.set("order", s.order_string());
    r.set_quoted("generators", joined_generators(s));
    r.set("minimal_normal_count",
          minimal_normal_subgroups(g, budgets.elements).size());
  } else if (query == "homogeneity") {
    r.set("k", k);
    r.set("orbits", orbits_on_k_sets(g, k).size());
    r.set("homogeneous", is_k_homogeneous(g, k) ? "true" : "false");
    r.set("transitive", is_k_transitive(g, k) ? "true" : "false");
  } else if (query == "normalizer-in") {
    PermGroup u = [&] {
      if (auto amb = parse_ambient(normalizer_ambient))
        return *amb;
      return load_group_file(normalizer_ambient, data_dir);
    }();
    NormalizerResult n = normalizer_in(u, g, NormalizerStrategy::Auto, budgets.scan);
    r.set("order", n.group.order_string());
    r.set("provenance", to_string(n.provenance));
    r.set_quoted("generators", joined_generators(n.group));
  } else if (query == "elements") {
    std::vector<std::string> elems = group_strings(g.elements(budgets.elements));
    r.set("order", g.order_string());
    r.set_list("elements", elems);
  } else {
    throw group_error("unknown query: " + query);
  }
  rep.records.push_back(std::move(r));
  emit(rep, json_like);
  return 0;
}

int run_integrable(const std::string &g_file, const std::string &u_arg,
                   const std::string &data_dir, const Budgets &budgets,
                   bool no_reductions, bool witnesses, bool json_like) {
  PermGroup g = load_group_file(g_file, data_dir);
  PermGroup u = [&] {
    if (auto amb = parse_ambient(u_arg))
      return *amb;
    return load_group_file(u_arg, data_dir);
  }();
  if (g.degree() != u.degree() || !is_subgroup(g, u)) {
    Report rep;
    Record r;
    r.set("kind", "integrable");
    r.set("status", "error");
    r.set_quoted("detail", "G is not a subgroup of U");
    rep.records.push_back(std::move(r));
    emit(rep, json_like);
    return 4;
  }
  IntegrabilityOptions opt;
  opt.budgets = budgets;
  if (no_reductions)
    opt.use_metacyclic = opt.use_socle = opt.use_perfect_core = false;
  IntegrabilityVerdict v = integrable_within_verdict(g, u, opt);

  Report rep;
  Record r;
  r.set("kind", "integrable");
  r.set("status", to_string(v.status));
  r.set("order", g.order_string());
  r.set("witness_count", v.witnesses.size());
  r.set("trace", v.trace_string());
  r.set("provenance", v.provenance_string());
  if (v.status == Status::Inconclusive)
    r.set("budget", v.inconclusive_budget);
  if (v.status == Status::NotIntegrable)
    r.set("candidates", v.candidates_examined);
  rep.records.push_back(std::move(r));
  if (witnesses)
    for (const PermGroup &w : v.witnesses) {
      Record wr;
      wr.set("kind", "witness");
      wr.set("status", "ok");
      wr.set("order", w.order_string());
      wr.set_quoted("generators", joined_generators(w));
      rep.records.push_back(std::move(wr));
    }
  emit(rep, json_like);
  return v.status == Status::Inconclusive ? 3 : 0;
}

int run_verify(const std::string &suite, const std::string &data_dir,
               const Budgets &budgets, bool json_like) {
  VerifyConfig cfg;
  cfg.data_dir = data_dir;
  cfg.budgets = budgets;
  std::vector<Check> checks = run_suite(suite, cfg);
  Report rep = suite_report(suite, checks);
  emit(rep, json_like);
  for (const Check &c : checks)
    if (!c.pass)
      return 1;
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"derivant: permutation-group integrability engine"};
  app.require_subcommand(1);
  bool json_like = false;
  std::string data_dir = default_data_dir();
  app.add_flag("--json-like", json_like, "emit nested bracketed records");
  app.add_option("--data-dir", data_dir, "directory of shipped matrix data files");

  Budgets budgets = budgets_from_env();

  auto *query = app.add_subcommand("query", "structural queries on a group");
  std::string q_file;
  bool q_order = false, q_derived = false, q_series = false, q_socle = false,
       q_elements = false;
  std::size_t q_k = 0;
  std::string q_norm_in;
  query->add_option("file", q_file, "group spec file")->required();
  query->add_flag("--order", q_order, "group order");
  query->add_flag("--derived", q_derived, "derived subgroup");
  query->add_flag("--series", q_series, "derived series");
  query->add_flag("--socle", q_socle, "socle and minimal normal subgroups");
  query->add_option("--homogeneity", q_k, "k-homogeneity / k-transitivity");
  query->add_option("--normalizer-in", q_norm_in,
                    "normalizer inside this ambient (file or sym:<n>)");
  query->add_flag("--elements", q_elements, "list all elements");

  auto *integrable =
    app.add_subcommand("integrable", "decide integrability of G within U");
  std::string i_g, i_u, i_ambient;
  bool i_noreductions = false, i_witnesses = false;
  integrable->add_option("G", i_g, "subgroup spec file")->required();
  integrable->add_option("U", i_u, "ambient spec file (or use --ambient)");
  integrable->add_option("--ambient", i_ambient, "ambient symmetric group sym:<n>");
  integrable->add_flag("--no-reductions", i_noreductions,
                       "disable the reductions (metacyclic, socle, perfect-core)");
  integrable->add_flag("--witnesses", i_witnesses, "list all witnesses found");
  integrable->add_option("--budget-elements", budgets.elements,
                         "element-enumeration budget");
  integrable->add_option("--budget-index", budgets.index,
                         "quotient index budget");
  integrable->add_option("--budget-scan", budgets.scan, "exact-scan budget");

  auto *verify = app.add_subcommand("verify", "run a verification suite");
  std::string v_suite;
  verify->add_option("suite", v_suite, "d8|wreath|metacyclic|out-groups|"
                                       "remark45|case1|theorem-a|psl37|all")
    ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (query->parsed()) {
      std::string qname;
      if (q_order)
        qname = "order";
      else if (q_derived)
        qname = "derived";
      else if (q_series)
        qname = "series";
      else if (q_socle)
        qname = "socle";
      else if (q_k > 0)
        qname = "homogeneity";
      else if (!q_norm_in.empty())
        qname = "normalizer-in";
      else if (q_elements)
        qname = "elements";
      else {
        std::cerr << "query: choose one of --order --derived --series --socle "
                     "--homogeneity K --normalizer-in U --elements\n";
        return 2;
      }
      return run_query(q_file, qname, q_k, q_norm_in, data_dir, budgets, json_like);
    }
    if (integrable->parsed()) {
      std::string u_arg = !i_ambient.empty() ? i_ambient : i_u;
      if (u_arg.empty()) {
        std::cerr << "integrable: supply U as a file or --ambient sym:<n>\n";
        return 2;
      }
      return run_integrable(i_g, u_arg, data_dir, budgets, i_noreductions,
                            i_witnesses, json_like);
    }
    if (verify->parsed())
      return run_verify(v_suite, data_dir, budgets, json_like);
  } catch (const parse_error &e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const budget_error &e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return 3;
  } catch (const not_subgroup_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const group_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
