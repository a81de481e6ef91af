// rainbow: command-line front end for the rainbowdom library.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rainbowdom/certify.hpp"
#include "rainbowdom/constructions.hpp"
#include "rainbowdom/graph_spec.hpp"

namespace rd = rainbowdom;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitBudget = 4;
constexpr int kExitPrecondition = 5;

int exit_code(rd::ErrorCode code) {
  switch (code) {
    case rd::ErrorCode::MalformedGraph6:
    case rd::ErrorCode::MalformedInput:
    case rd::ErrorCode::IndexOutOfRange:
    case rd::ErrorCode::LoopEdge:
      return kExitParse;
    case rd::ErrorCode::CapacityExceeded:
    case rd::ErrorCode::TooLarge:
      return kExitCapacity;
    case rd::ErrorCode::BudgetExceeded:
      return kExitBudget;
    default:
      return kExitPrecondition;
  }
}

// Raised when a computed value fails its own witness check.
struct SelfCheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw SelfCheckFailure("self-check failed: " + what);
}

struct Common {
  std::string format = "auto";
  std::uint64_t budget = rd::SolverOptions{}.node_budget;

  rd::Graph load(const std::string& spec) const { return rd::load_graph(spec, rd::parse_graph_format(format)); }
  rd::SolverOptions solver() const { return rd::SolverOptions{budget}; }
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Graph file format: auto, g6 or edges")
      ->check(CLI::IsMember({"auto", "g6", "graph6", "edges"}));
  cmd->add_option("--budget", c.budget, "Branch-node budget for exact solvers")->check(CLI::PositiveNumber);
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rd::Error(rd::ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text;
}

std::string labeling_file(const rd::RainbowLabeling& f, const std::string& header) {
  std::ostringstream out;
  out << "# " << header << "\n# k " << f.k() << " weight " << f.weight() << '\n' << rd::format_labeling(f);
  return out.str();
}

void check_labeling(const rd::Graph& g, const rd::RainbowLabeling& f, int weight) {
  require(rd::is_k_rainbow_dominating(g, f).valid, "labeling does not rainbow-dominate");
  require(f.weight() == weight, "labeling weight differs from the reported value");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-rainbow domination on graphs and lexicographic products"};
  app.require_subcommand(1);
  // "--h" names the second factor, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  Common common;

  // invariant
  auto* inv = app.add_subcommand("invariant", "gamma, gamma_t or gamma_rk of a graph with a witness");
  std::string inv_graph;
  std::string inv_type = "rdk";
  int inv_k = 2;
  inv->add_option("graph", inv_graph, "Graph name or file")->required();
  inv->add_option("--type", inv_type)->check(CLI::IsMember({"gamma", "gammat", "rdk"}));
  inv->add_option("--k", inv_k)->check(CLI::Range(1, 8));
  add_common(inv, common);

  // product
  auto* prod = app.add_subcommand("product", "Lexicographic or Cartesian product as graph6");
  std::string prod_g, prod_h, prod_kind = "lex";
  prod->add_option("G", prod_g, "First factor")->required();
  prod->add_option("H", prod_h, "Second factor")->required();
  prod->add_option("--kind", prod_kind)->check(CLI::IsMember({"lex", "cart"}));
  add_common(prod, common);

  // certify
  auto* cert = app.add_subcommand("certify", "Certificate for gamma_r2(G∘H)");
  std::string cert_g, cert_h, cert_out;
  std::uint64_t exact_budget = 0;
  bool strict = false;
  cert->add_option("G", cert_g)->required();
  cert->add_option("H", cert_h)->required();
  cert->add_option("--exact-budget", exact_budget, "Refine intervals by exact solve within this node budget");
  cert->add_flag("--strict", strict, "Reject disconnected H instead of solving exactly");
  cert->add_option("--witness", cert_out, "Write the upper-bound labeling here");
  add_common(cert, common);

  // construct
  auto* cons = app.add_subcommand("construct", "Explicit labelings of lexicographic products");
  std::string cons_kind, cons_g, cons_h = "P4", cons_out;
  int cons_n = 0, cons_k = 2, cons_m = 1, cons_p2 = 0;
  cons->add_option("kind", cons_kind)->required()->check(CLI::IsMember({"tiles", "couple", "totaldom", "glued"}));
  cons->add_option("--n", cons_n, "Path order for tiles");
  cons->add_option("--g", cons_g, "G for couple and totaldom");
  cons->add_option("--h", cons_h, "H");
  cons->add_option("--k", cons_k)->check(CLI::Range(1, 8));
  cons->add_option("--m", cons_m, "Number of P_6 arms for glued");
  cons->add_option("--p2", cons_p2, "Number of pendant vertices for glued");
  cons->add_option("-o,--output", cons_out);
  add_common(cons, common);

  // validate
  auto* val = app.add_subcommand("validate", "Check a labeling file against a graph or product");
  std::string val_labeling, val_graph, val_lex, val_cart;
  int val_k = 2;
  val->add_option("--labeling", val_labeling)->required();
  val->add_option("--graph", val_graph)->required();
  auto* lex_opt = val->add_option("--lex", val_lex, "Validate on graph ∘ H");
  val->add_option("--cart", val_cart, "Validate on graph □ H")->excludes(lex_opt);
  val->add_option("--k", val_k)->check(CLI::Range(1, 8));
  add_common(val, common);

  // enumerate
  auto* en = app.add_subcommand("enumerate", "Connected graphs, or all minimum k-RDFs of a graph");
  std::string en_what, en_graph;
  int en_n = 4, en_k = 2;
  std::size_t en_cap = 100000;
  en->add_option("what", en_what)->required()->check(CLI::IsMember({"graphs", "rdfs"}));
  en->add_option("--n", en_n, "Order for graphs")->check(CLI::Range(1, 7));
  en->add_option("--graph", en_graph, "Graph for rdfs");
  en->add_option("--k", en_k)->check(CLI::Range(1, 8));
  en->add_option("--cap", en_cap);
  add_common(en, common);

  // verify
  auto* ver = app.add_subcommand("verify", "Check every result against exact solves on a corpus");
  int ver_ng = 4, ver_cap = 20, ver_workers = 1, ver_lemma = 14;
  std::vector<std::string> ver_h;
  std::string ver_json;
  ver->add_option("--ng", ver_ng, "Largest order of G")->check(CLI::Range(1, 7));
  ver->add_option("--h", ver_h, "H graphs (repeatable)")->required();
  ver->add_option("--cap", ver_cap, "Largest product order");
  ver->add_option("--workers", ver_workers)->check(CLI::Range(1, 256));
  ver->add_option("--lemma-cap", ver_lemma, "Largest product for minimum 2-RDF enumeration");
  ver->add_option("--json", ver_json, "Write the machine-readable summary here");
  add_common(ver, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    const rd::SolverOptions so = common.solver();

    if (*inv) {
      const rd::Graph g = common.load(inv_graph);
      if (inv_type == "gamma" || inv_type == "gammat") {
        const bool total = inv_type == "gammat";
        const rd::SetResult r = total ? rd::min_total_dominating_set(g, so) : rd::min_dominating_set(g, so);
        require(total ? rd::is_total_dominating_set(g, r.witness) : rd::is_dominating_set(g, r.witness),
                "witness does not dominate");
        require(static_cast<int>(r.witness.size()) == r.value, "witness size differs from the value");
        std::cout << (total ? "gamma_t " : "gamma ") << r.value << "\nwitness " << r.witness.to_string() << '\n';
      } else {
        const rd::RainbowResult r = rd::min_rainbow(g, inv_k, so);
        check_labeling(g, r.witness, r.value);
        std::cout << "gamma_r" << inv_k << ' ' << r.value << '\n' << rd::format_labeling(r.witness);
      }
      return 0;
    }

    if (*prod) {
      const rd::Graph g = common.load(prod_g);
      const rd::Graph h = common.load(prod_h);
      const rd::ProductGraph p = prod_kind == "lex" ? rd::lexicographic(g, h) : rd::cartesian(g, h);
      std::cout << rd::to_graph6(p.graph) << '\n';
      return 0;
    }

    if (*cert) {
      const rd::Graph g = common.load(cert_g);
      const rd::Graph h = common.load(cert_h);
      const rd::Certificate c = rd::certify_rd_lex(g, h, rd::CertifyOptions{so, exact_budget, strict});
      const rd::ProductGraph p = rd::lexicographic(g, h);
      check_labeling(p.graph, c.upper, c.hi);
      for (const auto& hyp : c.hypotheses) require(hyp.holds, "hypothesis '" + hyp.statement + "'");
      if (c.refined) check_labeling(p.graph, *c.refined_witness, *c.refined);
      std::cout << rd::format_certificate(c);
      if (!cert_out.empty()) write_out(cert_out, labeling_file(c.upper, "upper-bound witness for G∘H"));
      return 0;
    }

    if (*cons) {
      rd::Graph product;
      rd::RainbowLabeling f;
      std::string header;
      const rd::Graph h = common.load(cons_h);
      if (cons_kind == "tiles" || cons_kind == "glued") {
        const auto pair = rd::pair_witness(h, so);
        if (!pair || !pair->v || rd::min_rainbow(h, 2, so).value != 3)
          throw rd::Error(rd::ErrorCode::NoPairWitness, "H needs gamma_r2 = 3 with a {1,2} label");
        if (cons_kind == "tiles") {
          f = rd::path_pattern_labeling(cons_n, h, *pair);
          product = rd::lexicographic(rd::gen_path(cons_n), h).graph;
          header = "path tiles on P" + std::to_string(cons_n) + " ∘ H";
          check_labeling(product, f, rd::path_upper_bound(cons_n));
        } else {
          f = rd::glued_family_labeling(cons_m, cons_p2, h, *pair);
          product = rd::lexicographic(rd::gen_glued_paths(cons_m, cons_p2), h).graph;
          header = "glued family m=" + std::to_string(cons_m) + " p2=" + std::to_string(cons_p2);
          check_labeling(product, f, 4 * cons_m + 2);
        }
      } else {
        if (cons_g.empty()) throw rd::Error(rd::ErrorCode::InvalidArgument, "--g is required");
        const rd::Graph g = common.load(cons_g);
        product = rd::lexicographic(g, h).graph;
        if (cons_kind == "couple") {
          const int cost_b = rd::min_rainbow(h, cons_k, so).value;
          const rd::CoupleResult cr = rd::min_couple_cost(g, cons_k, cost_b, so);
          f = rd::couple_labeling(g, h, cons_k, cr.couple, so);
          header = "couple A=" + cr.couple.a.to_string() + " B=" + cr.couple.b.to_string();
          check_labeling(product, f, cr.value);
        } else {
          f = rd::total_dom_labeling(g, h, cons_k, so);
          header = "total domination";
          check_labeling(product, f, cons_k * rd::min_total_dominating_set(g, so).value);
        }
      }
      write_out(cons_out, labeling_file(f, header));
      return 0;
    }

    if (*val) {
      rd::Graph g = common.load(val_graph);
      std::optional<rd::ProductIndex> index;
      if (!val_lex.empty() || !val_cart.empty()) {
        const rd::Graph h = common.load(val_lex.empty() ? val_cart : val_lex);
        rd::ProductGraph p = val_lex.empty() ? rd::cartesian(g, h) : rd::lexicographic(g, h);
        g = std::move(p.graph);
        index = p.index;
      }
      std::ifstream in(val_labeling, std::ios::binary);
      if (!in) throw rd::Error(rd::ErrorCode::MalformedInput, "cannot read '" + val_labeling + "'");
      std::stringstream text;
      text << in.rdbuf();
      const rd::RainbowLabeling f = rd::parse_labeling(text.str(), val_k);
      if (f.order() != g.order())
        throw rd::Error(rd::ErrorCode::MalformedInput, "labeling has " + std::to_string(f.order()) +
                                                           " vertices, graph has " + std::to_string(g.order()));
      const rd::RdfCheck check = rd::is_k_rainbow_dominating(g, f);
      if (check.valid) {
        std::cout << "ok weight " << f.weight() << '\n';
        return 0;
      }
      std::cout << "violator " << *check.violator;
      if (index) {
        const auto [gv, hv] = index->decode(*check.violator);
        std::cout << " (" << gv << ',' << hv << ')';
      }
      std::cout << '\n';
      return kExitViolation;
    }

    if (*en) {
      if (en_what == "graphs") {
        for (const rd::Graph& g : rd::enumerate_connected_graphs(en_n)) std::cout << rd::to_graph6(g) << '\n';
        return 0;
      }
      if (en_graph.empty()) throw rd::Error(rd::ErrorCode::InvalidArgument, "--graph is required");
      const rd::Graph g = common.load(en_graph);
      const rd::Enumeration all = rd::enumerate_min_rdfs(g, en_k, en_cap, so);
      for (const auto& f : all.labelings) check_labeling(g, f, all.weight);
      std::cout << "weight " << all.weight << " count " << all.labelings.size()
                << (all.complete ? "" : " (truncated)") << '\n';
      for (std::size_t i = 0; i < all.labelings.size(); ++i)
        std::cout << "# labeling " << i << '\n' << rd::format_labeling(all.labelings[i]);
      return 0;
    }

    if (*ver) {
      std::vector<rd::NamedGraph> hs;
      for (const auto& spec : ver_h) hs.push_back({spec, common.load(spec)});
      rd::VerifyOptions vo;
      vo.solver = so;
      vo.workers = ver_workers;
      vo.lemma_cap = ver_lemma;
      const rd::VerifyReport report = rd::verify_corpus(ver_ng, hs, ver_cap, vo);
      std::cout << rd::format_report(report);
      if (!ver_json.empty()) write_out(ver_json, rd::report_json(report) + "\n");
      if (report.budget_exceeded) return kExitBudget;
      return report.violations.empty() ? 0 : kExitViolation;
    }
  } catch (const rd::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const SelfCheckFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitViolation;
  }
  return 0;
}
