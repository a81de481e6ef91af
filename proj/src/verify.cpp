#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "rainbowdom/certify.hpp"
#include "rainbowdom/constructions.hpp"

namespace rainbowdom {

namespace {

struct TaskInput {
  std::string g_name;
  Graph g;
  const NamedGraph* h = nullptr;
};

struct TaskOutput {
  std::map<std::string, int> checks;
  std::string case_tag;
  std::vector<std::string> violations;
  std::optional<std::string> skipped;
  std::optional<ConjectureRow> conjecture;
  bool budget_exceeded = false;
  double seconds = 0;
};

class Task {
 public:
  Task(const TaskInput& in, const VerifyOptions& options, TaskOutput& out)
      : in_(in), g_(in.g), h_(in.h->graph), so_(options.solver), options_(options), out_(out) {}

  void run() {
    const ProductGraph p = lexicographic(g_, h_);
    const RainbowResult exact = min_rainbow(p.graph, 2, so_);
    const int rd = exact.value;
    expect("exact_witness", is_k_rainbow_dominating(p.graph, exact.witness).valid &&
                                exact.witness.weight() == rd,
           "exact solver witness does not validate");

    if (2 * p.graph.order() <= kSolverCapacity) {
      const int via = min_rainbow_via_cartesian(p.graph, 2, so_).value;
      expect("prop1", via == rd, "cartesian route gives " + std::to_string(via) + ", direct " + std::to_string(rd));
    }

    const Interval b = general_bounds(p.graph, 2, so_);
    expect("general_bounds", b.contains(rd),
           "gamma_r2 " + std::to_string(rd) + " outside [" + std::to_string(b.lo) + "," + std::to_string(b.hi) + "]");

    const bool nontrivial = g_.order() >= 2 && h_.order() >= 2 && is_connected(g_) && is_connected(h_);
    if (nontrivial) check_nontrivial(p, rd);

    const Certificate c = certify_rd_lex(g_, h_, CertifyOptions{so_, 0, false});
    out_.case_tag = to_string(c.tag);
    expect("certificate_witness",
           is_k_rainbow_dominating(p.graph, c.upper).valid && c.upper.weight() == c.hi && c.lo <= c.hi,
           "certificate upper witness invalid");
    bool hyps = true;
    for (const auto& hyp : c.hypotheses) hyps = hyps && hyp.holds;
    expect("certificate_hypotheses", hyps, "certificate cites a failed hypothesis");
    if (c.exact())
      expect("case_exact", c.lo == rd,
             std::string(to_string(c.tag)) + " claims " + std::to_string(c.lo) + ", exact " + std::to_string(rd));
    else
      expect("case_interval", c.lo <= rd && rd <= c.hi,
             "exact " + std::to_string(rd) + " outside [" + std::to_string(c.lo) + "," + std::to_string(c.hi) + "]");

    if (nontrivial && p.graph.order() <= options_.lemma_cap) check_lemmas(p);

    if (is_path(g_) && g_.order() >= 2 && h_.order() >= 2 && is_connected(h_) &&
        c.tag == CaseTag::RdH3Pair) {
      ConjectureRow row{in_.g_name, in_.h->name, g_.order(), path_upper_bound(g_.order()), rd};
      out_.checks["conjecture"]++;
      out_.conjecture = row;
    }
  }

 private:
  void expect(const std::string& check, bool ok, const std::string& detail) {
    out_.checks[check]++;
    if (!ok) out_.violations.push_back(check + " G=" + in_.g_name + " H=" + in_.h->name + ": " + detail);
  }

  void check_nontrivial(const ProductGraph& p, int rd) {
    const SetResult ds = min_dominating_set(g_, so_);
    const SetResult tds = min_total_dominating_set(g_, so_);
    expect("lower_2gamma", rd >= 2 * ds.value,
           std::to_string(rd) + " < 2 gamma(G) = " + std::to_string(2 * ds.value));
    expect("upper_2gammat", rd <= 2 * tds.value,
           std::to_string(rd) + " > 2 gamma_t(G) = " + std::to_string(2 * tds.value));

    const RainbowLabeling td = total_dom_labeling(g_, h_, 2, so_);
    expect("totaldom_labeling", is_k_rainbow_dominating(p.graph, td).valid && td.weight() == 2 * tds.value,
           "total-domination labeling invalid");

    const int rd_h = min_rainbow(h_, 2, so_).value;
    const CoupleResult cr = min_couple_cost(g_, 2, rd_h, so_);
    expect("couple_upper", rd <= cr.value,
           std::to_string(rd) + " > couple optimum " + std::to_string(cr.value));
    try {
      const RainbowLabeling cl = couple_labeling(g_, h_, 2, cr.couple, so_);
      expect("couple_labeling", is_k_rainbow_dominating(p.graph, cl).valid && cl.weight() == cr.value,
             "couple labeling invalid or weight != couple cost");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InvalidArgument) throw;
      // No minimum 2-RDF of H uses both colors; the couple bound does not apply.
      out_.checks["couple_labeling_na"]++;
    }

    bool universal = false;
    for (Vertex w = 0; w < h_.order(); ++w) universal = universal || h_.degree(w) == h_.order() - 1;
    if (universal) {
      const RainbowLabeling ul = universal_vertex_labeling(g_, h_, 2, so_);
      expect("universal_upper", is_k_rainbow_dominating(p.graph, ul).valid && ul.weight() == 2 * ds.value &&
                                    rd <= 2 * ds.value,
             "universal-vertex labeling invalid");
    }
  }

  void check_lemmas(const ProductGraph& p) {
    const Enumeration all = enumerate_min_2rdfs(p.graph, options_.enumeration_cap, so_);
    if (!all.complete) {
      out_.skipped = "lemma enumeration truncated for G=" + in_.g_name + " H=" + in_.h->name;
      return;
    }
    if (h_.order() >= 3) {
      bool ok = true;
      std::string bad;
      for (const auto& f : all.labelings) {
        const auto [one, two] = projection_property(g_, p.index, f);
        if (!(one && two)) {
          ok = false;
          bad = format_labeling(f);
          break;
        }
      }
      expect("lemma_projection_all", ok, "minimum 2-RDF without dominating projections:\n" + bad);
    } else if (are_isomorphic(h_, gen_complete(2))) {
      bool found = false;
      for (const auto& f : all.labelings) {
        const auto [one, two] = projection_property(g_, p.index, f);
        if (one && two) {
          found = true;
          break;
        }
      }
      expect("lemma_projection_exists", found, "no minimum 2-RDF with dominating projections");
    }
  }

  const TaskInput& in_;
  const Graph& g_;
  const Graph& h_;
  SolverOptions so_;
  const VerifyOptions& options_;
  TaskOutput& out_;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

VerifyReport verify_corpus(int ng_max, const std::vector<NamedGraph>& hs, int product_cap,
                           const VerifyOptions& options) {
  if (ng_max < 1 || ng_max > 7) throw Error(ErrorCode::InvalidArgument, "ng_max must be in 1..7");
  if (options.workers < 1) throw Error(ErrorCode::InvalidArgument, "workers must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  std::vector<TaskInput> inputs;
  for (int n = 1; n <= ng_max; ++n)
    for (Graph& g : enumerate_connected_graphs(n))
      for (const NamedGraph& h : hs)
        if (n * h.graph.order() <= product_cap) inputs.push_back({to_graph6(g), g, &h});

  std::vector<TaskOutput> outputs(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      const auto t0 = std::chrono::steady_clock::now();
      try {
        Task(inputs[i], options, outputs[i]).run();
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) {
          outputs[i].violations.push_back("error G=" + inputs[i].g_name + " H=" + inputs[i].h->name + ": " +
                                          e.what());
        } else {
          outputs[i].budget_exceeded = true;
          outputs[i].skipped = "budget exceeded for G=" + inputs[i].g_name + " H=" + inputs[i].h->name;
        }
      }
      outputs[i].seconds = seconds_since(t0);
    }
  };
  const int n_threads = std::min<int>(options.workers, static_cast<int>(std::max<std::size_t>(inputs.size(), 1)));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerifyReport report;
  report.tasks = static_cast<int>(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    TaskOutput& out = outputs[i];
    for (const auto& [name, count] : out.checks) report.checks[name] += count;
    if (!out.case_tag.empty()) report.cases[out.case_tag]++;
    for (auto& v : out.violations) report.violations.push_back(std::move(v));
    if (out.skipped) report.skipped.push_back(*out.skipped);
    if (out.conjecture) report.conjecture.push_back(*out.conjecture);
    report.budget_exceeded = report.budget_exceeded || out.budget_exceeded;
    report.timings.push_back({inputs[i].g_name, inputs[i].h->name, out.seconds});
  }
  report.seconds = seconds_since(start);
  return report;
}

std::string format_report(const VerifyReport& report) {
  std::ostringstream out;
  out << "tasks " << report.tasks << '\n';
  for (const auto& [name, count] : report.checks) out << "check " << name << ' ' << count << '\n';
  for (const auto& [tag, count] : report.cases) out << "case " << tag << ' ' << count << '\n';
  for (const auto& row : report.conjecture)
    out << "conjecture G=" << row.g << " H=" << row.h << " n=" << row.n << " bound=" << row.bound
        << " exact=" << row.exact << (row.bound == row.exact ? " agree" : " DIFFER") << '\n';
  for (const auto& s : report.skipped) out << "skipped " << s << '\n';
  for (const auto& v : report.violations) out << "violation " << v << '\n';
  out << report.violations.size() << " violations\n";
  return out.str();
}

std::string report_json(const VerifyReport& report) {
  nlohmann::json j;
  j["tasks"] = report.tasks;
  j["checks"] = report.checks;
  j["cases"] = report.cases;
  j["violations"] = report.violations;
  j["skipped"] = report.skipped;
  j["budget_exceeded"] = report.budget_exceeded;
  j["seconds"] = report.seconds;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.conjecture)
    rows.push_back({{"g", r.g}, {"h", r.h}, {"n", r.n}, {"bound", r.bound}, {"exact", r.exact}});
  j["conjecture"] = rows;
  nlohmann::json timings = nlohmann::json::array();
  for (const auto& t : report.timings) timings.push_back({{"g", t.g}, {"h", t.h}, {"seconds", t.seconds}});
  j["timings"] = timings;
  return j.dump(2);
}

}  // namespace rainbowdom
