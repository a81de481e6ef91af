#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbowdom/couples.hpp"
#include "rainbowdom/graph.hpp"
#include "rainbowdom/labeling.hpp"
#include "rainbowdom/products.hpp"
#include "rainbowdom/solvers.hpp"

namespace rainbowdom {

enum class CaseTag {
  TrivialH,
  TrivialG,
  GammaEqGammaT,
  RdH2,
  RdH4Plus,
  RdH3NoPair,
  RdH3Pair,
  ComponentSum,
  ComponentSumNA,
};

const char* to_string(CaseTag tag) noexcept;

struct Interval {
  int lo = 0;
  int hi = 0;
  bool contains(int x) const noexcept { return lo <= x && x <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// [min(|V|, gamma + k - 2), k * gamma] for k >= 2.
Interval general_bounds(const Graph& g, int k, const SolverOptions& options = {});

struct HClass {
  CaseTag tag = CaseTag::TrivialH;
  int gamma_r2 = 0;
  int gamma = 0;
  std::optional<PairWitness> pair;
};

/// Which regime H falls in. Throws Disconnected for disconnected H.
HClass classify_h(const Graph& h, const SolverOptions& options = {});

struct HypothesisCheck {
  std::string statement;
  bool holds = false;
};

/// The quantity that the lower bound rests on, with its witness.
struct LowerBoundWitness {
  std::string parameter;  // "gamma", "gamma_t", "couple", "gamma_r2", "sum"
  int value = 0;
  VertexSet set;
  std::optional<DominatingCouple> couple;
};

struct Certificate {
  int lo = 0;
  int hi = 0;
  CaseTag tag = CaseTag::ComponentSum;
  /// Labeling of G∘H with weight hi.
  RainbowLabeling upper;
  LowerBoundWitness lower;
  std::vector<HypothesisCheck> hypotheses;
  std::vector<std::string> citations;
  /// Exact value from an exact solve when the theorems leave an interval.
  std::optional<int> refined;
  std::optional<RainbowLabeling> refined_witness;
  /// Per-component certificates for ComponentSum.
  std::vector<Certificate> parts;

  bool exact() const noexcept { return lo == hi; }
  /// The exact value if known either way.
  std::optional<int> value() const;
};

struct CertifyOptions {
  SolverOptions solver;
  /// Node budget for refining intervals by exact solve; 0 disables it.
  std::uint64_t refine_budget = 0;
  /// Disconnected H: throw instead of falling back to an exact solve.
  bool strict = false;
};

/// gamma_r2(G∘H) by case analysis on H, per component of G.
Certificate certify_rd_lex(const Graph& g, const Graph& h, const CertifyOptions& options = {});

/// One summary line, e.g. "exact 7, case RdH3NoPair".
std::string certificate_summary(const Certificate& c);
std::string format_certificate(const Certificate& c);

/// Whether pi_G(V_1 ∪ V_12) and pi_G(V_2 ∪ V_12) dominate G.
std::pair<bool, bool> projection_property(const Graph& g, const ProductIndex& index,
                                          const RainbowLabeling& f);

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct VerifyOptions {
  SolverOptions solver;
  int workers = 1;
  /// Products up to this order get full minimum-2-RDF enumeration.
  int lemma_cap = 14;
  std::size_t enumeration_cap = 1'000'000;
};

struct ConjectureRow {
  std::string g;
  std::string h;
  int n = 0;
  int bound = 0;
  int exact = 0;
};

struct TaskTiming {
  std::string g;
  std::string h;
  double seconds = 0;
};

struct VerifyReport {
  int tasks = 0;
  std::map<std::string, int> checks;  // check name -> times run
  std::map<std::string, int> cases;   // case tag -> count
  std::vector<std::string> violations;
  std::vector<std::string> skipped;
  std::vector<ConjectureRow> conjecture;
  std::vector<TaskTiming> timings;
  bool budget_exceeded = false;
  double seconds = 0;
};

/// Checks every result against exact solves for all connected G with
/// |V(G)| <= ng_max and each H with |V(G)|*|V(H)| <= product_cap.
VerifyReport verify_corpus(int ng_max, const std::vector<NamedGraph>& hs, int product_cap,
                           const VerifyOptions& options = {});

std::string format_report(const VerifyReport& report);
std::string report_json(const VerifyReport& report);

}  // namespace rainbowdom
