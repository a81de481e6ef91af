#include "rainbowdom/certify.hpp"

#include <sstream>

#include "rainbowdom/constructions.hpp"

namespace rainbowdom {

const char* to_string(CaseTag tag) noexcept {
  switch (tag) {
    case CaseTag::TrivialH: return "TrivialH";
    case CaseTag::TrivialG: return "TrivialG";
    case CaseTag::GammaEqGammaT: return "GammaEqGammaT";
    case CaseTag::RdH2: return "RdH2";
    case CaseTag::RdH4Plus: return "RdH4Plus";
    case CaseTag::RdH3NoPair: return "RdH3NoPair";
    case CaseTag::RdH3Pair: return "RdH3Pair";
    case CaseTag::ComponentSum: return "ComponentSum";
    case CaseTag::ComponentSumNA: return "ComponentSum-NA";
  }
  return "?";
}

Interval general_bounds(const Graph& g, int k, const SolverOptions& options) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "general bounds need k >= 2");
  if (g.order() == 0) throw Error(ErrorCode::TooSmall, "empty graph");
  const int gamma = min_dominating_set(g, options).value;
  return {std::min(g.order(), gamma + k - 2), k * gamma};
}

HClass classify_h(const Graph& h, const SolverOptions& options) {
  if (h.order() == 0) throw Error(ErrorCode::HTooSmall, "H is empty");
  if (!is_connected(h)) throw Error(ErrorCode::Disconnected, "H must be connected");
  HClass out;
  out.gamma = min_dominating_set(h, options).value;
  out.gamma_r2 = min_rainbow(h, 2, options).value;
  if (h.order() == 1) {
    out.tag = CaseTag::TrivialH;
    return out;
  }
  if (out.gamma_r2 == 2) {
    out.tag = CaseTag::RdH2;
  } else if (out.gamma_r2 >= 4) {
    out.tag = CaseTag::RdH4Plus;
  } else {
    out.pair = pair_witness(h, options);
    out.tag = out.pair ? CaseTag::RdH3Pair : CaseTag::RdH3NoPair;
  }
  return out;
}

std::optional<int> Certificate::value() const {
  if (exact()) return lo;
  return refined;
}

namespace {

// Vertices of a path graph listed from one end to the other.
std::vector<Vertex> path_order(const Graph& g) {
  Vertex start = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= 1) {
      start = v;
      break;
    }
  std::vector<Vertex> order{start};
  Vertex prev = -1;
  Vertex cur = start;
  while (static_cast<int>(order.size()) < g.order()) {
    for (Vertex w : g.neighbors(cur))
      if (w != prev) {
        prev = cur;
        cur = w;
        break;
      }
    order.push_back(cur);
  }
  return order;
}

void check_upper(const Graph& g, const Graph& h, const Certificate& c) {
  const ProductGraph p = lexicographic(g, h);
  const RdfCheck check = is_k_rainbow_dominating(p.graph, c.upper);
  if (!check.valid || c.upper.weight() != c.hi)
    throw Error(ErrorCode::NotValidRdf, "upper-bound witness failed self-check");
}

void add(Certificate& c, std::string statement, bool holds) {
  c.hypotheses.push_back({std::move(statement), holds});
}

void maybe_refine(Certificate& c, const Graph& g, const Graph& h, const CertifyOptions& options) {
  if (c.exact() || options.refine_budget == 0) return;
  try {
    const ProductGraph p = lexicographic(g, h);
    RainbowResult exact = min_rainbow(p.graph, 2, SolverOptions{options.refine_budget});
    c.refined = exact.value;
    c.refined_witness = std::move(exact.witness);
    c.citations.push_back("refinement: exact branch-and-bound solve of G∘H");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::CapacityExceeded) throw;
    c.citations.push_back(std::string("refinement skipped: ") + to_string(e.code()));
  }
}

// g connected, h connected.
Certificate certify_connected(const Graph& g, const Graph& h, const HClass& hc,
                              const CertifyOptions& options) {
  const SolverOptions& so = options.solver;
  Certificate c;
  add(c, "G connected", is_connected(g));
  add(c, "H connected", is_connected(h));

  if (h.order() == 1) {
    RainbowResult r = min_rainbow(g, 2, so);
    c.tag = CaseTag::TrivialH;
    c.lo = c.hi = r.value;
    c.upper = std::move(r.witness);
    c.lower = {"gamma_r2", r.value, {}, std::nullopt};
    add(c, "|V(H)| = 1", true);
    c.citations.push_back("G∘K_1 is G: exact solve of gamma_r2(G)");
    check_upper(g, h, c);
    return c;
  }
  if (g.order() == 1) {
    RainbowResult r = min_rainbow(h, 2, so);
    c.tag = CaseTag::TrivialG;
    c.lo = c.hi = r.value;
    c.upper = std::move(r.witness);
    c.lower = {"gamma_r2", r.value, {}, std::nullopt};
    add(c, "|V(G)| = 1", true);
    c.citations.push_back("K_1∘H is H: exact solve of gamma_r2(H)");
    check_upper(g, h, c);
    return c;
  }

  add(c, "|V(G)| >= 2", g.order() >= 2);
  add(c, "|V(H)| >= 2", h.order() >= 2);
  const SetResult ds = min_dominating_set(g, so);
  const int two_gamma = 2 * ds.value;

  switch (hc.tag) {
    case CaseTag::RdH2: {
      c.tag = CaseTag::RdH2;
      add(c, "gamma_r2(H) = 2", min_rainbow(h, 2, so).value == 2);
      add(c, "D dominates G", is_dominating_set(g, ds.witness));
      c.lo = c.hi = two_gamma;
      c.lower = {"gamma", ds.value, ds.witness, std::nullopt};
      c.upper = couple_labeling(g, h, 2, DominatingCouple{{}, ds.witness}, so);
      c.citations.push_back("lower: gamma_r2(G∘H) >= 2 gamma(G) for nontrivial connected G, H");
      c.citations.push_back("upper: couple (∅, D) with a weight-2 2-RDF of H on each layer over D");
      break;
    }
    case CaseTag::RdH4Plus: {
      c.tag = CaseTag::RdH4Plus;
      const SetResult tds = min_total_dominating_set(g, so);
      add(c, "gamma_r2(H) >= 4", min_rainbow(h, 2, so).value >= 4);
      add(c, "T totally dominates G", is_total_dominating_set(g, tds.witness));
      c.lo = c.hi = 2 * tds.value;
      c.lower = {"gamma_t", tds.value, tds.witness, std::nullopt};
      c.upper = total_dom_labeling(g, h, 2, so);
      c.citations.push_back("gamma_r2(H) >= 4 gives gamma_r2(G∘H) = 2 gamma_t(G)");
      c.citations.push_back("upper: {1,2} on one vertex of each layer over a minimum TDS");
      break;
    }
    case CaseTag::RdH3NoPair: {
      c.tag = CaseTag::RdH3NoPair;
      const CoupleResult cr = min_couple_cost(g, 2, 3, so);
      add(c, "gamma_r2(H) = 3", min_rainbow(h, 2, so).value == 3);
      add(c, "no minimum 2-RDF of H uses {1,2}", !pair_witness(h, so).has_value());
      add(c, "(A,B) is a dominating couple of G", is_dominating_couple(g, cr.couple));
      c.lo = c.hi = cr.value;
      c.lower = {"couple", cr.value, {}, cr.couple};
      c.upper = couple_labeling(g, h, 2, cr.couple, so);
      c.citations.push_back("gamma_r2(H) = 3 without a {1,2} label gives min 2|A|+3|B| over dominating couples");
      break;
    }
    case CaseTag::RdH3Pair: {
      add(c, "gamma_r2(H) = 3", min_rainbow(h, 2, so).value == 3);
      add(c, "some minimum 2-RDF of H uses {1,2}", pair_witness(h, so).has_value());
      const SetResult tds = min_total_dominating_set(g, so);
      if (tds.value == ds.value) {
        c.tag = CaseTag::GammaEqGammaT;
        add(c, "gamma(G) = gamma_t(G)", true);
        add(c, "T totally dominates G", is_total_dominating_set(g, tds.witness));
        c.lo = c.hi = two_gamma;
        c.lower = {"gamma", ds.value, ds.witness, std::nullopt};
        c.upper = total_dom_labeling(g, h, 2, so);
        c.citations.push_back("lower: gamma_r2(G∘H) >= 2 gamma(G) for nontrivial connected G, H");
        c.citations.push_back("upper: gamma_r2(G∘H) <= 2 gamma_t(G) = 2 gamma(G)");
        break;
      }
      c.tag = CaseTag::RdH3Pair;
      add(c, "D dominates G", is_dominating_set(g, ds.witness));
      const CoupleResult cr = min_couple_cost(g, 2, 3, so);
      c.lo = two_gamma;
      c.hi = cr.value;
      c.lower = {"gamma", ds.value, ds.witness, std::nullopt};
      c.upper = couple_labeling(g, h, 2, cr.couple, so);
      c.citations.push_back("lower: gamma_r2(G∘H) >= 2 gamma(G) for nontrivial connected G, H");
      c.citations.push_back("upper: min 2|A|+3|B| over dominating couples");
      if (is_path(g) && hc.pair && path_upper_bound(g.order()) < c.hi) {
        const int n = g.order();
        const RainbowLabeling tiled = path_pattern_labeling(n, h, *hc.pair);
        const std::vector<Vertex> order = path_order(g);
        const ProductIndex index(n, h.order());
        RainbowLabeling f(2, index.order());
        for (int column = 0; column < n; ++column)
          for (Vertex x = 0; x < h.order(); ++x)
            f.set(index.encode(order[column], x), tiled[index.encode(column, x)]);
        c.hi = path_upper_bound(n);
        c.upper = std::move(f);
        c.citations.push_back("upper: path tiles on the pair-witness rows");
      }
      if (c.lo > c.hi) throw Error(ErrorCode::InvalidArgument, "lower bound exceeds upper bound");
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "unexpected H class");
  }
  check_upper(g, h, c);
  maybe_refine(c, g, h, options);
  return c;
}

}  // namespace

Certificate certify_rd_lex(const Graph& g, const Graph& h, const CertifyOptions& options) {
  if (g.order() == 0) throw Error(ErrorCode::TooSmall, "G is empty");
  if (h.order() == 0) throw Error(ErrorCode::HTooSmall, "H is empty");

  if (!is_connected(h)) {
    if (options.strict) throw Error(ErrorCode::Disconnected, "H must be connected");
    const ProductGraph p = lexicographic(g, h);
    RainbowResult r = min_rainbow(p.graph, 2, options.solver);
    Certificate c;
    c.tag = CaseTag::ComponentSumNA;
    c.lo = c.hi = r.value;
    c.upper = std::move(r.witness);
    c.lower = {"gamma_r2", r.value, {}, std::nullopt};
    add(c, "H connected", false);
    c.citations.push_back("H disconnected: no case theorem applies; exact solve of G∘H");
    check_upper(g, h, c);
    return c;
  }

  const HClass hc = classify_h(h, options.solver);
  const std::vector<VertexSet> comps = components(g);
  if (comps.size() == 1) return certify_connected(g, h, hc, options);

  const ProductIndex index(g.order(), h.order());
  Certificate sum;
  sum.tag = CaseTag::ComponentSum;
  sum.upper = RainbowLabeling(2, index.order());
  sum.lower.parameter = "sum";
  bool all_known = true;
  int known = 0;
  for (const VertexSet& comp : comps) {
    const Graph part = induced_subgraph(g, comp);
    Certificate c = certify_connected(part, h, hc, options);
    const ProductIndex local(part.order(), h.order());
    const auto& members = comp.members();
    for (int i = 0; i < part.order(); ++i)
      for (Vertex x = 0; x < h.order(); ++x)
        sum.upper.set(index.encode(members[i], x), c.upper[local.encode(i, x)]);
    sum.lo += c.lo;
    sum.hi += c.hi;
    if (const auto v = c.value()) known += *v;
    else all_known = false;
    sum.parts.push_back(std::move(c));
  }
  sum.lower.value = sum.lo;
  add(sum, "components certified separately", true);
  sum.citations.push_back("gamma_r2 of a disjoint union is the sum over components");
  if (!sum.exact() && all_known) sum.refined = known;
  check_upper(g, h, sum);
  return sum;
}

std::string certificate_summary(const Certificate& c) {
  std::ostringstream out;
  if (c.exact()) {
    out << "exact " << c.lo << ", case " << to_string(c.tag);
  } else {
    out << "interval [" << c.lo << "," << c.hi << "]";
    if (c.refined) out << "; refined exact " << *c.refined;
    out << "; case " << to_string(c.tag);
  }
  return out.str();
}

namespace {

void format_into(std::ostringstream& out, const Certificate& c, const std::string& indent) {
  out << indent << certificate_summary(c) << '\n';
  out << indent << "lower " << c.lower.parameter << " = " << c.lower.value;
  if (!c.lower.set.empty()) out << " witness " << c.lower.set.to_string();
  if (c.lower.couple) out << " A=" << c.lower.couple->a.to_string() << " B=" << c.lower.couple->b.to_string();
  out << '\n';
  out << indent << "upper labeling weight " << c.upper.weight() << '\n';
  for (const auto& h : c.hypotheses) out << indent << (h.holds ? "[ok] " : "[FAILED] ") << h.statement << '\n';
  for (const auto& s : c.citations) out << indent << "- " << s << '\n';
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    out << indent << "component " << i << ":\n";
    format_into(out, c.parts[i], indent + "  ");
  }
}

}  // namespace

std::string format_certificate(const Certificate& c) {
  std::ostringstream out;
  format_into(out, c, "");
  return out.str();
}

std::pair<bool, bool> projection_property(const Graph& g, const ProductIndex& index,
                                          const RainbowLabeling& f) {
  if (index.g_order() != g.order() || f.order() != index.order())
    throw Error(ErrorCode::InvalidArgument, "labeling does not match the product");
  VertexSet one;
  VertexSet two;
  for (Vertex v = 0; v < f.order(); ++v) {
    const Vertex gv = index.decode(v).first;
    if (f[v].contains(1)) one.insert(gv);
    if (f[v].contains(2)) two.insert(gv);
  }
  return {is_dominating_set(g, one), is_dominating_set(g, two)};
}

}  // namespace rainbowdom
