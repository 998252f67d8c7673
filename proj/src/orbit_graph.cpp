#include "conekit/orbit_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <stdexcept>

#include "conekit/linalg.hpp"

namespace conekit {

int OrbitGraph::add_node(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("OrbitGraph: empty node label");
  if (index_.count(label))
    throw std::invalid_argument("OrbitGraph: duplicate node label " + label);
  const int idx = static_cast<int>(nodes_.size());
  nodes_.push_back(label);
  index_[label] = idx;
  return idx;
}

int OrbitGraph::require(const std::string& label) const {
  const int idx = index_of(label);
  if (idx < 0) throw std::invalid_argument("OrbitGraph: unknown node " + label);
  return idx;
}

int OrbitGraph::index_of(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

void OrbitGraph::add_edge(const std::string& from, const std::string& to,
                          const std::string& gen, double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::invalid_argument("OrbitGraph: edge sigma must be positive finite");
  edges_.push_back({require(from), require(to), gen, sigma});
}

void OrbitGraph::add_identification(const std::string& u, const std::string& v) {
  const int iu = require(u);
  const int iv = require(v);
  if (iu == iv)
    throw std::invalid_argument("OrbitGraph: identification of a node with itself");
  idents_.emplace_back(iu, iv);
}

void OrbitGraph::add_limit(const std::vector<std::string>& seq,
                           const std::string& node) {
  if (seq.size() < 2)
    throw std::invalid_argument(
        "OrbitGraph: limit sequence needs at least two nodes for the tail test");
  Limit lim;
  lim.seq.reserve(seq.size());
  for (const auto& s : seq) lim.seq.push_back(require(s));
  lim.node = require(node);
  limits_.push_back(std::move(lim));
}

nlohmann::json graph_to_json(const OrbitGraph& graph) {
  nlohmann::json j;
  j["nodes"] = graph.nodes();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : graph.edges())
    j["edges"].push_back({{"from", graph.label(e.from)},
                          {"to", graph.label(e.to)},
                          {"gen", e.gen},
                          {"sigma", e.sigma}});
  j["identify"] = nlohmann::json::array();
  for (const auto& [u, v] : graph.identifications())
    j["identify"].push_back({graph.label(u), graph.label(v)});
  j["limits"] = nlohmann::json::array();
  for (const auto& lim : graph.limits()) {
    nlohmann::json entry;
    entry["seq"] = nlohmann::json::array();
    for (int s : lim.seq) entry["seq"].push_back(graph.label(s));
    entry["limit"] = graph.label(lim.node);
    j["limits"].push_back(entry);
  }
  return j;
}

OrbitGraph graph_from_json(const nlohmann::json& j) {
  OrbitGraph graph;
  for (const auto& n : j.at("nodes")) graph.add_node(n.get<std::string>());
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      graph.add_edge(e.at("from").get<std::string>(),
                     e.at("to").get<std::string>(),
                     e.value("gen", std::string("g")),
                     e.at("sigma").get<double>());
  if (j.contains("identify"))
    for (const auto& p : j.at("identify"))
      graph.add_identification(p.at(0).get<std::string>(),
                               p.at(1).get<std::string>());
  if (j.contains("limits"))
    for (const auto& lim : j.at("limits")) {
      std::vector<std::string> seq;
      for (const auto& s : lim.at("seq")) seq.push_back(s.get<std::string>());
      graph.add_limit(seq, lim.at("limit").get<std::string>());
    }
  return graph;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::NonTrivial: return "nontrivial";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

TrivialityResult solve_coboundary(const OrbitGraph& graph, double tol,
                                  double cauchy_tol) {
  const int n = static_cast<int>(graph.nodes().size());
  if (n == 0) throw std::invalid_argument("solve_coboundary: empty graph");

  // log f per node; propagation works additively.
  std::vector<std::optional<double>> phi(static_cast<std::size_t>(n));

  std::vector<std::vector<std::pair<int, double>>> adj(
      static_cast<std::size_t>(n));  // (neighbor, log-step from this node)
  for (const auto& e : graph.edges()) {
    const double ls = std::log(e.sigma);
    adj[static_cast<std::size_t>(e.from)].emplace_back(e.to, ls);
    adj[static_cast<std::size_t>(e.to)].emplace_back(e.from, -ls);
  }

  std::deque<int> queue;
  auto assign = [&](int node, double value) {
    phi[static_cast<std::size_t>(node)] = value;
    queue.push_back(node);
  };
  auto close_edges = [&] {
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const auto& [v, ls] : adj[static_cast<std::size_t>(u)])
        if (!phi[static_cast<std::size_t>(v)])
          assign(v, *phi[static_cast<std::size_t>(u)] + ls);
    }
  };

  assign(0, 0.0);
  close_edges();
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [u, v] : graph.identifications()) {
      const bool au = phi[static_cast<std::size_t>(u)].has_value();
      const bool av = phi[static_cast<std::size_t>(v)].has_value();
      if (au == av) continue;
      if (au) assign(v, *phi[static_cast<std::size_t>(u)]);
      else assign(u, *phi[static_cast<std::size_t>(v)]);
      close_edges();
      progress = true;
      break;
    }
    if (progress) continue;
    for (const auto& lim : graph.limits()) {
      const int tail = lim.seq.back();
      const bool at = phi[static_cast<std::size_t>(tail)].has_value();
      const bool an = phi[static_cast<std::size_t>(lim.node)].has_value();
      if (at == an) continue;
      if (at) assign(lim.node, *phi[static_cast<std::size_t>(tail)]);
      else assign(tail, *phi[static_cast<std::size_t>(lim.node)]);
      close_edges();
      progress = true;
      break;
    }
  }

  std::vector<std::string> unreachable;
  for (int i = 0; i < n; ++i)
    if (!phi[static_cast<std::size_t>(i)]) unreachable.push_back(graph.label(i));
  if (!unreachable.empty()) {
    std::string msg = "solve_coboundary: graph not connected from base; unreachable:";
    for (const auto& s : unreachable) msg += " " + s;
    throw std::invalid_argument(msg);
  }

  auto val = [&](int i) { return *phi[static_cast<std::size_t>(i)]; };

  TrivialityResult result;
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const auto& e = graph.edges()[i];
    const double gap = val(e.from) + std::log(e.sigma) - val(e.to);
    if (std::abs(gap) > tol) {
      result.verdict = Verdict::NonTrivial;
      result.certificate = {"edge " + graph.label(e.from) + "->" +
                                graph.label(e.to) + " [" + e.gen + "]",
                            std::exp(gap)};
      return result;
    }
  }
  for (const auto& [u, v] : graph.identifications()) {
    const double gap = val(u) - val(v);
    if (std::abs(gap) > tol) {
      result.verdict = Verdict::NonTrivial;
      result.certificate = {
          "identify " + graph.label(u) + "~" + graph.label(v), std::exp(gap)};
      return result;
    }
  }
  for (const auto& lim : graph.limits()) {
    const int last = lim.seq.back();
    const int prev = lim.seq[lim.seq.size() - 2];
    const double tail_step = std::abs(val(last) - val(prev));
    if (tail_step > cauchy_tol) {
      result.notes.push_back("limit " + graph.label(lim.node) +
                             ": tail step " + format_double(tail_step) +
                             " exceeds the Cauchy tolerance");
      continue;
    }
    const double gap = val(lim.node) - val(last);
    if (std::abs(gap) > tol) {
      result.verdict = Verdict::NonTrivial;
      result.certificate = {"limit " + graph.label(lim.node), std::exp(gap)};
      return result;
    }
  }

  if (!result.notes.empty()) {
    result.verdict = Verdict::Inconclusive;
    return result;
  }
  result.verdict = Verdict::Trivial;
  for (int i = 0; i < n; ++i) result.witness[graph.label(i)] = std::exp(val(i));
  return result;
}

TrivialityResult coset_equivalent(const OrbitGraph& graph,
                                  std::span<const double> sigma1,
                                  std::span<const double> sigma2, double tol,
                                  double cauchy_tol) {
  if (sigma1.size() != graph.edges().size() ||
      sigma2.size() != graph.edges().size())
    throw std::invalid_argument(
        "coset_equivalent: weight arrays must match the edge count");
  OrbitGraph ratio;
  for (const auto& label : graph.nodes()) ratio.add_node(label);
  for (std::size_t i = 0; i < graph.edges().size(); ++i) {
    const auto& e = graph.edges()[i];
    if (!(sigma1[i] > 0.0) || !(sigma2[i] > 0.0))
      throw std::invalid_argument("coset_equivalent: weights must be positive");
    ratio.add_edge(graph.label(e.from), graph.label(e.to), e.gen,
                   sigma2[i] / sigma1[i]);
  }
  for (const auto& [u, v] : graph.identifications())
    ratio.add_identification(graph.label(u), graph.label(v));
  for (const auto& lim : graph.limits()) {
    std::vector<std::string> seq;
    for (int s : lim.seq) seq.push_back(graph.label(s));
    ratio.add_limit(seq, graph.label(lim.node));
  }
  return solve_coboundary(ratio, tol, cauchy_tol);
}

std::pair<double, double> boundedness_scan(const OrbitGraph& graph,
                                           int max_word_length) {
  if (max_word_length < 0)
    throw std::invalid_argument("boundedness_scan: negative length bound");
  const std::size_t n = graph.nodes().size();
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> cur_min(n, 0.0), cur_max(n, 0.0);
  double global_min = 0.0, global_max = 0.0;

  for (int step = 0; step < max_word_length; ++step) {
    std::vector<double> next_min(n, inf), next_max(n, -inf);
    for (const auto& e : graph.edges()) {
      const double ls = std::log(e.sigma);
      const auto u = static_cast<std::size_t>(e.from);
      const auto v = static_cast<std::size_t>(e.to);
      if (cur_min[u] != inf) {
        next_min[v] = std::min(next_min[v], cur_min[u] + ls);
        next_max[v] = std::max(next_max[v], cur_max[u] + ls);
      }
      if (cur_min[v] != inf) {
        next_min[u] = std::min(next_min[u], cur_min[v] - ls);
        next_max[u] = std::max(next_max[u], cur_max[v] - ls);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (next_min[i] == inf) continue;
      global_min = std::min(global_min, next_min[i]);
      global_max = std::max(global_max, next_max[i]);
    }
    cur_min = std::move(next_min);
    cur_max = std::move(next_max);
  }
  return {std::exp(global_min), std::exp(global_max)};
}

RSequence geometric_halving_r() {
  RSequence r;
  r.value = [](int n) {
    return n >= 1 ? std::exp2(-std::exp2(-static_cast<double>(n))) : 1.0;
  };
  r.tail_product = 0.5;
  return r;
}

namespace {

std::string chain_label(int n) { return "a_" + std::to_string(n); }

OrbitGraph make_chain(int N, const RSequence& r, bool glue_endpoints) {
  OrbitGraph g;
  g.add_node("zero");
  g.add_node("one");
  for (int n = -N; n <= N; ++n) g.add_node(chain_label(n));
  g.add_edge("zero", "zero", "T", 1.0);
  g.add_edge("one", "one", "T", 1.0);
  for (int n = -N; n < N; ++n) {
    const double rv = r.value(n + 1);
    if (!(rv > 0.0) || !std::isfinite(rv))
      throw std::invalid_argument("build_fixed_endpoint_chain: r must be positive finite");
    g.add_edge(chain_label(n), chain_label(n + 1), "T", rv);
  }
  std::vector<std::string> toward_zero, toward_one;
  for (int n = 1; n <= N; ++n) toward_zero.push_back(chain_label(n));
  for (int n = -1; n >= -N; --n) toward_one.push_back(chain_label(n));
  g.add_limit(toward_zero, "zero");
  g.add_limit(toward_one, "one");
  if (glue_endpoints) g.add_identification("zero", "one");
  return g;
}

}  // namespace

FixedEndpointChain build_fixed_endpoint_chain(int N, const RSequence& r) {
  if (N < 2)
    throw std::invalid_argument("build_fixed_endpoint_chain: N must be >= 2");
  double partial = 1.0;
  for (int n = 1; n <= N; ++n) partial *= r.value(n);
  if (std::abs(partial - r.tail_product) > 1e-12)
    throw std::invalid_argument(
        "build_fixed_endpoint_chain: partial product at N is " +
        format_double(partial) + ", not within 1e-12 of the declared limit " +
        format_double(r.tail_product) + "; increase N or fix the sequence");
  return {make_chain(N, r, false), make_chain(N, r, true)};
}

}  // namespace conekit
