#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "conekit/tolerances.hpp"

namespace conekit {

/// Finite window of an orbit: nodes are points, a directed edge carries
/// one generator step together with its multiplier value. Identifications
/// glue nodes (quotient points), declared limits attach a compactification
/// node to the tail of a node sequence.
class OrbitGraph {
 public:
  struct Edge {
    int from;
    int to;
    std::string gen;
    double sigma;
  };
  struct Limit {
    std::vector<int> seq;
    int node;
  };

  int add_node(const std::string& label);
  void add_edge(const std::string& from, const std::string& to,
                const std::string& gen, double sigma);
  void add_identification(const std::string& u, const std::string& v);
  void add_limit(const std::vector<std::string>& seq, const std::string& node);

  int index_of(const std::string& label) const;  // -1 when absent
  const std::string& label(int index) const { return nodes_[static_cast<std::size_t>(index)]; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::pair<int, int>>& identifications() const { return idents_; }
  const std::vector<Limit>& limits() const { return limits_; }

 private:
  int require(const std::string& label) const;

  std::vector<std::string> nodes_;
  std::map<std::string, int> index_;
  std::vector<Edge> edges_;
  std::vector<std::pair<int, int>> idents_;
  std::vector<Limit> limits_;
};

nlohmann::json graph_to_json(const OrbitGraph& graph);
OrbitGraph graph_from_json(const nlohmann::json& j);

enum class Verdict { Trivial, NonTrivial, Inconclusive };
std::string to_string(Verdict v);

struct Certificate {
  std::string constraint;
  double ratio = 1.0;
};

struct TrivialityResult {
  Verdict verdict = Verdict::Inconclusive;
  std::map<std::string, double> witness;  // Trivial: node label -> f, f(base) = 1
  Certificate certificate;                // NonTrivial: violated constraint
  std::vector<std::string> notes;         // Inconclusive: failed Cauchy tails
};

/// Decide whether the edge weights are a coboundary f(to)/f(from) on the
/// glued graph. Propagates f from the base node (first inserted) along a
/// spanning set of links (edges first, then identifications, then limit
/// attachments, each re-closed over edges), then checks every remaining
/// constraint on log scale. Limit tails must pass a Cauchy test at the
/// given truncation; a failed tail makes the verdict Inconclusive instead
/// of Trivial. Throws on a disconnected graph, listing unreachable nodes.
TrivialityResult solve_coboundary(const OrbitGraph& graph,
                                  double tol = tol::coboundary,
                                  double cauchy_tol = tol::limit_cauchy);

/// Whether two edge-weight assignments on the same graph differ by a
/// coboundary, decided by solving for the ratio weights sigma2/sigma1.
TrivialityResult coset_equivalent(const OrbitGraph& graph,
                                  std::span<const double> sigma1,
                                  std::span<const double> sigma2,
                                  double tol = tol::coboundary,
                                  double cauchy_tol = tol::limit_cauchy);

/// Extreme accumulated multiplier products over all walks of at most
/// max_word_length steps, traversing edges forward (times sigma) or
/// backward (times 1/sigma). Returns (min, max).
std::pair<double, double> boundedness_scan(const OrbitGraph& graph,
                                           int max_word_length);

/// Multiplier values along the shift orbit: r(n) for every integer n,
/// together with the declared limit of prod_{n>=1} r(n).
struct RSequence {
  std::function<double(int)> value;
  double tail_product = 1.0;
};

/// r(n) = 2^(-2^(-n)) for n >= 1 and 1 otherwise; the tail product
/// telescopes to 2^(-(1 - 2^(-N))) and converges to 1/2 geometrically.
RSequence geometric_halving_r();

struct FixedEndpointChain {
  OrbitGraph separated;   // the two endpoint nodes stay distinct
  OrbitGraph identified;  // same data with the endpoints glued
};

/// Truncated shift orbit a_n -> a_(n+1), |n| <= N, compactified by two
/// fixed endpoints: "zero" receives the n -> +inf tail, "one" the
/// n -> -inf tail. Edge a_n -> a_(n+1) carries sigma = r(n+1); endpoint
/// self-loops carry sigma = 1. Rejects N < 2 and r sequences whose
/// partial product at N is farther than 1e-12 from the declared limit.
FixedEndpointChain build_fixed_endpoint_chain(
    int N, const RSequence& r = geometric_halving_r());

}  // namespace conekit
