#include "prefixnet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <variant>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>
#include <openssl/evp.h>

#include "prefixnet/errors.hpp"
#include "prefixnet/fusion.hpp"
#include "prefixnet/gossip.hpp"
#include "prefixnet/graph.hpp"
#include "prefixnet/graph_entropy.hpp"
#include "prefixnet/hierarchy.hpp"
#include "prefixnet/io.hpp"
#include "prefixnet/multicast.hpp"
#include "prefixnet/pmf.hpp"
#include "prefixnet/source_coding.hpp"
#include "prefixnet/spanning_tree.hpp"

#ifndef PREFIXNET_VERSION
#define PREFIXNET_VERSION "0.0.0"
#endif

namespace prefixnet::cli {

namespace {

using json = nlohmann::ordered_json;

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 digest failed");
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

/// Text rendering of a scalar or array value.
std::string text(const json& v) {
  switch (v.type()) {
    case json::value_t::null:
      return "none";
    case json::value_t::boolean:
      return v.get<bool>() ? "true" : "false";
    case json::value_t::number_integer:
      return std::to_string(v.get<std::int64_t>());
    case json::value_t::number_unsigned:
      return std::to_string(v.get<std::uint64_t>());
    case json::value_t::number_float:
      return fmt::format("{:.6f}", v.get<double>());
    case json::value_t::string:
      return v.get<std::string>();
    case json::value_t::array: {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += text(v[i]);
      }
      return out;
    }
    default:
      return v.dump();
  }
}

/// Ordered list of fields and tables, rendered either as `key: value` lines
/// and space-separated rows, or as one JSON document.
class Report {
 public:
  void field(std::string key, json value) { items_.push_back(Field{std::move(key), std::move(value)}); }

  void table(std::string key, std::vector<std::string> columns, std::vector<std::vector<json>> rows) {
    items_.push_back(Table{std::move(key), std::move(columns), std::move(rows)});
  }

  json to_json() const {
    json out = json::object();
    for (const auto& item : items_) {
      if (const auto* f = std::get_if<Field>(&item)) {
        out[f->key] = f->value;
        continue;
      }
      const auto& t = std::get<Table>(item);
      json rows = json::array();
      for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row[c];
        rows.push_back(std::move(obj));
      }
      out[t.key] = std::move(rows);
    }
    return out;
  }

  void write_text(std::ostream& os) const {
    for (const auto& item : items_) {
      if (const auto* f = std::get_if<Field>(&item)) {
        os << f->key << ": " << text(f->value) << '\n';
        continue;
      }
      const auto& t = std::get<Table>(item);
      os << "# " << t.key << ":";
      for (const auto& c : t.columns) os << ' ' << c;
      os << '\n';
      for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? " " : "") << text(row[c]);
        os << '\n';
      }
    }
  }

 private:
  struct Field {
    std::string key;
    json value;
  };
  struct Table {
    std::string key;
    std::vector<std::string> columns;
    std::vector<std::vector<json>> rows;
  };
  std::vector<std::variant<Field, Table>> items_;
};

struct InputRecord {
  std::string path;
  std::string digest;
};

/// Per-invocation state: the manifest plus the report being built.
struct Context {
  std::vector<std::string> argv;
  std::string subcommand;
  std::vector<InputRecord> inputs;
  std::optional<std::uint64_t> seed;
  Report report;

  io::TextSource read(const std::string& path) {
    auto src = io::read_source(path);
    inputs.push_back({path, sha256_hex(src.content)});
    return src;
  }

  json manifest() const {
    json m = json::object();
    m["tool"] = "prefixnet";
    m["version"] = tool_version();
    m["subcommand"] = subcommand;
    m["argv"] = argv;
    json in = json::array();
    for (const auto& r : inputs) in.push_back(json{{"path", r.path}, {"sha256", r.digest}});
    m["inputs"] = std::move(in);
    m["seed"] = seed ? json(*seed) : json(nullptr);
    return m;
  }

  void write(std::ostream& os, bool as_json) const {
    if (as_json) {
      json doc = json::object();
      doc["manifest"] = manifest();
      doc["result"] = report.to_json();
      os << doc.dump(2) << '\n';
      return;
    }
    std::string joined;
    for (std::size_t i = 0; i < argv.size(); ++i) joined += (i ? " " : "") + argv[i];
    os << "# prefixnet " << tool_version() << '\n';
    os << "# subcommand: " << subcommand << '\n';
    os << "# argv: " << joined << '\n';
    for (const auto& r : inputs) os << "# input: " << r.path << " sha256:" << r.digest << '\n';
    os << "# seed: " << (seed ? std::to_string(*seed) : std::string("none")) << '\n';
    report.write_text(os);
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json interval_json(const std::optional<Interval>& iv) {
  if (!iv) return nullptr;
  return json::array({iv->lo, iv->hi});
}

std::vector<json> edge_strings(const Graph& g) {
  std::vector<json> out;
  for (const auto& e : g.edges()) out.emplace_back(g.id(e.u) + "-" + g.id(e.v));
  return out;
}

CodeLengthSet lengths_from(Context& ctx, const std::vector<int>& inline_lengths, const std::string& file, int D) {
  if (!inline_lengths.empty() && !file.empty()) throw UsageError("give either --lengths or --lengths-file, not both");
  if (inline_lengths.empty() && file.empty()) throw UsageError("one of --lengths or --lengths-file is required");
  CodeLengthSet set{file.empty() ? inline_lengths : io::parse_lengths(ctx.read(file)), D};
  set.validate();
  return set;
}

VertexId default_event_source(const LeveledNetwork& net) {
  const int deepest = net.max_level();
  for (std::size_t v = 0; v < net.level.size(); ++v)
    if (net.level[v] == deepest) return net.graph.id(v);
  return net.base_station;
}

// ---------------------------------------------------------------- handlers

struct KraftArgs {
  int D = 2;
  std::vector<int> lengths;
  std::string lengths_file;
  std::optional<int> larger;
  std::vector<int> progression;
};

void do_kraft(Context& ctx, const KraftArgs& a) {
  auto& r = ctx.report;
  if (!a.progression.empty()) {
    if (a.progression.size() != 3) throw UsageError("--progression takes n1,step,count");
    if (!a.lengths.empty() || !a.lengths_file.empty())
      throw UsageError("--progression cannot be combined with --lengths");
    const auto res = arithmetic_progression_satisfies_kraft(a.progression[0], a.progression[1], a.progression[2], a.D);
    r.field("D", a.D);
    r.field("n1", a.progression[0]);
    r.field("step", a.progression[1]);
    r.field("count", a.progression[2]);
    r.field("kraft_sum", res.sum);
    r.field("status", res.satisfied ? "SATISFIED" : "VIOLATED");
    return;
  }
  const auto set = lengths_from(ctx, a.lengths, a.lengths_file, a.D);
  const double sum = kraft_sum(set);
  r.field("D", a.D);
  r.field("lengths", set.lengths);
  r.field("kraft_sum", sum);
  r.field("status", satisfies_kraft(sum) ? "SATISFIED" : "VIOLATED");
  if (a.larger) {
    const bool holds = kraft_alphabet_monotonicity(set, *a.larger);
    r.field("larger_D", *a.larger);
    r.field("larger_kraft_sum", kraft_sum(CodeLengthSet{set.lengths, *a.larger}));
    r.field("larger_status", holds ? "SATISFIED" : "VIOLATED");
  }
}

void write_code(Report& r, const PrefixCode& code, const ProbabilityMassFunction* pmf) {
  std::vector<std::vector<json>> rows;
  for (const auto& c : code.assignments()) {
    std::vector<json> row{c.label, c.codeword.to_string(code.alphabet_size()), c.codeword.length()};
    if (pmf) row.emplace_back(*pmf->probability(c.label));
    rows.push_back(std::move(row));
  }
  std::vector<std::string> cols{"label", "codeword", "length"};
  if (pmf) cols.emplace_back("probability");
  r.table("codewords", std::move(cols), std::move(rows));
}

void do_huffman(Context& ctx, int D, const std::string& pmf_path) {
  const auto pmf = io::parse_pmf(ctx.read(pmf_path));
  const auto code = huffman_code(pmf, D);
  auto& r = ctx.report;
  r.field("D", D);
  write_code(r, code, &pmf);
  r.field("lengths", code.lengths().lengths);
  r.field("expected_length", expected_length(code, pmf));
  r.field("entropy", shannon_entropy(pmf, D));
  r.field("kraft_sum", kraft_sum(code.lengths()));
}

void do_code_from_lengths(Context& ctx, int D, const std::vector<int>& lengths, const std::string& file) {
  const auto set = lengths_from(ctx, lengths, file, D);
  const auto code = code_from_lengths(set);
  auto& r = ctx.report;
  r.field("D", D);
  write_code(r, code, nullptr);
  r.field("kraft_sum", kraft_sum(set));
}

void do_entropy(Context& ctx, const std::string& pmf_path, double base) {
  const auto pmf = io::parse_pmf(ctx.read(pmf_path));
  ctx.report.field("symbols", pmf.size());
  ctx.report.field("base", base);
  ctx.report.field("entropy", shannon_entropy(pmf, base));
}

struct GraphEntropyArgs {
  std::string graph;
  std::string coloring;
  std::optional<double> tsallis;
  bool directed = false;
};

void do_graph_entropy(Context& ctx, const GraphEntropyArgs& a) {
  auto& r = ctx.report;
  const auto src = ctx.read(a.graph);
  if (a.directed) {
    if (!a.coloring.empty() || a.tsallis) throw UsageError("--coloring and --tsallis apply to undirected graphs only");
    const auto g = io::parse_digraph(src);
    const auto pmfs = in_out_degree_pmfs(g);
    std::vector<std::vector<json>> rows;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      rows.push_back({g.vertices()[v], pmfs.in[v].p, pmfs.out[v].p});
    r.field("vertices", g.vertex_count());
    r.field("arcs", g.arcs().size());
    r.table("degree_pmf", {"vertex", "in_probability", "out_probability"}, std::move(rows));
    r.field("in_entropy", shannon_entropy(pmfs.in));
    r.field("out_entropy", shannon_entropy(pmfs.out));
    return;
  }
  const auto g = io::parse_graph(src);
  const auto pmf = degree_pmf(g);
  std::vector<std::vector<json>> rows;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) rows.push_back({g.id(v), g.degree(v), pmf[v].p});
  r.field("vertices", g.vertex_count());
  r.field("edges", g.edge_count());
  r.table("degree_pmf", {"vertex", "degree", "probability"}, std::move(rows));
  r.field("entropy", graph_entropy(g));
  r.field("max_entropy", std::log2(static_cast<double>(g.vertex_count())));
  const auto reg = is_regular(g);
  r.field("regular_degree", reg ? json(*reg) : json(nullptr));
  if (a.tsallis) {
    r.field("tsallis_q", *a.tsallis);
    r.field("tsallis_entropy", tsallis_graph_entropy(g, *a.tsallis));
  }
  if (!a.coloring.empty()) {
    const auto coloring = io::parse_coloring(ctx.read(a.coloring));
    r.field("conditional_entropy", conditional_graph_entropy(g, coloring));
    r.field("mutual_information", graph_mutual_information(g, coloring));
  }
}

void do_kl(Context& ctx, const std::string& g1_path, const std::string& g2_path, const std::string& map_path) {
  const auto g1 = io::parse_graph(ctx.read(g1_path));
  const auto g2 = io::parse_graph(ctx.read(g2_path));
  double d = 0.0;
  if (map_path.empty()) {
    d = graph_kl_divergence(g1, g2);
  } else {
    d = graph_kl_divergence(g1, g2, io::parse_correspondence(ctx.read(map_path)));
  }
  ctx.report.field("vertices", g1.vertex_count());
  ctx.report.field("kl_divergence", d);
}

void do_mst(Context& ctx, const std::string& graph_path, bool extrema) {
  const auto g = io::parse_weighted_graph(ctx.read(graph_path));
  const auto edges = minimum_spanning_tree_edges(g);
  auto& r = ctx.report;
  std::vector<std::vector<json>> rows;
  double total = 0.0;
  for (auto e : edges) {
    const auto& ed = g.graph().edges()[e];
    rows.push_back({g.graph().id(ed.u), g.graph().id(ed.v), g.weight(e)});
    total += g.weight(e);
  }
  r.field("vertices", g.graph().vertex_count());
  r.table("tree_edges", {"u", "v", "weight"}, std::move(rows));
  r.field("tree_weight", total);
  if (extrema) {
    const auto ex = mst_entropy_extrema(g);
    r.field("mst_count", ex.mst_count);
    r.field("min_entropy", ex.min);
    r.field("max_entropy", ex.max);
  }
}

void do_span_entropy(Context& ctx, const std::string& graph_path) {
  const auto g = io::parse_graph(ctx.read(graph_path));
  const auto ex = spanning_tree_entropy_extrema(g);
  auto& r = ctx.report;
  r.field("vertices", g.vertex_count());
  r.field("tree_count", ex.tree_count);
  r.field("min_entropy", ex.min);
  r.field("argmin", edge_strings(ex.argmin));
  r.field("max_entropy", ex.max);
  r.field("argmax", edge_strings(ex.argmax));
}

void do_assign_leaders(Context& ctx, const std::string& pmf_path, int D) {
  const auto pmf = io::parse_pmf(ctx.read(pmf_path));
  const auto a = assign_leaders(pmf, D);
  auto& r = ctx.report;
  std::vector<std::vector<json>> rows;
  for (std::size_t i = 0; i < a.leaders.size(); ++i) {
    const auto& l = a.leaders[i];
    rows.push_back({l.label, l.path.to_string(D), l.path.length(), a.importance[i].p});
  }
  r.field("D", D);
  r.field("max_depth", a.tree.max_depth);
  r.table("leaders", {"label", "path", "depth", "probability"}, std::move(rows));
  r.field("expected_depth", a.expected_depth());
  r.field("entropy_bound", shannon_entropy(pmf, D));
  r.field("kraft_sum", a.kraft_sum());
  const auto counts = level_counts(a);
  r.field("level_counts", counts.s);
  r.field("total_nodes", a.tree.total_nodes());
  if (D > 2) {
    // D^(n+1) - 1 only counts the nodes of a binary tree
    r.field("binary_formula_nodes", std::pow(static_cast<double>(D), a.tree.max_depth + 1) - 1);
    r.field("node_count_note", "total_nodes uses (D^(n+1)-1)/(D-1); D^(n+1)-1 overcounts for D > 2");
  }
  r.field("local_leader_probability", local_leader_probability(counts, D, a.tree.max_depth));
  r.field("secure", verify_secure(a).secure());
}

struct PlanArgs {
  std::string graph;
  std::string root;
  std::string pmf;
  int D = 2;
  bool relax = false;
  bool audit = false;
};

std::string join_path(const std::vector<VertexId>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) out += (i ? ">" : "") + path[i];
  return out;
}

void do_plan_multicast(Context& ctx, const PlanArgs& a) {
  const auto g = io::parse_weighted_graph(ctx.read(a.graph));
  const auto pmf = io::parse_pmf(ctx.read(a.pmf));
  const auto plan = a.relax ? plan_multicast_relaxed(g, a.root, pmf, a.D) : plan_multicast(g, a.root, pmf, a.D);
  auto& r = ctx.report;
  r.field("root", plan.root);
  r.field("D", plan.arity);
  r.field("mst_weight", plan.tree_weight);
  r.field("expected_depth", plan.expected_depth);
  r.field("kraft_sum", plan.kraft_sum);
  r.field("secure", plan.security.secure());
  r.field("heuristic", plan.heuristic);
  std::vector<std::vector<json>> rows;
  for (const auto& l : plan.leaders)
    rows.push_back({l.label, l.path.to_string(plan.arity), join_path(l.vertex_path), l.probability});
  r.table("leaders", {"label", "path", "vertex_path", "probability"}, std::move(rows));
  if (a.audit) {
    const auto report = plan_cost_audit(plan, g);
    std::vector<std::vector<json>> checks;
    for (const auto& c : report.checks) checks.push_back({c.name, to_string(c.status), c.detail});
    r.table("audit", {"check", "status", "detail"}, std::move(checks));
    r.field("audit_passed", report.passed());
  }
}

void do_reliability(Context& ctx, double q, int depth, std::optional<std::uint64_t> mc_trials) {
  auto& r = ctx.report;
  r.field("q", q);
  r.field("depth", depth);
  const double p = path_reliability(q, depth);
  r.field("reliability", p);
  r.field("last_link_failure", last_link_failure_probability(q, depth));
  if (mc_trials) {
    if (!ctx.seed) throw UsageError("--mc-trials requires --seed");
    const double est = estimate_path_reliability(q, depth, *mc_trials, *ctx.seed);
    r.field("mc_trials", *mc_trials);
    r.field("mc_estimate", est);
    r.field("mc_standard_error", std::sqrt(p * (1.0 - p) / static_cast<double>(*mc_trials)));
  }
}

void do_levels(Context& ctx, const std::string& graph_path, const std::string& bs, const std::string& positions,
               std::optional<int> sectors) {
  const auto g = io::parse_graph(ctx.read(graph_path));
  auto net = assign_levels(g, bs);
  if (!positions.empty() || sectors) {
    if (positions.empty() || !sectors) throw UsageError("--positions and --sectors must be given together");
    attach_sectors(net, io::parse_positions(ctx.read(positions)), *sectors);
  }
  std::vector<std::vector<json>> rows;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::vector<json> row{g.id(v), net.level[v]};
    if (net.sector) row.emplace_back((*net.sector)[v]);
    rows.push_back(std::move(row));
  }
  std::vector<std::string> cols{"vertex", "level"};
  if (net.sector) cols.emplace_back("sector");
  ctx.report.field("base_station", bs);
  ctx.report.field("max_level", net.max_level());
  ctx.report.table("levels", std::move(cols), std::move(rows));
}

void do_sectors(Context& ctx, const std::string& positions, const std::string& bs, int sectors) {
  const auto pos = io::parse_positions(ctx.read(positions));
  const auto ids = assign_sectors(pos, bs, sectors);
  const auto origin = pos.at(bs);
  std::vector<std::vector<json>> rows;
  for (const auto& [v, s] : ids) {
    const json bearing = v == bs ? json(nullptr) : json(bearing_degrees(origin, pos.at(v)));
    rows.push_back({v, bearing, s});
  }
  ctx.report.field("base_station", bs);
  ctx.report.field("sectors", sectors);
  ctx.report.table("sector_ids", {"vertex", "bearing", "sector"}, std::move(rows));
}

struct GossipArgs {
  std::string graph;
  std::string bs;
  std::vector<double> probs;
  double q = 0.0;
  std::uint64_t trials = 1000;
  std::string source;
  bool allow_nonmonotone = false;
  bool trial_log = false;
  std::string sweep;
  std::vector<double> values;
};

void write_sim(Report& r, const SimResult& res) {
  r.field("trials", res.trials);
  r.field("deliveries", res.deliveries);
  r.field("delivery_ratio", res.delivery_ratio);
  const double p = res.delivery_ratio;
  r.field("standard_error", std::sqrt(p * (1.0 - p) / static_cast<double>(res.trials)));
  r.field("mean_transmissions", res.mean_transmissions);
  r.field("mean_hops", res.mean_hops ? json(*res.mean_hops) : json(nullptr));
  r.field("nonmonotone", res.nonmonotone);
}

void do_gossip(Context& ctx, const GossipArgs& a) {
  const auto g = io::parse_graph(ctx.read(a.graph));
  const auto net = assign_levels(g, a.bs);
  GossipConfig cfg;
  cfg.level_probabilities = a.probs;
  cfg.link_failure = a.q;
  cfg.trials = a.trials;
  cfg.seed = *ctx.seed;
  cfg.allow_nonmonotone = a.allow_nonmonotone;
  cfg.record_trials = a.trial_log;
  const VertexId source = a.source.empty() ? default_event_source(net) : a.source;
  auto& r = ctx.report;
  r.field("base_station", a.bs);
  r.field("source", source);
  r.field("source_level", net.level_of(source));
  r.field("level_probabilities", a.probs);
  r.field("q", a.q);

  if (!a.sweep.empty()) {
    if (a.values.empty()) throw UsageError("--sweep requires --values");
    if (a.trial_log) throw UsageError("--trial-log cannot be combined with --sweep");
    SweepSpec spec;
    spec.values = a.values;
    if (a.sweep == "q") {
      spec.parameter = SweepParameter::link_failure;
    } else if (a.sweep.size() > 1 && a.sweep[0] == 'P') {
      spec.parameter = SweepParameter::level_probability;
      try {
        std::size_t used = 0;
        spec.level = std::stoi(a.sweep.substr(1), &used);
        if (used != a.sweep.size() - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw UsageError(fmt::format("--sweep expects q or P<level>, got '{}'", a.sweep));
      }
    } else {
      throw UsageError(fmt::format("--sweep expects q or P<level>, got '{}'", a.sweep));
    }
    const auto points = sweep_levels(net, cfg, spec, source);
    std::vector<std::vector<json>> rows;
    for (const auto& pt : points) {
      const double p = pt.result.delivery_ratio;
      rows.push_back({pt.value, p, std::sqrt(p * (1.0 - p) / static_cast<double>(pt.result.trials)),
                      pt.result.mean_transmissions});
    }
    r.field("sweep", a.sweep);
    r.field("trials", a.trials);
    r.table("points", {"value", "delivery_ratio", "standard_error", "mean_transmissions"}, std::move(rows));
    return;
  }

  const auto res = simulate_gossip(net, cfg, source);
  write_sim(r, res);
  if (a.trial_log) {
    std::vector<std::vector<json>> rows;
    for (std::size_t t = 0; t < res.outcomes.size(); ++t) {
      const auto& o = res.outcomes[t];
      rows.push_back({t, o.delivered, o.transmissions, o.delivered ? json(o.hops) : json(nullptr)});
    }
    r.table("trial_log", {"trial", "delivered", "transmissions", "hops"}, std::move(rows));
  }
}

void do_fuse(Context& ctx, const std::string& path, int f, const std::string& function) {
  IntervalSet set{io::parse_intervals(ctx.read(path)), f};
  set.validate();
  auto& r = ctx.report;
  r.field("n", set.size());
  r.field("f", f);
  const bool all = function == "compare";
  if (function == "m" || all) {
    r.field("m", interval_json(m_function(set)));
    std::vector<std::vector<json>> rows;
    for (const auto& iv : agreement_regions(set)) rows.push_back({iv.lo, iv.hi});
    if (!all) r.table("regions", {"lo", "hi"}, std::move(rows));
  }
  if (function == "n" || all) r.field("n_function", interval_json(n_function(set)));
  if (function == "s" || all) {
    const auto s = s_function(set);
    r.field("s_a", s.a);
    r.field("s_b", s.b);
    r.field("s", interval_json(s.interval()));
    r.field("s_consistent", s.consistent());
  }
  if (all) {
    const auto cmp = fusion_compare(set);
    r.field("m_equals_n", cmp.m_equals_n);
    r.field("m_within_s", cmp.m_within_s);
    r.field("n_within_s", cmp.n_within_s);
  }
  if (function == "omega") {
    const auto omega = overlap_function(set);
    std::vector<std::vector<json>> rows;
    for (const auto& b : omega.breakpoints()) rows.push_back({b.x, b.at, b.after});
    r.table("omega", {"x", "at", "after"}, std::move(rows));
    r.field("integral", omega.integral());
  }
}

}  // namespace

const std::string& tool_version() {
  static const std::string version = PREFIXNET_VERSION;
  return version;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prefix-free multicast planning, graph entropy, gossip simulation and interval fusion.", "prefixnet"};
  app.set_version_flag("--version", "prefixnet " + tool_version());
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit a JSON document instead of text");

  Context ctx;
  ctx.argv = args;
  std::optional<std::uint64_t> seed;
  std::function<void()> action;

  const auto positive = CLI::PositiveNumber;
  const auto probability = CLI::Range(0.0, 1.0);

  KraftArgs kraft;
  auto* sc = app.add_subcommand("kraft", "Kraft sum of a length set or of an arithmetic progression");
  sc->add_option("--D", kraft.D, "Alphabet size")->required();
  sc->add_option("--lengths", kraft.lengths, "Comma-separated codeword lengths")->delimiter(',');
  sc->add_option("--lengths-file", kraft.lengths_file, "File with one length per line");
  sc->add_option("--larger-D", kraft.larger, "Also check Kraft at this larger alphabet");
  sc->add_option("--progression", kraft.progression, "n1,step,count")->delimiter(',');
  sc->callback([&] { action = [&] { do_kraft(ctx, kraft); }; });

  int D = 2;
  std::string pmf_path;
  sc = app.add_subcommand("huffman", "D-ary Huffman code for a pmf");
  sc->add_option("--D", D, "Alphabet size")->required();
  sc->add_option("--pmf", pmf_path, "PMF file")->required();
  sc->callback([&] { action = [&] { do_huffman(ctx, D, pmf_path); }; });

  std::vector<int> lengths;
  std::string lengths_file;
  sc = app.add_subcommand("code-from-lengths", "Canonical prefix code with the given lengths");
  sc->add_option("--D", D, "Alphabet size")->required();
  sc->add_option("--lengths", lengths, "Comma-separated codeword lengths")->delimiter(',');
  sc->add_option("--lengths-file", lengths_file, "File with one length per line");
  sc->callback([&] { action = [&] { do_code_from_lengths(ctx, D, lengths, lengths_file); }; });

  double base = 2.0;
  sc = app.add_subcommand("entropy", "Shannon entropy of a pmf");
  sc->add_option("--pmf", pmf_path, "PMF file")->required();
  sc->add_option("--base", base, "Logarithm base");
  sc->callback([&] { action = [&] { do_entropy(ctx, pmf_path, base); }; });

  GraphEntropyArgs ge;
  sc = app.add_subcommand("graph-entropy", "Degree-distribution entropy of a graph");
  sc->add_option("--graph", ge.graph, "Graph file")->required();
  sc->add_option("--coloring", ge.coloring, "Coloring file for conditional entropy");
  sc->add_option("--tsallis", ge.tsallis, "Also report Tsallis entropy with this q");
  sc->add_flag("--directed", ge.directed, "Read the file as a digraph");
  sc->callback([&] { action = [&] { do_graph_entropy(ctx, ge); }; });

  std::string g1, g2, map_path;
  sc = app.add_subcommand("kl", "KL divergence between two degree distributions");
  sc->add_option("--graph1", g1, "First graph")->required();
  sc->add_option("--graph2", g2, "Second graph")->required();
  sc->add_option("--map", map_path, "Vertex correspondence file (default: match ids)");
  sc->callback([&] { action = [&] { do_kl(ctx, g1, g2, map_path); }; });

  std::string graph_path;
  bool extrema = false;
  sc = app.add_subcommand("mst", "Minimum spanning tree of a weighted graph");
  sc->add_option("--graph", graph_path, "Weighted graph file")->required();
  sc->add_flag("--entropy-extrema", extrema, "Entropy range over all minimum spanning trees");
  sc->callback([&] { action = [&] { do_mst(ctx, graph_path, extrema); }; });

  sc = app.add_subcommand("span-entropy", "Entropy extrema over all spanning trees");
  sc->add_option("--graph", graph_path, "Graph file")->required();
  sc->callback([&] { action = [&] { do_span_entropy(ctx, graph_path); }; });

  sc = app.add_subcommand("assign-leaders", "Prefix-free leader placement in a D-ary tree");
  sc->add_option("--pmf", pmf_path, "Importance PMF file")->required();
  sc->add_option("--D", D, "Tree arity")->required();
  sc->callback([&] { action = [&] { do_assign_leaders(ctx, pmf_path, D); }; });

  PlanArgs plan;
  sc = app.add_subcommand("plan-multicast", "MST plus Huffman leader placement on a weighted graph");
  sc->add_option("--graph", plan.graph, "Weighted graph file")->required();
  sc->add_option("--root", plan.root, "Root vertex")->required();
  sc->add_option("--pmf", plan.pmf, "Importance PMF file")->required();
  sc->add_option("--D", plan.D, "Tree arity")->required();
  sc->add_flag("--relax", plan.relax, "Retry with longer codewords when the tree is too small (heuristic)");
  sc->add_flag("--audit", plan.audit, "Re-check the plan against brute force");
  sc->callback([&] { action = [&] { do_plan_multicast(ctx, plan); }; });

  double q = 0.0;
  int depth = 1;
  std::optional<std::uint64_t> mc_trials;
  sc = app.add_subcommand("reliability", "Path reliability under independent link failure");
  sc->add_option("--q", q, "Link failure probability")->required()->check(probability);
  sc->add_option("--depth", depth, "Path length in links")->required();
  sc->add_option("--mc-trials", mc_trials, "Also estimate by Monte Carlo")->check(positive);
  sc->add_option("--seed", seed, "Random seed");
  sc->callback([&] { action = [&] { do_reliability(ctx, q, depth, mc_trials); }; });

  std::string bs, positions;
  std::optional<int> sectors;
  sc = app.add_subcommand("levels", "BFS levels from the base station");
  sc->add_option("--graph", graph_path, "Graph file")->required();
  sc->add_option("--bs", bs, "Base station vertex")->required();
  sc->add_option("--positions", positions, "Positions file for sector ids");
  sc->add_option("--sectors", sectors, "Number of sectors");
  sc->callback([&] { action = [&] { do_levels(ctx, graph_path, bs, positions, sectors); }; });

  int sector_count = 4;
  sc = app.add_subcommand("sectors", "Angular sector ids around the base station");
  sc->add_option("--positions", positions, "Positions file")->required();
  sc->add_option("--bs", bs, "Base station vertex")->required();
  sc->add_option("--sectors", sector_count, "Number of sectors")->required();
  sc->callback([&] { action = [&] { do_sectors(ctx, positions, bs, sector_count); }; });

  GossipArgs gossip;
  sc = app.add_subcommand("gossip", "Level-controlled gossip simulation");
  sc->add_option("--graph", gossip.graph, "Graph file")->required();
  sc->add_option("--bs", gossip.bs, "Base station vertex")->required();
  sc->add_option("--levels-probs", gossip.probs, "Forward probability per level, comma-separated")
      ->required()
      ->delimiter(',');
  sc->add_option("--q", gossip.q, "Link failure probability")->check(probability);
  sc->add_option("--trials", gossip.trials, "Number of trials")->check(positive);
  sc->add_option("--seed", seed, "Random seed")->required();
  sc->add_option("--source", gossip.source, "Event vertex (default: first vertex at the deepest level)");
  sc->add_flag("--allow-nonmonotone", gossip.allow_nonmonotone, "Accept probabilities that do not decrease");
  sc->add_flag("--trial-log", gossip.trial_log, "Append one line per trial");
  sc->add_option("--sweep", gossip.sweep, "Parameter to sweep: q or P<level>");
  sc->add_option("--values", gossip.values, "Sweep values, comma-separated")->delimiter(',');
  sc->callback([&] { action = [&] { do_gossip(ctx, gossip); }; });

  std::string intervals;
  int faults = 0;
  std::string function = "compare";
  sc = app.add_subcommand("fuse", "Fault-tolerant fusion of sensor intervals");
  sc->add_option("--intervals", intervals, "Interval file")->required();
  sc->add_option("--f", faults, "Fault bound")->required();
  sc->add_option("--function", function, "m, omega, n, s or compare")
      ->check(CLI::IsMember({"m", "omega", "n", "s", "compare"}));
  sc->callback([&] { action = [&] { do_fuse(ctx, intervals, faults, function); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "prefixnet " << tool_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "prefixnet: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto* sub : app.get_subcommands()) ctx.subcommand = sub->get_name();
  ctx.seed = seed;
  try {
    action();
  } catch (const UsageError& e) {
    err << "prefixnet: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "prefixnet: error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "prefixnet: error: " << e.what() << '\n';
    return kExitInput;
  }
  ctx.write(out, as_json);
  return kExitOk;
}

}  // namespace prefixnet::cli
