// Copyright 2026 The ncgap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "ncgap/certificate.hpp"
#include "ncgap/codes.hpp"
#include "ncgap/error.hpp"
#include "ncgap/gap.hpp"
#include "ncgap/ic.hpp"
#include "ncgap/io.hpp"
#include "ncgap/lincode.hpp"
#include "ncgap/network.hpp"
#include "ncgap/qkneser.hpp"
#include "ncgap/skeleton.hpp"

namespace ncgap::cli {

namespace fs = std::filesystem;
using io::json;

namespace {

// Raised by handlers for bad combinations of otherwise valid flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json_out = false;
  std::uint64_t budget = 100'000'000;
  std::uint64_t max_subspaces = 1'000'000;
  double timeout_secs = 0;
  std::uint64_t seed = 0;  // reserved: every search is deterministic
  std::string cert_dir = "certs";
};

class Ctx {
 public:
  Ctx(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  Budget budget() const {
    Budget b = Budget::nodes(g_.budget);
    if (g_.timeout_secs > 0) b.with_timeout(std::chrono::duration<double>(g_.timeout_secs));
    return b;
  }
  Limits limits() const {
    Limits l;
    l.max_subspaces = g_.max_subspaces;
    return l;
  }
  bool json_mode() const { return g_.json_out; }

  /// Records a result field; in text mode prints "key: value" (or `text`).
  void put(const std::string& key, const json& value, const std::string& text = {}) {
    if (g_.json_out) {
      doc_[key] = value;
      return;
    }
    if (!text.empty())
      out_ << text << '\n';
    else
      out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  /// Raw text that only appears in text mode.
  void say(const std::string& text) {
    if (!g_.json_out) out_ << text << '\n';
  }
  void save_cert(const std::string& name, const json& cert) {
    auto path = fs::path(g_.cert_dir) / (name + ".json");
    io::write_json(path, cert);
    put("certificate", path.string());
  }
  void finish() {
    if (g_.json_out) out_ << doc_.dump(2) << '\n';
  }
  std::ostream& out() { return out_; }

 private:
  const Globals& g_;
  std::ostream& out_;
  json doc_ = json::object();
};

std::string sanitize(std::string s) {
  for (auto& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '_') c = '_';
  return s;
}

// ---- network selection ---------------------------------------------------

struct NetSpec {
  std::string file;
  bool butterfly = false;
  std::vector<std::uint64_t> comb;
  std::vector<std::uint64_t> kneser;
  std::string graph;

  void attach(CLI::App* sc) {
    sc->add_option("--network,-n", file, "Network JSON file");
    sc->add_flag("--butterfly", butterfly, "The butterfly network");
    sc->add_option("--comb", comb, "Combination network N_{h,r,s}: H R S")->expected(3);
    sc->add_option("--kneser", kneser, "Kneser network K_{q,t;h}: Q T H")->expected(3);
    sc->add_option("--from-graph", graph, "Network whose skeleton is the given UGraph JSON");
  }

  std::string name() const {
    if (butterfly) return "butterfly";
    if (!comb.empty())
      return "N_" + std::to_string(comb[0]) + "_" + std::to_string(comb[1]) + "_" + std::to_string(comb[2]);
    if (!kneser.empty())
      return "K_" + std::to_string(kneser[0]) + "_" + std::to_string(kneser[1]) + "_" + std::to_string(kneser[2]);
    if (!graph.empty()) return "skel_" + sanitize(fs::path(graph).stem().string());
    return sanitize(fs::path(file).stem().string());
  }

  Network load(const Limits& limits) const {
    int chosen = !file.empty() + butterfly + !comb.empty() + !kneser.empty() + !graph.empty();
    if (chosen != 1)
      throw UsageError("choose exactly one of --network, --butterfly, --comb, --kneser, --from-graph");
    if (butterfly) return build_butterfly();
    if (!comb.empty()) return build_combination(static_cast<unsigned>(comb[0]), comb[1], comb[2], limits);
    if (!kneser.empty()) return build_kneser(kneser[0], kneser[1], static_cast<unsigned>(kneser[2]), limits);
    if (!graph.empty()) return reverse_skeleton(io::graph_from_json(io::read_json(graph)));
    return io::network_from_json(io::read_json(file));
  }
};

// ---- graph selection -----------------------------------------------------

std::vector<std::uint64_t> parse_numbers(const std::string& s) {
  std::vector<std::uint64_t> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stoull(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("not a number list: '" + s + "'");
    }
  }
  return v;
}

/// "qkneser:Q,N,M", "complete:N" or a UGraph JSON file.
std::pair<UGraph, json> load_graph(const std::string& spec, const Limits& limits) {
  auto colon = spec.find(':');
  if (colon != std::string::npos && !fs::exists(spec)) {
    auto kind = spec.substr(0, colon);
    auto nums = parse_numbers(spec.substr(colon + 1));
    if (kind == "qkneser" && nums.size() == 3)
      return {build_qkneser(nums[0], nums[1], nums[2], limits), cert::qkneser_spec(nums[0], nums[1], nums[2])};
    if (kind == "complete" && nums.size() == 1) return {complete_graph(nums[0]), cert::complete_spec(nums[0])};
    throw UsageError("graph spec must be qkneser:Q,N,M, complete:N or a file");
  }
  auto g = io::graph_from_json(io::read_json(spec));
  return {g, cert::explicit_spec(g)};
}

void write_output(Ctx& ctx, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    ctx.out() << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write " + path);
  f << text;
}

std::string bracket_text(const Bracket& b) { return b.exact() ? std::to_string(b.lower) : b.str(); }

json bracket_json(const Bracket& b) {
  if (b.exact()) return b.lower;
  return json{{"lower", b.lower}, {"upper", b.upper}};
}

// ---- commands ------------------------------------------------------------

int cmd_build(Ctx& ctx, const std::string& which, const std::vector<std::uint64_t>& args, const NetSpec& base,
              std::uint64_t param, const std::string& format, const std::string& output) {
  Network n;
  if (which == "comb")
    n = build_combination(static_cast<unsigned>(args.at(0)), args.at(1), args.at(2), ctx.limits());
  else if (which == "kneser")
    n = build_kneser(args.at(0), args.at(1), static_cast<unsigned>(args.at(2)), ctx.limits());
  else if (which == "from-graph")
    n = reverse_skeleton(io::graph_from_json(io::read_json(base.graph)));
  else if (which == "extend")
    n = extend_messages(base.load(ctx.limits()), static_cast<unsigned>(param));
  else
    n = parallelize(base.load(ctx.limits()), static_cast<unsigned>(param));
  write_output(ctx, output, format == "dot" ? io::network_to_dot(n) : io::network_to_json(n).dump(2) + "\n");
  return kOk;
}

int cmd_skeleton(Ctx& ctx, const NetSpec& ns, const std::string& format) {
  auto n = ns.load(ctx.limits());
  auto s = skeleton(n);
  if (format == "dot") {
    ctx.out() << io::graph_to_dot(s.graph, "skeleton");
    return kOk;
  }
  if (format == "dimacs") {
    ctx.out() << io::graph_to_dimacs(s.graph);
    return kOk;
  }
  ctx.put("vertices", s.graph.vertex_count());
  ctx.put("edges", s.graph.edge_count());
  json classes = json::array();
  for (std::size_t i = 0; i < s.classes.size(); ++i) {
    classes.push_back(s.classes[i]);
    std::string line = "class " + std::to_string(s.class_ids[i]) + ":";
    for (auto e : s.classes[i]) line += " " + std::to_string(e);
    ctx.say(line);
  }
  if (ctx.json_mode()) ctx.put("classes", classes);
  ctx.put("graph", io::graph_to_json(s.graph), "adjacent: " + [&] {
    std::string t;
    for (auto [u, v] : s.graph.edges())
      t += "{" + std::to_string(s.class_ids[u]) + "," + std::to_string(s.class_ids[v]) + "} ";
    return t;
  }());
  auto issue = skeleton_equivalence_issue(n);
  ctx.put("equivalent", issue.empty() ? json(true) : json(issue),
          issue.empty() ? "solutions correspond to skeleton homomorphisms" : "no skeleton equivalence: " + issue);
  return kOk;
}

int cmd_chi(Ctx& ctx, const std::vector<std::uint64_t>& qk, const std::vector<std::uint64_t>& hyper,
            const std::string& graph_file, const NetSpec& ns) {
  int chosen = !qk.empty() + !hyper.empty() + !graph_file.empty();
  ChromaticResult r;
  json spec;
  std::string name;
  if (chosen > 1) throw UsageError("choose one of --qkneser, --hyper, --graph or a network");
  if (!qk.empty()) {
    r = chromatic_number(build_qkneser(qk[0], qk[1], qk[2], ctx.limits()), ctx.budget());
    spec = cert::qkneser_spec(qk[0], qk[1], qk[2]);
    name = "chi-qkneser-" + std::to_string(qk[0]) + "-" + std::to_string(qk[1]) + "-" + std::to_string(qk[2]);
  } else if (!hyper.empty()) {
    auto h = static_cast<unsigned>(hyper[2]);
    r = chromatic_number(build_qkneser_hyper(hyper[0], hyper[1], h, ctx.limits()), ctx.budget());
    spec = cert::qkneser_hyper_spec(hyper[0], hyper[1], h);
    name = "chi-hyper-" + std::to_string(hyper[0]) + "-" + std::to_string(hyper[1]) + "-" + std::to_string(h);
  } else if (!graph_file.empty()) {
    auto [g, sp] = load_graph(graph_file, ctx.limits());
    r = chromatic_number(g, ctx.budget());
    spec = sp;
    name = "chi-" + sanitize(fs::path(graph_file).stem().string());
  } else {
    auto s = skeleton(ns.load(ctx.limits()));
    r = chromatic_number(s.graph, ctx.budget());
    spec = cert::explicit_spec(s.graph);
    name = "chi-skeleton-" + ns.name();
  }
  ctx.put("chi", r.exact ? json(r.upper) : json{{"lower", r.lower}, {"upper", r.upper}},
          r.exact ? "chi = " + std::to_string(r.upper)
                  : "chi in [" + std::to_string(r.lower) + "," + std::to_string(r.upper) + "]");
  ctx.put("clique", r.clique.size(), "largest clique: " + std::to_string(r.clique.size()));
  ctx.put("nodes", r.nodes, "search nodes: " + std::to_string(r.nodes));
  ctx.save_cert(name, cert::coloring_certificate(spec, r.witness, r.clique, r.exact));
  return r.exact ? kOk : kBudget;
}

int cmd_hom(Ctx& ctx, const std::string& from_spec, const std::string& to_spec) {
  auto [from, fj] = load_graph(from_spec, ctx.limits());
  auto [to, tj] = load_graph(to_spec, ctx.limits());
  auto r = find_homomorphism(from, to, ctx.budget());
  ctx.put("outcome", std::string(to_string(r.outcome)),
          r.outcome == Outcome::found  ? "homomorphism found"
          : r.outcome == Outcome::none ? "no homomorphism exists"
                                       : "undecided within budget");
  ctx.put("nodes", r.nodes, "search nodes: " + std::to_string(r.nodes));
  if (r.outcome == Outcome::found) {
    ctx.put("map", r.map);
    ctx.save_cert("hom-" + sanitize(from_spec) + "-to-" + sanitize(to_spec),
                  cert::homomorphism_certificate(fj, tj, r.map));
    return kOk;
  }
  return r.outcome == Outcome::none ? kNegative : kBudget;
}

int cmd_coloring(Ctx& ctx, const std::vector<std::uint64_t>& qk) {
  auto c = canonical_coloring(qk[0], qk[1], qk[2], ctx.limits());
  auto g = build_qkneser(qk[0], qk[1], qk[2], ctx.limits());
  bool proper = is_proper(g, c);
  ctx.put("vertices", g.vertex_count());
  ctx.put("colors", c.used_colors());
  ctx.put("proper", proper);
  ctx.save_cert("coloring-" + std::to_string(qk[0]) + "-" + std::to_string(qk[1]) + "-" + std::to_string(qk[2]),
                cert::coloring_certificate(cert::qkneser_spec(qk[0], qk[1], qk[2]), c, {}, false));
  return proper ? kOk : kNegative;
}

int cmd_solve(Ctx& ctx, const NetSpec& ns, std::uint64_t q, std::size_t t, const std::string& output) {
  auto n = ns.load(ctx.limits());
  auto field = make_field_of_order(q, ctx.limits());
  auto r = search_solution(n, field, t, ctx.budget(), ctx.limits());
  ctx.put("outcome", std::string(to_string(r.outcome)),
          r.outcome == Outcome::found  ? "solution found over " + field.name() + " with t = " + std::to_string(t)
          : r.outcome == Outcome::none ? "no (" + std::to_string(q) + "," + std::to_string(t) + ")-linear solution"
                                       : "undecided within budget");
  ctx.put("nodes", r.nodes, "search nodes: " + std::to_string(r.nodes));
  if (r.outcome != Outcome::found) return r.outcome == Outcome::none ? kNegative : kBudget;
  if (!output.empty()) {
    io::write_json(output, io::code_to_json(*r.code));
    ctx.put("code", output);
  } else if (ctx.json_mode()) {
    ctx.put("code", io::code_to_json(*r.code));
  }
  ctx.save_cert("solve-" + ns.name() + "-q" + std::to_string(q) + "-t" + std::to_string(t),
                cert::code_certificate(n, *r.code));
  return kOk;
}

int cmd_verify(Ctx& ctx, const NetSpec& ns, const std::string& code_file) {
  auto n = ns.load(ctx.limits());
  auto code = io::code_from_json(io::read_json(code_file));
  auto v = verify_solution(n, code);
  json ranks = json::array();
  for (auto [node, r] : v.terminal_ranks) {
    ranks.push_back({{"terminal", node}, {"rank", r}});
    ctx.say("terminal " + n.display_name(node) + ": rank " + std::to_string(r) + "/" +
            std::to_string(code.width()));
  }
  if (ctx.json_mode()) ctx.put("terminal_ranks", ranks);
  ctx.put("locally_consistent", v.locally_consistent);
  ctx.put("accepted", v.accepted, v.accepted ? "accepted" : "rejected: " + v.first_violation);
  return v.accepted ? kOk : kNegative;
}

int cmd_mds(Ctx& ctx, std::uint64_t q, std::size_t r, std::size_t h, std::size_t s, bool exhaustive) {
  if (s == 0) s = h;
  if (exhaustive) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < h; ++i) size *= q;
    auto res = max_codebook_distance(q, r, size, ctx.budget());
    ctx.put("best_distance", res.best_distance,
            "largest distance of " + std::to_string(size) + " words of length " + std::to_string(r) + ": " +
                std::to_string(res.best_distance) + (res.exact ? "" : " (lower bound, budget ran out)"));
    bool ok = res.best_distance >= r - s + 1;
    ctx.put("solvable", ok, std::string("N_{h,r,s} ") + (ok ? "solvable" : "not solvable") + " over an alphabet of size " +
                                std::to_string(q));
    if (!res.exact && !ok) return kBudget;
    return ok ? kOk : kNegative;
  }
  if (r > q + 1) {
    ctx.put("solvable", nullptr, "no Reed-Solomon code of length " + std::to_string(r) + " over F_" + std::to_string(q) +
                                     " (length exceeds q+1); try --exhaustive or solve");
    return kNegative;
  }
  auto code = rs_code(q, r, h, ctx.limits());
  auto d = min_distance(code, ctx.limits());
  std::ostringstream gen;
  for (std::size_t i = 0; i < code.generator.rows(); ++i) {
    gen << "  ";
    for (std::size_t j = 0; j < code.generator.cols(); ++j) gen << code.generator(i, j).code << ' ';
    if (i + 1 < code.generator.rows()) gen << '\n';
  }
  ctx.put("generator", io::matrix_to_json(code.generator), "generator:\n" + gen.str());
  ctx.put("min_distance", d);
  auto sol = solvability_by_code(static_cast<unsigned>(h), r, s, code, ctx.limits());
  ctx.put("solvable", sol.solvable,
          "N_{" + std::to_string(h) + "," + std::to_string(r) + "," + std::to_string(s) + "} " +
              (sol.solvable ? "solved" : "not solved") + " by this code (needs distance " +
              std::to_string(sol.required) + ")");
  ctx.save_cert("mds-" + std::to_string(q) + "-" + std::to_string(r) + "-" + std::to_string(h),
                cert::linear_code_certificate(code, d));
  if (sol.linear_solution) {
    auto n = build_combination(static_cast<unsigned>(h), r, s, ctx.limits());
    ctx.save_cert("mds-solution-" + std::to_string(q) + "-" + std::to_string(r) + "-" + std::to_string(h) + "-" +
                      std::to_string(s),
                  cert::code_certificate(n, *sol.linear_solution));
  }
  return sol.solvable ? kOk : kNegative;
}

int cmd_ic_search(Ctx& ctx, std::uint64_t q, std::size_t t, unsigned h, unsigned alpha, std::size_t size) {
  auto tag = std::to_string(q) + "-" + std::to_string(t) + "-" + std::to_string(h) + "-" + std::to_string(alpha);
  if (size > 0) {
    auto r = ic_find(q, t, h, alpha, size, ctx.budget(), ctx.limits());
    ctx.put("outcome", std::string(to_string(r.outcome)));
    ctx.put("nodes", r.nodes);
    if (r.outcome == Outcome::found) {
      ctx.save_cert("ic-" + tag + "-size" + std::to_string(size), cert::ic_certificate(r.witness, alpha, false));
      return kOk;
    }
    return r.outcome == Outcome::none ? kNegative : kBudget;
  }
  auto r = ic_max_size(q, t, h, alpha, ctx.budget(), ctx.limits());
  ctx.put("max_size", r.best, "maximum size: " + std::to_string(r.best) + (r.exact ? "" : " (lower bound)"));
  ctx.put("bound", r.bound, "upper bound: " + std::to_string(r.bound));
  ctx.put("exact", r.exact);
  ctx.put("nodes", r.nodes);
  ctx.save_cert("ic-" + tag, cert::ic_certificate(r.witness, alpha, r.exact));
  return r.exact ? kOk : kBudget;
}

int cmd_check(Ctx& ctx, const std::vector<std::string>& files) {
  bool all_ok = true;
  json reports = json::array();
  for (const auto& f : files) {
    auto rep = cert::check(io::read_json(f), ctx.budget());
    all_ok = all_ok && rep.ok;
    reports.push_back({{"file", f}, {"ok", rep.ok}, {"messages", rep.messages}, {"unverified", rep.unverified}});
    ctx.say(f + ": " + (rep.ok ? "VALID" : "INVALID"));
    for (const auto& m : rep.messages) ctx.say("  " + m);
    for (const auto& u : rep.unverified) ctx.say("  not re-derived: " + u);
  }
  if (ctx.json_mode()) ctx.put("reports", reports);
  return all_ok ? kOk : kNegative;
}

std::uint64_t parse_psi_arg(const std::string& x) {
  auto slash = x.find('/');
  auto num = [&](const std::string& s) {
    auto v = parse_numbers(s);
    if (v.size() != 1 || v[0] == 0) throw UsageError("psi needs a positive integer or ratio, got '" + x + "'");
    return v[0];
  };
  if (slash == std::string::npos) return psi(num(x));
  return psi_ratio(num(x.substr(0, slash)), num(x.substr(slash + 1)));
}

GapOptions gap_options(const Ctx& ctx, const std::string& method) {
  GapOptions o;
  o.budget = ctx.budget();
  o.limits = ctx.limits();
  if (method == "skeleton")
    o.method = GapMethod::skeleton;
  else if (method == "exhaustive")
    o.method = GapMethod::exhaustive;
  else if (method != "auto")
    throw UsageError("--method must be auto, skeleton or exhaustive");
  return o;
}

void report_alphabet(Ctx& ctx, const std::string& key, const AlphabetResult& a) {
  json j{{"value", bracket_json(a.value)}, {"method", a.method}, {"t", a.t}, {"notes", a.notes}};
  std::string text = key + " = " + bracket_text(a.value) + " (" + a.method;
  if (key == "q_v") text += ", t = " + std::to_string(a.t);
  text += ")";
  for (const auto& n : a.notes) text += "\n  " + n;
  ctx.put(key, j, text);
}

int alphabet_exit(const Bracket& b) { return b.exact() ? kOk : kBudget; }

int cmd_alphabet(Ctx& ctx, const NetSpec& ns, const std::string& method, bool scalar) {
  auto n = ns.load(ctx.limits());
  auto opt = gap_options(ctx, method);
  auto a = scalar ? qs_exact(n, opt) : qv_exact(n, opt);
  report_alphabet(ctx, scalar ? "q_s" : "q_v", a);
  if (a.code)
    ctx.save_cert(std::string(scalar ? "qs-" : "qv-") + ns.name(), cert::code_certificate(n, *a.code));
  return alphabet_exit(a.value);
}

int cmd_gap(Ctx& ctx, const NetSpec& ns, const std::string& method) {
  auto n = ns.load(ctx.limits());
  auto r = gap_exact(n, gap_options(ctx, method));
  report_alphabet(ctx, "q_s", r.qs);
  report_alphabet(ctx, "q_v", r.qv);
  ctx.put("gap", bracket_json(r.gap), "gap = " + bracket_text(r.gap));
  ctx.save_cert("gap-" + ns.name(), cert::gap_certificate(n, r));
  return alphabet_exit(r.gap);
}

int cmd_formula(Ctx& ctx, const std::string& kind_name, const FormulaParams& p) {
  auto kind = parse_formula_kind(kind_name);
  if (!kind) throw UsageError("unknown formula '" + kind_name + "'");
  auto v = gap_formula(*kind, p);
  ctx.put("formula", to_string(*kind));
  ctx.put("value", v.value, "gap " + v.relation + " " + std::to_string(v.value) + "   [" + v.expression + "]");
  ctx.put("relation", v.relation, "");
  if (!v.weaker.empty()) ctx.put("weaker", v.weaker, "weaker bound: " + v.weaker);
  ctx.put("hypotheses_met", v.hypotheses_met, v.hypotheses_met ? "hypotheses met" : v.note);
  return kOk;
}

int cmd_gap_table(Ctx& ctx, const std::vector<std::uint64_t>& qs, const std::vector<std::uint64_t>& ts,
                  const std::string& method) {
  auto opt = gap_options(ctx, method);
  int code = kOk;
  ctx.out() << "network,q_v,q_s,gap,methods,runtime\n";
  for (auto q : qs)
    for (auto t : ts) {
      auto start = std::chrono::steady_clock::now();
      auto n = build_kneser(q, t, 2, ctx.limits());
      auto r = gap_exact(n, opt);
      std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
      if (!r.gap.exact()) code = kBudget;
      ctx.out() << "K_{" << q << "," << t << ";2}," << bracket_text(r.qv.value) << ',' << bracket_text(r.qs.value)
                << ',' << bracket_text(r.gap) << ",qs:" << r.qs.method << ";qv:" << r.qv.method << "(t=" << r.qv.t
                << ")," << std::fixed << std::setprecision(3) << dt.count() << '\n';
      ctx.out().unsetf(std::ios::floatfield);
    }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scalar and vector linear network coding: alphabets, gaps and certificates", "ncgap"};
  app.require_subcommand(1);
  // --h is the message count, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");
  Globals g;
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_option("--budget", g.budget, "Search node budget")->capture_default_str();
  app.add_option("--max-subspaces", g.max_subspaces, "Largest subspace enumeration allowed")->capture_default_str();
  app.add_option("--timeout-secs", g.timeout_secs, "Wall-clock limit per search (0 = none)");
  app.add_option("--seed", g.seed, "Reserved; all searches are deterministic");
  app.add_option("--cert-dir", g.cert_dir, "Directory for certificates")->capture_default_str();

  Ctx ctx(g, out);
  std::function<int()> action;

  // build
  auto* build = app.add_subcommand("build", "Construct a network and print it as JSON or DOT");
  build->require_subcommand(1);
  std::string build_format = "json", build_out;
  build->add_option("--format", build_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  build->add_option("-o,--output", build_out, "Output file (default stdout)");
  NetSpec build_base;
  std::vector<std::uint64_t> build_args(3);
  std::uint64_t build_param = 0;
  auto* b_comb = build->add_subcommand("comb", "Combination network N_{h,r,s}");
  b_comb->add_option("H", build_args[0])->required();
  b_comb->add_option("R", build_args[1])->required();
  b_comb->add_option("S", build_args[2])->required();
  b_comb->callback([&] { action = [&] { return cmd_build(ctx, "comb", build_args, build_base, 0, build_format, build_out); }; });
  auto* b_kn = build->add_subcommand("kneser", "Kneser network K_{q,t;h}");
  b_kn->add_option("Q", build_args[0])->required();
  b_kn->add_option("T", build_args[1])->required();
  b_kn->add_option("H", build_args[2])->required();
  b_kn->callback([&] { action = [&] { return cmd_build(ctx, "kneser", build_args, build_base, 0, build_format, build_out); }; });
  auto* b_fg = build->add_subcommand("from-graph", "Network with the given skeleton (h = 2)");
  b_fg->add_option("graph", build_base.graph, "UGraph JSON file")->required();
  b_fg->callback([&] { action = [&] { return cmd_build(ctx, "from-graph", {}, build_base, 0, build_format, build_out); }; });
  auto* b_ext = build->add_subcommand("extend", "Add source messages: h -> h'");
  build_base.attach(b_ext);
  b_ext->add_option("--h", build_param, "New message count h'")->required();
  b_ext->callback([&] { action = [&] { return cmd_build(ctx, "extend", {}, build_base, build_param, build_format, build_out); }; });
  NetSpec par_base;
  auto* b_par = build->add_subcommand("parallelize", "Replace every edge by m parallel copies");
  par_base.attach(b_par);
  b_par->add_option("--m", build_param, "Multiplicity")->required();
  b_par->callback([&] { action = [&] { return cmd_build(ctx, "parallelize", {}, par_base, build_param, build_format, build_out); }; });

  // skeleton
  NetSpec skel_net;
  std::string skel_format = "text";
  auto* skel = app.add_subcommand("skeleton", "Skeleton graph of a network");
  skel_net.attach(skel);
  skel->add_option("--format", skel_format, "text, dot or dimacs")->check(CLI::IsMember({"text", "dot", "dimacs"}));
  skel->callback([&] { action = [&] { return cmd_skeleton(ctx, skel_net, skel_format); }; });

  // chi
  NetSpec chi_net;
  std::vector<std::uint64_t> chi_qk, chi_hyper;
  std::string chi_graph;
  auto* chi = app.add_subcommand("chi", "Exact chromatic number with certificate");
  chi->add_option("--qkneser", chi_qk, "q-Kneser graph qK_{n:m}: Q N M")->expected(3);
  chi->add_option("--hyper", chi_hyper, "q-Kneser hypergraph qK^h_{ht:t}: Q T H")->expected(3);
  chi->add_option("--graph", chi_graph, "UGraph JSON file or qkneser:Q,N,M / complete:N");
  chi_net.attach(chi);
  chi->callback([&] { action = [&] { return cmd_chi(ctx, chi_qk, chi_hyper, chi_graph, chi_net); }; });

  // hom
  std::string hom_from, hom_to;
  auto* hom = app.add_subcommand("hom", "Graph homomorphism search");
  hom->add_option("--from", hom_from, "Graph: file, qkneser:Q,N,M or complete:N")->required();
  hom->add_option("--to", hom_to, "Graph: file, qkneser:Q,N,M or complete:N")->required();
  hom->callback([&] { action = [&] { return cmd_hom(ctx, hom_from, hom_to); }; });

  // coloring
  std::vector<std::uint64_t> col_qk;
  auto* col = app.add_subcommand("coloring", "Canonical coloring of a q-Kneser graph");
  col->add_option("--qkneser", col_qk, "Q N M")->expected(3)->required();
  col->callback([&] { action = [&] { return cmd_coloring(ctx, col_qk); }; });

  // solve
  NetSpec solve_net;
  std::uint64_t solve_q = 2;
  std::size_t solve_t = 1;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "Search for a (q,t)-linear solution");
  solve_net.attach(solve);
  solve->add_option("--q", solve_q, "Field size")->required();
  solve->add_option("--t", solve_t, "Vector length")->capture_default_str();
  solve->add_option("-o,--output", solve_out, "Write the code JSON here");
  solve->callback([&] { action = [&] { return cmd_solve(ctx, solve_net, solve_q, solve_t, solve_out); }; });

  // verify
  NetSpec verify_net;
  std::string verify_code;
  auto* verify = app.add_subcommand("verify", "Check a network code");
  verify_net.attach(verify);
  verify->add_option("--code,-c", verify_code, "NetworkCode JSON file")->required();
  verify->callback([&] { action = [&] { return cmd_verify(ctx, verify_net, verify_code); }; });

  // mds
  std::uint64_t mds_q = 2;
  std::size_t mds_r = 3, mds_h = 2, mds_s = 0;
  bool mds_ex = false;
  auto* mds = app.add_subcommand("mds", "MDS codes and combination networks");
  mds->add_option("--q", mds_q, "Alphabet / field size")->required();
  mds->add_option("--r", mds_r, "Code length")->required();
  mds->add_option("--h", mds_h, "Dimension")->required();
  mds->add_option("--s", mds_s, "Terminal fan-in (default h)");
  mds->add_flag("--exhaustive", mds_ex, "Search all codebooks of q^h words");
  mds->callback([&] { action = [&] { return cmd_mds(ctx, mds_q, mds_r, mds_h, mds_s, mds_ex); }; });

  // ic
  auto* ic = app.add_subcommand("ic", "Independent configurations");
  ic->require_subcommand(1);
  std::uint64_t ic_q = 2;
  std::size_t ic_t = 1, ic_size = 0;
  unsigned ic_h = 2, ic_alpha = 2;
  auto add_ic_params = [&](CLI::App* sc) {
    sc->add_option("--q", ic_q)->required();
    sc->add_option("--t", ic_t)->required();
    sc->add_option("--h", ic_h)->required();
    sc->add_option("--alpha", ic_alpha)->required();
  };
  auto* ic_search = ic->add_subcommand("search", "Largest IC, or one of a given size");
  add_ic_params(ic_search);
  ic_search->add_option("--size", ic_size, "Look for exactly this size");
  ic_search->callback([&] { action = [&] { return cmd_ic_search(ctx, ic_q, ic_t, ic_h, ic_alpha, ic_size); }; });
  auto* ic_bound = ic->add_subcommand("bound", "Upper bound on IC size");
  add_ic_params(ic_bound);
  ic_bound->callback([&] {
    action = [&] {
      ctx.put("bound", ic_size_bound(ic_q, ic_t, ic_h, ic_alpha));
      return kOk;
    };
  });
  std::vector<std::string> ic_files;
  auto* ic_check = ic->add_subcommand("check", "Validate IC certificates");
  ic_check->add_option("files", ic_files)->required();
  ic_check->callback([&] { action = [&] { return cmd_check(ctx, ic_files); }; });

  // psi
  std::string psi_arg;
  auto* psi_cmd = app.add_subcommand("psi", "Smallest prime power >= x (x may be a/b)");
  psi_cmd->add_option("x", psi_arg)->required();
  psi_cmd->callback([&] {
    action = [&] {
      ctx.put("psi", parse_psi_arg(psi_arg), std::to_string(parse_psi_arg(psi_arg)));
      return kOk;
    };
  });

  // qs / qv / gap
  std::string method = "auto";
  NetSpec qs_net, qv_net, gap_net;
  auto* qs = app.add_subcommand("qs", "Smallest scalar linear alphabet");
  qs_net.attach(qs);
  qs->add_option("--method", method, "auto, skeleton or exhaustive");
  qs->callback([&] { action = [&] { return cmd_alphabet(ctx, qs_net, method, true); }; });
  auto* qv = app.add_subcommand("qv", "Smallest vector linear alphabet");
  qv_net.attach(qv);
  qv->add_option("--method", method, "auto, skeleton or exhaustive");
  qv->callback([&] { action = [&] { return cmd_alphabet(ctx, qv_net, method, false); }; });
  std::string formula;
  FormulaParams fp;
  auto* gap = app.add_subcommand("gap", "q_s - q_v of a network, or a closed-form value");
  gap_net.attach(gap);
  gap->add_option("--method", method, "auto, skeleton or exhaustive");
  gap->add_option("--formula", formula, "kneser-h2, minimal-h2, kneser-t2, kneser-h3 or combination");
  gap->add_option("--q", fp.q, "Formula parameter q");
  gap->add_option("--t", fp.t, "Formula parameter t");
  gap->add_option("--h", fp.h, "Formula parameter h");
  gap->add_option("--r", fp.r, "Formula parameter r");
  gap->callback([&] {
    action = [&] { return formula.empty() ? cmd_gap(ctx, gap_net, method) : cmd_formula(ctx, formula, fp); };
  });

  // gap-table
  std::string table_q = "2,3", table_t = "1,2";
  auto* table = app.add_subcommand("gap-table", "CSV of gaps for K_{q,t;2}");
  table->add_option("--q", table_q, "Comma-separated field sizes")->capture_default_str();
  table->add_option("--t", table_t, "Comma-separated vector lengths")->capture_default_str();
  table->add_option("--method", method, "auto, skeleton or exhaustive");
  table->callback([&] {
    action = [&] { return cmd_gap_table(ctx, parse_numbers(table_q), parse_numbers(table_t), method); };
  });

  // check-cert
  std::vector<std::string> cert_files;
  auto* check = app.add_subcommand("check-cert", "Independently re-verify certificates");
  check->add_option("files", cert_files)->required();
  check->callback([&] { action = [&] { return cmd_check(ctx, cert_files); }; });

  // parent options (globals, build --format/-o) may follow a subcommand
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (CLI::App* s : a->get_subcommands([](CLI::App*) { return true; })) {
      s->fallthrough();
      fall(s);
    }
  };
  fall(&app);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }
  if (!action) return kUsage;
  try {
    int rc = action();
    ctx.finish();
    return rc;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitExceeded& e) {
    err << "limit: " << e.what() << '\n';
    return kBudget;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace ncgap::cli
