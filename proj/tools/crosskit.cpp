// crosskit command line: generate, validate, transform, verify, bound, search.
//
// Exit status: 0 when everything requested passed, 1 when a check or
// validation failed, 2 when the input could not be parsed or was rejected.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crosskit/crosskit.hpp"

using namespace crosskit;
using nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kDefaultSeed = 1;

// Codes that mean "the request itself was wrong" rather than "a check failed".
const std::set<std::string> kInputErrors{
    "PARSE_ERROR",  "SCHEMA_ERROR", "INVALID_PARTS", "UNKNOWN_VERTEX",   "DUPLICATE_LABEL", "UNKNOWN_EDGE",
    "NOT_A_NEIGHBOR", "INVALID_ARGUMENT", "ODD_P", "WRONG_PARITY", "WRONG_FAMILY", "UNSUPPORTED_SIZE",
    "BAD_INTERVAL", "ADJACENT_PAIR", "DUPLICATE_PAIR", "INVALID_LABEL", "INVALID_EDGE"};

std::uint64_t default_seed() {
  if (const char* s = std::getenv("CROSSKIT_SEED")) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(s, &used);
      if (used == std::string(s).size()) return v;
    } catch (const std::exception&) {
    }
    fail("PARSE_ERROR", std::string("CROSSKIT_SEED is not an unsigned integer: ") + s);
  }
  return kDefaultSeed;
}

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("PARSE_ERROR", "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("INVALID_ARGUMENT", "cannot write " + path);
  out << text;
}

std::string dump(const ordered_json& j) { return j.dump(1) + "\n"; }

Drawing load(const std::string& path) { return decode(slurp(path)); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, sep);) out.push_back(t);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::pair<i64, i64> parse_range(const std::string& s) {
  auto at = s.find("..");
  try {
    if (at == std::string::npos) {
      i64 v = std::stoll(s);
      return {v, v};
    }
    return {std::stoll(s.substr(0, at)), std::stoll(s.substr(at + 2))};
  } catch (const std::exception&) {
    fail("PARSE_ERROR", "bad range '" + s + "', expected a..b");
  }
}

// Runs fn(0..count-1) on up to `jobs` threads; results stay in index order.
template <class T>
std::vector<T> parallel_map(int count, int jobs, const std::function<T(int)>& fn) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errs(count);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i; (i = next++) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::max(1, jobs); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

// ---------------------------------------------------------------------------
// edge classes on the command line
//
//   all            every edge
//   star:v         edges at v
//   a,b/c,d        edges between {a,b} and {c,d}
//   OY, XZ, ...    K_{1,1,m,n} role classes (O, X, Y, Z)
//   t1+t2          union

EdgeClass parse_class(const Graph& g, const std::string& text) {
  EdgeClass acc{text, {}};
  for (auto& term : split(text, '+')) {
    EdgeClass c;
    if (term == "all") {
      c = all_edges(g);
    } else if (term.rfind("star:", 0) == 0) {
      c = star_class(g, g.index(term.substr(5)));
    } else if (auto slash = term.find('/'); slash != std::string::npos) {
      c = edge_class(g, vertex_ids(g, split(term.substr(0, slash), ',')), vertex_ids(g, split(term.substr(slash + 1), ',')));
    } else if (term.size() == 2 && std::string("OXYZ").find(term[0]) != std::string::npos &&
               std::string("OXYZ").find(term[1]) != std::string::npos) {
      auto r = k11mn_roles(g);
      auto role = [&](char ch) -> std::vector<int> {
        switch (ch) {
          case 'O': return {r.o};
          case 'X': return {r.x};
          case 'Y': return r.Y;
          default: return r.Z;
        }
      };
      c = edge_class(g, role(term[0]), role(term[1]));
    } else {
      fail("PARSE_ERROR", "cannot read edge class '" + term + "'");
    }
    acc = class_union(acc, c, text);
  }
  return acc;
}

// --part accepts a comma list, or one label standing for its whole part.
std::vector<Label> parse_part(const Graph& g, const std::string& text) {
  auto items = split(text, ',');
  if (items.size() != 1) return items;
  int v = g.index(items[0]);
  for (auto& part : g.parts())
    if (std::find(part.begin(), part.end(), v) != part.end()) {
      std::vector<Label> out;
      for (int u : part) out.push_back(g.label(u));
      return out;
    }
  return items;
}

// ---------------------------------------------------------------------------
// commands

struct Options {
  // gen
  std::string family, spec, out;
  int m = 0, n = 0;
  std::uint64_t seed = 0;
  // drawings in
  std::string file, cert_out;
  std::vector<std::string> classes;
  bool json = false;
  // transform
  std::string transform, vertex, part, first, x, y;
  int k = 0;
  // verify
  std::string what, source = "all", input;
  std::vector<std::string> graphs;
  int seeds = -1, jobs = 1;
  std::vector<std::string> assume;
  // bounds
  std::string m_range, n_range, format = "csv";
  // exact
  int max_k = 0;
  std::string check;
};

CrSource source_with(const std::vector<std::string>& assume) {
  CrSource s;
  for (auto& a : assume) {
    if (a == "zc") s.assume_zc = true;
    else if (a == "hc2mn") s.assume_hc2mn = true;
    else fail("PARSE_ERROR", "unknown assumption '" + a + "' (zc or hc2mn)");
  }
  return s;
}

int cmd_gen(const Options& o) {
  Drawing d;
  if (o.family == "zarankiewicz") d = zarankiewicz_drawing(o.m, o.n);
  else if (o.family == "cylinder") d = cylinder_k11mn(o.m, o.n);
  else d = random_geometric_drawing(parse_graph_spec(o.spec), o.seed);
  emit(encode(d), o.out);
  std::cerr << d.graph.spec() << ": " << crossings_total(d) << " crossings\n";
  return 0;
}

int cmd_validate(const Options& o) {
  auto rep = validate(load(o.file));
  if (o.json) {
    ordered_json j{{"valid", rep.ok()}, {"violations", ordered_json::array()}};
    for (auto& v : rep.violations) j["violations"].push_back({{"code", v.code}, {"detail", v.detail}});
    std::cout << dump(j);
  } else {
    std::cout << rep.summary() << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int cmd_count(const Options& o) {
  Drawing d = load(o.file);
  require_valid(d, o.file);
  if (o.classes.size() > 2) fail("INVALID_ARGUMENT", "count takes at most two --class options");
  long c = 0;
  if (o.classes.empty()) c = crossings_total(d);
  else if (o.classes.size() == 1) c = crossings_within(d, parse_class(d.graph, o.classes[0]));
  else c = crossings_between(d, parse_class(d.graph, o.classes[0]), parse_class(d.graph, o.classes[1]));
  std::cout << c << "\n";
  return 0;
}

int cmd_ledger(const Options& o) {
  Drawing d = load(o.file);
  require_valid(d, o.file);
  auto l = lemma2_decomposition(d);
  if (o.json) {
    ordered_json j{{"terms", ordered_json::array()}, {"sum", l.sum()}, {"total", l.total}};
    for (auto& t : l.terms) j["terms"].push_back({{"name", t.name}, {"value", t.value}});
    std::cout << dump(j);
  } else {
    for (auto& t : l.terms) std::cout << t.name << " = " << t.value << "\n";
    std::cout << "sum = " << l.sum() << ", total = " << l.total << "\n";
  }
  return 0;
}

int cmd_transform(const Options& o) {
  Drawing d = load(o.file);
  auto U = parse_part(d.graph, o.part);
  auto ctx = lemma1_context(d, o.vertex, U, o.k, o.first.empty() ? std::nullopt : std::optional<Label>(o.first));
  auto res = o.transform == "lemma1-d1" ? lemma1_d1(ctx, o.x) : lemma1_d2(ctx, o.x, o.y);
  emit(encode(res.drawing), o.out);
  if (!o.cert_out.empty()) emit(dump(res.cert.to_json()), o.cert_out);
  std::cerr << o.transform << ": " << crossings_total(d) << " -> " << crossings_total(res.drawing) << " crossings, certificate "
            << (res.cert.passed() ? "pass" : "FAIL") << "\n";
  for (auto& f : res.cert.failures()) std::cerr << "  " << f << "\n";
  return res.cert.passed() ? 0 : 1;
}

// One drawing to run a check on.
struct Sample {
  std::string name;
  std::function<Drawing()> make;
};

std::vector<Sample> samples_for(const Options& o, const std::vector<Graph>& graphs, bool with_cylinder, int default_seeds) {
  std::vector<Sample> out;
  if (!o.input.empty()) {
    out.push_back({o.input, [path = o.input] { return load(path); }});
    return out;
  }
  if (o.source != "all" && o.source != "cylinder" && o.source != "random")
    fail("PARSE_ERROR", "--source must be cylinder, random or all");
  if (with_cylinder && o.source != "random") {
    int m = o.m, n = o.n;
    out.push_back({"cylinder(" + std::to_string(m) + "," + std::to_string(n) + ")", [m, n] { return cylinder_k11mn(m, n); }});
  }
  if (o.source != "cylinder") {
    const int s = o.seeds >= 0 ? o.seeds : default_seeds;
    for (int i = 0; i < s; ++i) {
      std::uint64_t seed = o.seed + i;
      const Graph& g = graphs[i % graphs.size()];
      out.push_back({g.spec() + " seed " + std::to_string(seed), [g, seed] { return random_geometric_drawing(g, seed); }});
    }
  }
  return out;
}

int cmd_verify_theorem(const Options& opt) {
  const int thm = opt.what[3] - '0';
  Options o = opt;
  if (!o.m) o.m = thm == 1 ? 4 : thm == 2 ? 3 : 4;
  if (!o.n) o.n = thm == 1 ? 4 : 3;
  auto src = source_with(o.assume);
  auto samples = samples_for(o, {complete_multipartite({1, 1, o.m, o.n})}, true, 25);
  auto certs = parallel_map<PipelineCertificate>(static_cast<int>(samples.size()), o.jobs, [&](int i) {
    Drawing d = samples[i].make();
    auto r = thm == 1 ? thm1_pipeline(d, src) : thm == 2 ? thm2_pipeline(d, src) : thm3_pipeline(d, src);
    return r.cert;
  });
  int failed = 0;
  ordered_json all = ordered_json::array();
  for (std::size_t i = 0; i < certs.size(); ++i) {
    auto& c = certs[i];
    failed += !c.passed();
    std::cout << o.what << " " << samples[i].name << ": " << (c.passed() ? "pass" : "FAIL") << ", "
              << c.equalities.size() << " equalities";
    if (c.bound) std::cout << ", bound " << *c.bound;
    std::cout << "\n";
    for (auto& f : c.failures()) std::cout << "  " << f << "\n";
    auto j = c.to_json();
    j["drawing"] = samples[i].name;
    all.push_back(j);
  }
  std::cout << o.what << ": " << certs.size() - failed << "/" << certs.size() << " certificates pass\n";
  if (!o.cert_out.empty()) emit(dump(all), o.cert_out);
  return failed ? 1 : 0;
}

int cmd_verify_lemma1(const Options& o) {
  std::vector<Graph> graphs;
  for (auto& s : o.graphs) graphs.push_back(parse_graph_spec(s));
  if (graphs.empty() && o.m && o.n) graphs.push_back(complete_multipartite({1, 1, o.m, o.n}));
  if (graphs.empty())
    for (auto s : {"K=1,4", "K=2,3,2", "K=1,1,2,2", "K=1,1,3,3"}) graphs.push_back(parse_graph_spec(s));
  auto samples = samples_for(o, graphs, false, 100);
  auto runs = parallel_map<std::vector<Lemma1Run>>(static_cast<int>(samples.size()), o.jobs,
                                                   [&](int i) { return lemma1_sweep(samples[i].make()); });
  long total = 0, bad = 0;
  for (std::size_t i = 0; i < runs.size(); ++i)
    for (auto& r : runs[i]) {
      ++total;
      if (r.ok()) continue;
      ++bad;
      std::cout << samples[i].name << " v=" << r.v << " k=" << r.k << ": "
                << (r.error.empty() ? std::string(r.d1 ? "d2 certificate failed" : "d1 certificate failed") : r.error) << "\n";
    }
  std::cout << "lemma1: " << total - bad << "/" << total << " (v,U,k) choices pass over " << samples.size()
            << " drawings\n";
  return bad ? 1 : 0;
}

int cmd_verify_lemma2(const Options& o) {
  std::vector<Graph> graphs;
  if (o.m && o.n) graphs.push_back(complete_multipartite({1, 1, o.m, o.n}));
  else
    for (int m = 1; m <= 4; ++m)
      for (int n = 1; n <= 4; ++n) graphs.push_back(complete_multipartite({1, 1, m, n}));
  auto samples = samples_for(o, graphs, false, 100);
  auto res = parallel_map<std::string>(static_cast<int>(samples.size()), o.jobs, [&](int i) -> std::string {
    try {
      auto l = lemma2_decomposition(samples[i].make());
      return l.sum() == l.total ? "" : "sum differs";
    } catch (const Error& e) {
      if (e.code() != "LEDGER_MISMATCH") throw;
      return e.what();
    }
  });
  int bad = 0;
  for (std::size_t i = 0; i < res.size(); ++i)
    if (!res[i].empty()) ++bad, std::cout << samples[i].name << ": " << res[i] << "\n";
  std::cout << "lemma2: " << res.size() - bad << "/" << res.size() << " ledgers balance\n";
  return bad ? 1 : 0;
}

int cmd_verify_lemma3(const Options& opt) {
  Options o = opt;
  if (!o.m) o.m = 3;
  if (!o.n) o.n = 3;
  auto src = source_with(o.assume);
  auto cr = src.lookup({2, o.m, o.n});
  if (!cr) fail("MISSING_VALUE", "no value for cr(K_{2," + std::to_string(o.m) + "," + std::to_string(o.n) + "}); try --assume hc2mn");
  auto samples = samples_for(o, {complete_multipartite({1, 1, o.m, o.n})}, o.m >= 2 && o.n >= 2, 25);
  auto reps = parallel_map<Lemma3Report>(static_cast<int>(samples.size()), o.jobs,
                                         [&](int i) { return lemma3_check(samples[i].make(), cr->value); });
  int bad = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto& r = reps[i];
    bool ok = r.holds && r.identity;
    bad += !ok;
    std::cout << samples[i].name << ": cr(E(O,X), rest) = " << r.against_rest << " <= " << r.limit << " (slack "
              << r.slack() << ")" << (ok ? "" : "  FAIL") << "\n";
  }
  std::cout << "lemma3: " << reps.size() - bad << "/" << reps.size() << " drawings pass, cr(K_{2,m,n}) = " << cr->value
            << " from " << cr->provenance << "\n";
  return bad ? 1 : 0;
}

int cmd_verify(const Options& o) {
  if (o.what.rfind("thm", 0) == 0) return cmd_verify_theorem(o);
  if (o.what == "lemma1") return cmd_verify_lemma1(o);
  if (o.what == "lemma2") return cmd_verify_lemma2(o);
  return cmd_verify_lemma3(o);
}

int cmd_bounds(const Options& o) {
  Assumptions as;
  auto src = source_with(o.assume);
  as.zc = src.assume_zc;
  as.hc2mn = src.assume_hc2mn;
  auto mr = parse_range(o.m_range), nr = parse_range(o.n_range);
  if (mr.first < 1 || nr.first < 1 || mr.first > mr.second || nr.first > nr.second)
    fail("INVALID_ARGUMENT", "ranges must satisfy 1 <= a <= b");
  auto rs = status_report(mr, nr, as);
  if (o.format == "json") std::cout << dump(report_json(rs));
  else if (o.format == "csv") std::cout << report_csv(rs);
  else fail("PARSE_ERROR", "--format must be csv or json");
  return 0;
}

int cmd_exact(const Options& o) {
  Graph g = parse_graph_spec(o.spec);
  if (!o.check.empty()) {
    auto j = nlohmann::json::parse(slurp(o.check), nullptr, false);
    // either a bare witness or the full output of a previous search
    if (j.is_object() && j.contains("witness")) j = j["witness"];
    auto w = witness_from_json(j);
    check_selection(g, w);
    bool ok = verify_witness(g, w);
    std::cout << "witness with " << w.pairs.size() << " crossings: " << (ok ? "planar" : "NOT planar") << "\n";
    return ok ? 0 : 1;
  }
  auto r = exact_crossing_number(g, o.max_k, o.jobs);
  ordered_json j{{"graph", g.spec()}, {"exact", r.exact}};
  if (r.exact) j["value"] = r.value;
  else j["at_least"] = r.at_least;
  bool reverified = r.witness && verify_witness(g, *r.witness);
  j["witness"] = r.witness ? witness_json(*r.witness) : ordered_json();
  if (r.witness) j["witness_verified"] = reverified;
  emit(dump(j), o.out);
  std::cerr << r.planarity_tests << " planarity tests\n";
  if (!r.exact) {
    std::cerr << "BUDGET_EXCEEDED: cr(" << g.spec() << ") > " << o.max_k << "\n";
    return 1;
  }
  return reverified ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crosskit: drawings and crossing numbers of complete multipartite graphs"};
  app.require_subcommand(1);
  Options o;
  try {
    o.seed = default_seed();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  const std::string seed_help = "random seed (default " + std::to_string(kDefaultSeed) + ", or CROSSKIT_SEED)";
  std::function<int()> run;

  auto* gen = app.add_subcommand("gen", "generate a drawing");
  gen->require_subcommand(1);
  for (auto fam : {"zarankiewicz", "cylinder"}) {
    auto* s = gen->add_subcommand(fam, std::string(fam) == "cylinder" ? "K_{1,1,m,n} cylinder drawing" : "K_{m,n} on two axes");
    s->add_option("m", o.m)->required();
    s->add_option("n", o.n)->required();
    s->add_option("-o,--out", o.out, "output file (default stdout)");
    s->callback([&, fam] { o.family = fam, run = [&] { return cmd_gen(o); }; });
  }
  {
    auto* s = gen->add_subcommand("random", "straight-line drawing on random lattice points");
    s->add_option("spec", o.spec, "graph, e.g. K=1,1,3,3")->required();
    s->add_option("--seed", o.seed, seed_help);
    s->add_option("-o,--out", o.out, "output file (default stdout)");
    s->callback([&] { o.family = "random", run = [&] { return cmd_gen(o); }; });
  }

  auto* val = app.add_subcommand("validate", "check that a drawing is good");
  val->add_option("file", o.file)->required();
  val->add_flag("--json", o.json);
  val->callback([&] { run = [&] { return cmd_validate(o); }; });

  auto* cnt = app.add_subcommand("count", "count crossings, optionally within one class or between two");
  cnt->add_option("file", o.file)->required();
  cnt->add_option("--class", o.classes, "all, star:v, a,b/c,d, or a role pair such as OY; join with +");
  cnt->callback([&] { run = [&] { return cmd_count(o); }; });

  auto* led = app.add_subcommand("ledger", "seven-term crossing ledger of a K_{1,1,m,n} drawing");
  led->add_option("file", o.file)->required();
  led->add_flag("--json", o.json);
  led->callback([&] { run = [&] { return cmd_ledger(o); }; });

  auto* tr = app.add_subcommand("transform", "split a vertex of a drawing");
  tr->add_option("kind", o.transform)->required()->check(CLI::IsMember({"lemma1-d1", "lemma1-d2"}));
  tr->add_option("file", o.file)->required();
  tr->add_option("--vertex", o.vertex)->required();
  tr->add_option("--part", o.part, "comma list of neighbors, or one label for its whole part")->required();
  tr->add_option("--k", o.k, "index into U in rotation order");
  tr->add_option("--first", o.first, "member of U to count from (default: first in the stored rotation)");
  tr->add_option("--x", o.x, "label of the new vertex");
  tr->add_option("--y", o.y, "label of the second new vertex (lemma1-d2)");
  tr->add_option("-o,--out", o.out, "output drawing (default stdout)");
  tr->add_option("--cert", o.cert_out, "write the certificate here");
  tr->callback([&] { run = [&] { return cmd_transform(o); }; });

  auto* ver = app.add_subcommand("verify", "run certificates over many drawings");
  ver->add_option("what", o.what)->required()->check(CLI::IsMember({"thm1", "thm2", "thm3", "lemma1", "lemma2", "lemma3"}));
  ver->add_option("--m", o.m);
  ver->add_option("--n", o.n);
  ver->add_option("--seeds", o.seeds, "number of random drawings");
  ver->add_option("--seed", o.seed, "first " + seed_help);
  ver->add_option("--source", o.source, "cylinder, random or all");
  ver->add_option("--input", o.input, "check this drawing only");
  ver->add_option("--graph", o.graphs, "graph spec for lemma1 (repeatable)");
  ver->add_option("--assume", o.assume, "zc or hc2mn");
  ver->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  ver->add_option("--cert", o.cert_out, "write all certificates here");
  ver->callback([&] { run = [&] { return cmd_verify(o); }; });

  auto* bnd = app.add_subcommand("bounds", "lower and upper bounds for cr(K_{1,1,m,n})");
  bnd->add_option("--m-range", o.m_range)->required();
  bnd->add_option("--n-range", o.n_range)->required();
  bnd->add_option("--assume", o.assume, "zc or hc2mn");
  bnd->add_option("--format", o.format, "csv or json");
  bnd->callback([&] { run = [&] { return cmd_bounds(o); }; });

  auto* ex = app.add_subcommand("exact", "exact crossing number by search");
  ex->add_option("spec", o.spec)->required();
  ex->add_option("--max-k", o.max_k, "give up above this many crossings");
  ex->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  ex->add_option("--check", o.check, "re-verify a witness file instead of searching");
  ex->add_option("-o,--out", o.out, "output file (default stdout)");
  ex->callback([&] { run = [&] { return cmd_exact(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInputErrors.count(e.code()) ? 2 : 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "PARSE_ERROR: " << e.what() << "\n";
    return 2;
  }
}
