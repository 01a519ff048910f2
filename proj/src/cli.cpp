#include "dicut/cli.hpp"

#include "dicut/enumerate.hpp"
#include "dicut/families.hpp"
#include "dicut/hypergraph.hpp"
#include "dicut/io.hpp"
#include "dicut/oracle.hpp"
#include "dicut/reduce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace dicut {

using json = nlohmann::ordered_json;

std::string RunReport::text() const {
  if (!help.empty()) return help;
  return document.dump(2) + "\n";
}

namespace {

struct Options {
  std::string input = "-";
  std::size_t cap = kDefaultCap;
  std::string class_file;
  std::string kind = "dibonds";
  std::string name;
  int window = 5;
  int nmax = 0;
  std::string check;
  std::string set;
  std::string edge;
  std::string export_prefix;
  std::string format = "hypergraph";
  bool closure = false;
  std::uint64_t seed = 1;
  int count = 100;
};

struct Context {
  const Options& o;
  std::istream& in;
  std::string inputs;  // everything read, for the digest
  json results = json::object();
  bool refuted = false;

  std::string read(const std::string& path) {
    std::string text;
    if (path == "-") {
      std::ostringstream s;
      s << in.rdbuf();
      text = s.str();
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot read " + path);
      std::ostringstream s;
      s << f.rdbuf();
      text = s.str();
    }
    inputs += text;
    return text;
  }
};

// Edge labels made unique by an id suffix on parallel edges.
class Labels {
 public:
  explicit Labels(const Digraph& d) {
    std::map<std::pair<VertexId, VertexId>, int> mult;
    for (const Edge& e : d.edges()) ++mult[{e.tail, e.head}];
    for (EdgeId e = 0; e < d.num_edges(); ++e) {
      std::string l = d.edge_label(e);
      if (mult[{d.edge(e).tail, d.edge(e).head}] > 1) l += "#" + std::to_string(e);
      names_.push_back(std::move(l));
    }
  }
  json of(const EdgeSet& s) const {
    json a = json::array();
    s.for_each([&](EdgeId e) { a.push_back(names_[e]); });
    return a;
  }

 private:
  std::vector<std::string> names_;
};

json names_of(const Digraph& d, const VertexSet& s) {
  json a = json::array();
  s.for_each([&](VertexId v) { a.push_back(d.name(v)); });
  return a;
}

json dicut_json(const Digraph& d, const Labels& l, const Dicut& b) {
  return {{"in_shore", names_of(d, b.in_shore())}, {"edges", l.of(b.edges())}};
}

json family_json(const Digraph& d, const Labels& l, const std::vector<Dicut>& fam) {
  json a = json::array();
  for (const auto& b : fam) a.push_back(dicut_json(d, l, b));
  return a;
}

json pair_json(const Digraph& d, const Labels& l, const OptimalPair& p, const DibondClass& cls) {
  const PairVerdict v = verify_pair(d, p, cls);
  json j = {{"dijoin_size", p.dijoin.size()},
            {"family_size", p.family.size()},
            {"nested", p.nested},
            {"class", p.class_tag},
            {"verified", v.ok}};
  if (!v.ok) j["failed"] = v.failed;
  j["dijoin"] = l.of(p.dijoin);
  j["family"] = family_json(d, l, p.family);
  return j;
}

std::size_t crossing_pairs(const std::vector<Dicut>& fam) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (std::size_t j = i + 1; j < fam.size(); ++j)
      if (!nested(fam[i], fam[j])) ++c;
  return c;
}

Digraph load_digraph(Context& c) { return parse_digraph(c.read(c.o.input)); }

DibondClass load_class(Context& c, const Digraph& d) {
  if (c.o.class_file.empty()) return DibondClass::all(d, c.o.cap);
  return DibondClass::from_members(d, parse_class(d, c.read(c.o.class_file)), c.o.cap);
}

json class_json(const DibondClass& cls) {
  return {{"tag", cls.tag()}, {"size", cls.members.size()}, {"corner_closed", cls.corner_closed}};
}

void cmd_enumerate(Context& c) {
  const Digraph d = load_digraph(c);
  const Labels l(d);
  if (c.o.kind != "dicuts" && c.o.kind != "dibonds")
    throw std::invalid_argument("--kind is dicuts or dibonds");
  const auto list = c.o.kind == "dicuts" ? enumerate_dicuts(d, c.o.cap) : enumerate_dibonds(d, c.o.cap);
  c.results["vertices"] = d.num_vertices();
  c.results["edges"] = d.num_edges();
  c.results["kind"] = c.o.kind;
  c.results["count"] = list.size();
  c.results["members"] = family_json(d, l, list);
}

void cmd_solve(Context& c) {
  const Digraph d = load_digraph(c);
  const Labels l(d);
  const DibondClass cls = load_class(c, d);
  const bool claimed = cls.is_full || cls.corner_closed;
  c.results["class"] = class_json(cls);
  c.results["min_dijoin_size"] = min_dijoin(d, cls).size();
  c.results["packing"] = max_disjoint_dicuts(d, cls).size();
  try {
    c.results["optimal_pair"] = pair_json(d, l, optimal_pair(d, cls), cls);
  } catch (const DualityGapDetected& g) {
    c.results["optimal_pair"] = nullptr;
    c.results["duality_gap"] = {{"dijoin", g.dijoin_size()}, {"packing", g.packing_size()}};
    if (claimed) c.refuted = true;
    return;
  }
  try {
    c.results["nested_pair"] = pair_json(d, l, nested_optimal_pair(d, cls), cls);
  } catch (const Error& e) {
    if (claimed) throw;
    c.results["nested_pair"] = nullptr;
    c.results["nested_pair_error"] = e.what();
  }
}

void cmd_uncross(Context& c) {
  const Digraph d = load_digraph(c);
  const Labels l(d);
  const DibondClass cls = load_class(c, d);
  const OptimalPair p = optimal_pair(d, cls);
  const auto after = uncross(d, p.dijoin, p.family, !cls.is_full, cls.is_full ? nullptr : &cls);
  c.results["class"] = class_json(cls);
  c.results["dijoin"] = l.of(p.dijoin);
  c.results["crossing_before"] = crossing_pairs(p.family);
  c.results["crossing_after"] = crossing_pairs(after);
  c.results["family_before"] = family_json(d, l, p.family);
  c.results["family_after"] = family_json(d, l, after);
}

void cmd_quotient(Context& c) {
  const Digraph d = load_digraph(c);
  const Labels l(d);
  const bool by_all = c.o.class_file.empty();
  const auto cuts = by_all ? enumerate_dicuts(d, c.o.cap) : parse_class(d, c.read(c.o.class_file));
  const QuotientMap qm = equivalence_classes(d, cuts);
  json classes = json::array();
  for (const auto& cl : qm.classes) {
    json a = json::array();
    for (VertexId v : cl) a.push_back(d.name(v));
    classes.push_back(a);
  }
  c.results["generators"] = by_all ? "all dicuts" : "class file";
  c.results["class_count"] = qm.classes.size();
  c.results["classes"] = classes;
  json edges = json::array();
  for (EdgeId e = 0; e < qm.quotient.num_edges(); ++e) {
    const Edge& q = qm.quotient.edge(e);
    edges.push_back({qm.quotient.name(q.tail), qm.quotient.name(q.head),
                     l.of(EdgeSet::of(d.num_edges(), {qm.edge_provenance[e]}))[0]});
  }
  c.results["quotient_edges"] = edges;
  if (by_all) c.results["matches_condensation"] = qm.class_of == condensation(d).scc_of;
}

void cmd_blocks(Context& c) {
  const Digraph d = load_digraph(c);
  const Labels l(d);
  const BlockTree bt = block_cut_tree(d);
  json blocks = json::array();
  for (const auto& b : bt.blocks) blocks.push_back(l.of(b));
  json inc = json::array();
  for (auto [v, b] : bt.incidences) inc.push_back({d.name(v), b});
  c.results["blocks"] = blocks;
  c.results["cutvertices"] = names_of(d, bt.cutvertices);
  c.results["incidences"] = inc;
  const DibondClass cls = load_class(c, d);
  const OptimalPair merged = split_solve_merge(d, cls);
  const OptimalPair direct = nested_optimal_pair(d, cls);
  c.results["split_solve_merge"] = pair_json(d, l, merged, cls);
  c.results["direct_dijoin_size"] = direct.dijoin.size();
  if (merged.dijoin.size() != direct.dijoin.size()) c.refuted = true;
}

json names_json(const std::set<std::string>& s) { return json(std::vector<std::string>(s.begin(), s.end())); }

void cmd_family(Context& c) {
  const Options& o = c.o;
  const FamilySpec& spec = family_spec(o.name);
  const int top = o.nmax > 0 ? o.nmax : o.window;
  if (top < 1) throw std::invalid_argument("window sizes start at 1");
  const int bottom = o.nmax > 0 ? 1 : o.window;
  c.results["family"] = spec.name;
  c.results["check"] = o.check;
  auto need_set = [&] {
    if (o.set.empty()) throw std::invalid_argument("--check " + o.check + " needs --set");
  };
  std::optional<int> refuted_at;
  std::string claim;
  json windows = json::array();

  if (o.check == "growth") {
    if (o.edge.empty()) throw std::invalid_argument("--check growth needs --edge");
    claim = "dibonds holding " + o.edge + " never decrease";
    const auto counts = dibond_growth(spec, o.edge, top, o.cap);
    for (std::size_t i = 1; i < counts.size() && !refuted_at; ++i)
      if (counts[i] < counts[i - 1]) refuted_at = static_cast<int>(i + 1);
    c.results["counts"] = counts;
  } else if (o.check == "compactness") {
    claim = "some dijoin inside the fixed family stays valid at every level";
    const auto r = compactness_run(spec, top, std::nullopt, o.cap);
    c.results["status"] = to_string(r.status);
    c.results["stable_from"] = r.stable_from;
    c.results["packing"] = r.packing;
    c.results["nested_pair_size"] = r.nested_pair_size;
    c.results["consistent_choices"] = r.consistent_choices;
    json fam = json::array();
    for (const auto& b : r.family) fam.push_back(names_json(b));
    c.results["fixed_family"] = fam;
    c.results["stable_dijoin"] = r.stable_dijoin ? names_json(*r.stable_dijoin) : json(nullptr);
    if (r.status == CompactnessStatus::Unstable) refuted_at = r.unstable_at;
  } else {
    if (o.check == "no-finite-dicut") claim = "D.N_n is strongly connected";
    else if (o.check == "dibonds") claim = "";
    else if (o.check == "coherence") claim = "contract_to(D.N_n, N_m) matches D.N_m for every m < n";
    else if (o.check == "finitary") { need_set(); claim = o.set + " hits every finite dibond in the window"; }
    else if (o.check == "nested-extension") { need_set(); claim = o.set + " extends to a nested disjoint dibond selection"; }
    else if (o.check == "extension") { need_set(); claim = o.set + " extends to a disjoint dibond selection"; }
    else throw std::invalid_argument("unknown check " + o.check);

    for (int n = bottom; n <= top; ++n) {
      const FamilyWindow w = window(spec, n);
      const Labels l(w.digraph);
      json row = {{"n", n}, {"vertices", w.digraph.num_vertices()}, {"edges", w.digraph.num_edges()}};
      bool ok = true;
      if (o.check == "no-finite-dicut") {
        const int scc = condensation(w.digraph).count();
        row["scc_count"] = scc;
        ok = scc == 1;
      } else if (o.check == "dibonds") {
        row["dibonds"] = finite_dibonds_in_window(w, o.cap).size();
      } else if (o.check == "coherence") {
        for (int m = 1; m < n && ok; ++m) ok = window_coherent(spec, m, n);
        row["coherent"] = ok;
      } else if (o.check == "finitary") {
        const auto r = check_finitary_dijoin(w, o.set, o.cap);
        ok = r.hit_all;
        row["hit_all"] = r.hit_all;
        if (!ok) row["missed"] = family_json(w.digraph, l, r.missed);
      } else {
        const auto r = nested_extension_search(w, o.set, o.cap, o.check == "nested-extension");
        ok = r.found;
        row["found"] = r.found;
        row["candidates"] = r.candidates;
        row["unwitnessed"] = r.unwitnessed;
        json sel = json::array();
        for (const auto& [e, b] : r.selection) sel.push_back({{"edge", e}, {"dibond", dicut_json(w.digraph, l, b)}});
        row["selection"] = sel;
      }
      windows.push_back(row);
      if (!ok && !refuted_at) refuted_at = n;
    }
    c.results["windows"] = windows;
  }

  if (!o.export_prefix.empty()) {
    const FamilyWindow w = window(spec, top);
    std::ofstream(o.export_prefix + ".edges") << serialize_digraph(w.digraph);
    std::ofstream(o.export_prefix + ".classes") << serialize_class_map(w);
    c.results["exported"] = {o.export_prefix + ".edges", o.export_prefix + ".classes"};
  }
  if (claim.empty()) {
    c.results["evidence"] = "reported";
    return;
  }
  c.results["claim"] = claim;
  if (refuted_at) {
    c.results["evidence"] = "refuted at n=" + std::to_string(*refuted_at);
    c.refuted = true;
  } else {
    c.results["evidence"] = "supported up to n=" + std::to_string(top);
  }
}

json konig_json(const Hypergraph& h, const std::optional<KonigPair>& kp) {
  if (!kp) return nullptr;
  json m = json::array();
  for (std::size_t i : kp->matching) {
    json e = json::array();
    for (HyperVertex v : h.edge(i)) e.push_back(h.name(v));
    m.push_back(e);
  }
  json a = json::array();
  for (HyperVertex v : kp->cover) a.push_back(h.name(v));
  const PairVerdict v = verify_konig_pair(h, *kp);
  json j = {{"matching_size", kp->matching.size()}, {"matching", m}, {"cover", a}, {"verified", v.ok}};
  if (!v.ok) j["failed"] = v.failed;
  return j;
}

void cmd_hypergraph(Context& c) {
  const Options& o = c.o;
  Hypergraph h;
  bool claimed = true;
  std::optional<std::size_t> expected;
  std::function<void(const KonigPair&)> translate;
  Digraph d;
  DibondClass cls;
  if (o.format == "hypergraph") {
    h = parse_hypergraph(c.read(o.input));
    claimed = false;
  } else if (o.format == "digraph") {
    d = load_digraph(c);
    cls = load_class(c, d);
    if (o.closure) cls = corner_closure(d, cls, o.cap);
    claimed = cls.is_full || cls.corner_closed;
    c.results["class"] = class_json(cls);
    h = class_hypergraph(d, cls);
    expected = max_disjoint_dicuts(d, cls).size();
    translate = [&](const KonigPair& kp) {
      const PairVerdict v = verify_pair(d, pair_from_konig(d, cls, kp), cls);
      c.results["pair_verified"] = v.ok;
      if (!v.ok) c.refuted = true;
    };
  } else if (o.format == "menger") {
    const MengerInput mi = parse_menger(c.read(o.input));
    h = menger_hypergraph(mi.graph, mi.a, mi.b, o.cap);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : mi.graph.edges) edges.emplace_back(u, v);
    expected = oracle::max_disjoint_paths(static_cast<int>(mi.graph.num_vertices()), edges,
                                          {mi.a.begin(), mi.a.end()}, {mi.b.begin(), mi.b.end()});
  } else {
    throw std::invalid_argument("--format is hypergraph, digraph or menger");
  }
  c.results["vertices"] = h.num_vertices();
  c.results["hyperedges"] = h.num_edges();
  c.results["simple"] = h.is_simple();
  const auto kp = konig_property(h, o.cap);
  c.results["konig"] = konig_json(h, kp);
  if (expected) c.results["expected_matching_size"] = *expected;
  if (kp && translate) translate(*kp);
  if (claimed && (!kp || (expected && kp->matching.size() != *expected))) c.refuted = true;
  const FinParameterCheck f = fin_parameter_check(h);
  c.results["fin_parameter"] = {{"max_matching", f.max_matching},
                                {"min_cover", f.min_cover},
                                {"union_covers", f.union_covers},
                                {"ok", f.ok}};
}

oracle::Mask mask_of(const EdgeSet& s) {
  oracle::Mask m = 0;
  s.for_each([&](EdgeId e) { m |= oracle::Mask{1} << e; });
  return m;
}

oracle::Mask mask_of(const VertexSet& s) {
  oracle::Mask m = 0;
  s.for_each([&](VertexId v) { m |= oracle::Mask{1} << v; });
  return m;
}

struct Suite {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const Digraph& d) {
    ++cases;
    if (ok) return;
    if (!failures++) first_failure = serialize_digraph(d);
  }
  json to_json() const {
    return {{"cases", cases}, {"failures", failures},
            {"first_failure", failures ? json(first_failure) : json(nullptr)}};
  }
};

void cmd_selftest(Context& c) {
  std::map<std::string, Suite> suites;
  for (const auto& s : oracle::lucchesi_younger_corpus(c.o.seed, c.o.count)) {
    const Digraph d = oracle::digraph_of(s);
    const DibondClass all = DibondClass::all(d, c.o.cap);
    const std::size_t k = min_dijoin(d, all).size();
    const std::size_t p = max_disjoint_dicuts(d, all).size();
    suites["lucchesi_younger"].record(
        static_cast<int>(k) == oracle::min_dijoin_size(s) &&
            static_cast<int>(p) == oracle::max_disjoint_dicuts(s) && k == p,
        d);

    auto check_pair = [&](const OptimalPair& pr, bool nested_flag) {
      std::vector<oracle::Mask> shores;
      for (const auto& b : pr.family) shores.push_back(mask_of(b.in_shore()));
      return oracle::verify_pair(s, mask_of(pr.dijoin), shores, nested_flag, false).empty() &&
             pr.dijoin.size() == k;
    };
    suites["optimal_pair"].record(check_pair(optimal_pair(d, all), false), d);
    const OptimalPair np = nested_optimal_pair(d, all);
    suites["nested_pair"].record(np.nested && check_pair(np, true), d);

    std::vector<oracle::Mask> bonds;
    for (const auto& b : enumerate_dibonds(d, c.o.cap)) bonds.push_back(mask_of(b.edges()));
    std::sort(bonds.begin(), bonds.end());
    suites["dibonds"].record(bonds == oracle::dibond_edge_sets(s), d);

    bool decomp_ok = true;
    for (const auto& b : enumerate_dicuts(d, c.o.cap)) {
      std::vector<oracle::Mask> parts;
      for (const auto& part : decompose_dicut(d, b)) parts.push_back(mask_of(part.edges()));
      std::sort(parts.begin(), parts.end());
      const auto options = oracle::dibond_partitions(s, mask_of(b.edges()));
      if (!std::binary_search(options.begin(), options.end(), parts)) decomp_ok = false;
    }
    suites["decomposition"].record(decomp_ok, d);

    const QuotientMap qm = equivalence_classes(d, enumerate_dicuts(d, c.o.cap));
    suites["condensation"].record(qm.class_of == oracle::scc_labels(s), d);

    const auto kp = konig_property(dibond_hypergraph(d, c.o.cap), c.o.cap);
    suites["konig"].record(kp && kp->matching.size() == p, d);
  }
  json out = json::object();
  for (const auto& [name, s] : suites) {
    out[name] = s.to_json();
    if (s.failures) c.refuted = true;
  }
  c.results["seed"] = c.o.seed;
  c.results["random_count"] = c.o.count;
  c.results["suites"] = out;
}

std::string error_type(const std::exception& e) {
  if (dynamic_cast<const CapExceeded*>(&e)) return "CapExceeded";
  if (dynamic_cast<const PreconditionViolated*>(&e)) return "PreconditionViolated";
  if (dynamic_cast<const DualityGapDetected*>(&e)) return "DualityGapDetected";
  if (dynamic_cast<const NotCornerClosed*>(&e)) return "NotCornerClosed";
  if (dynamic_cast<const VerificationFailed*>(&e)) return "VerificationFailed";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "InvalidArgument";
  return "Error";
}

}  // namespace

RunReport run(const std::vector<std::string>& args, std::istream& in) {
  Options o;
  CLI::App app{"Directed cut duality toolkit", "dicut"};
  app.require_subcommand(1);
  auto input = [&](CLI::App* s) { s->add_option("input", o.input, "input file, - for stdin"); };
  auto cap = [&](CLI::App* s) { s->add_option("--cap", o.cap, "object cap for enumerations"); };
  auto klass = [&](CLI::App* s) {
    s->add_option("--class-file", o.class_file, "dibond class as one in-shore per line");
  };

  auto* en = app.add_subcommand("enumerate", "list dicuts or dibonds");
  input(en), cap(en);
  en->add_option("--kind", o.kind, "dicuts or dibonds");
  auto* so = app.add_subcommand("solve", "optimal and nested optimal pair");
  input(so), cap(so), klass(so);
  auto* un = app.add_subcommand("uncross", "uncross the family of an optimal pair");
  input(un), cap(un), klass(un);
  auto* qu = app.add_subcommand("quotient", "quotient by a cut family");
  input(qu), cap(qu), klass(qu);
  auto* bl = app.add_subcommand("blocks", "2-blocks and split-solve-merge");
  input(bl), cap(bl), klass(bl);
  auto* fa = app.add_subcommand("family", "window checks on the built-in infinite families");
  cap(fa);
  fa->add_option("--name", o.name, "family name")->required();
  fa->add_option("--window", o.window, "window index n");
  fa->add_option("--nmax", o.nmax, "sweep windows 1..nmax");
  fa->add_option("--check", o.check,
                 "no-finite-dicut, dibonds, coherence, finitary, nested-extension, extension, "
                 "growth or compactness")
      ->required();
  fa->add_option("--set", o.set, "named edge set");
  fa->add_option("--edge", o.edge, "symbolic edge name");
  fa->add_option("--export", o.export_prefix, "write PREFIX.edges and PREFIX.classes");
  auto* hy = app.add_subcommand("hypergraph", "König property");
  input(hy), cap(hy), klass(hy);
  hy->add_option("--format", o.format, "hypergraph, digraph or menger");
  hy->add_flag("--closure", o.closure, "use the corner closure of the class");
  auto* st = app.add_subcommand("selftest", "compare against brute-force oracles");
  cap(st);
  st->add_option("--seed", o.seed, "seed for the random corpus");
  st->add_option("--count", o.count, "random digraphs in the corpus");

  RunReport report;
  json& doc = report.document;
  std::string command = args.empty() ? "" : args.front();
  doc["command"] = command;
  doc["args"] = args;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    report.help = app.help();
    return report;
  } catch (const CLI::ParseError& e) {
    doc["status"] = "error";
    doc["error"] = {{"type", "UsageError"}, {"message", e.what()}};
    report.exit_code = 1;
    return report;
  }
  command = app.get_subcommands().front()->get_name();
  doc["command"] = command;

  Context c{o, in, {}};
  try {
    if (command == "enumerate") cmd_enumerate(c);
    else if (command == "solve") cmd_solve(c);
    else if (command == "uncross") cmd_uncross(c);
    else if (command == "quotient") cmd_quotient(c);
    else if (command == "blocks") cmd_blocks(c);
    else if (command == "family") cmd_family(c);
    else if (command == "hypergraph") cmd_hypergraph(c);
    else cmd_selftest(c);
  } catch (const std::exception& e) {
    doc["input_digest"] = digest(c.inputs);
    doc["status"] = "error";
    json err = {{"type", error_type(e)}, {"message", e.what()}};
    if (auto* pe = dynamic_cast<const ParseError*>(&e)) err["line"] = pe->line();
    doc["error"] = err;
    report.exit_code = 1;
    return report;
  }
  doc["input_digest"] = digest(c.inputs);
  doc["status"] = c.refuted ? "refuted" : "ok";
  doc["results"] = c.results;
  report.exit_code = c.refuted ? 2 : 0;
  return report;
}

}  // namespace dicut
