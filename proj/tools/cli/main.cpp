#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "checks.hpp"
#include "reeblab/abelian.hpp"
#include "reeblab/bounds.hpp"
#include "reeblab/catalog.hpp"
#include "reeblab/closure.hpp"
#include "reeblab/error.hpp"
#include "reeblab/handle_sim.hpp"
#include "reeblab/nielsen.hpp"
#include "reeblab/obstruction.hpp"
#include "reeblab/omega.hpp"
#include "reeblab/presentation.hpp"
#include "reeblab/reeb_graph.hpp"
#include "reeblab/word_parse.hpp"

namespace {

using nlohmann::json;
using namespace reeblab;

bool g_json = false;

void emit(const json& j, const std::string& text) {
  if (g_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// `path` when it names a file, the literal text otherwise.
std::string file_or_text(const std::string& arg) {
  std::error_code ec;
  return std::filesystem::is_regular_file(arg, ec) ? read_file(arg) : arg;
}

Alphabet alphabet_from(const std::string& gens) {
  std::vector<std::string> names;
  std::stringstream in(gens);
  for (std::string tok; std::getline(in, tok, ',');) {
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    if (!tok.empty()) names.push_back(tok);
  }
  return Alphabet(names);
}

std::vector<std::string> split_semicolons(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string tok; std::getline(in, tok, ';');)
    if (tok.find_first_not_of(' ') != std::string::npos) out.push_back(tok);
  return out;
}

json word_json(const Word& w, const Alphabet& a) { return to_string(w, a); }

json set_json(const std::set<std::size_t>& s, const Alphabet& a) {
  json j = json::array();
  for (auto g : s) j.push_back(a.name(g));
  return j;
}

// ---------------------------------------------------------------------------

struct WordOpts {
  std::string expr;
  std::string gens;
};

void cmd_word(const WordOpts& o) {
  Alphabet a = alphabet_from(o.gens);
  const Word w = parse_word(o.expr, a, o.gens.empty() ? UnknownGenerators::append : UnknownGenerators::reject);
  const auto cr = cyclic_reduce(w);
  std::ostringstream t;
  t << "reduced:    " << to_string(w, a) << "\n"
    << "length:     " << w.size() << "\n"
    << "conjugator: " << to_string(cr.conjugator, a) << "\n"
    << "core:       " << to_string(cr.core, a) << "\n"
    << "support:    {";
  bool first = true;
  for (auto g : support(w)) {
    t << (first ? "" : ", ") << a.name(g);
    first = false;
  }
  t << "}\n";
  emit({{"reduced", word_json(w, a)},
        {"length", w.size()},
        {"conjugator", word_json(cr.conjugator, a)},
        {"core", word_json(cr.core, a)},
        {"support", set_json(support(w), a)}},
       t.str());
}

struct OmegaOpts {
  std::string presentation;
  bool search = false;
  std::uint64_t budget = OmegaSearchOptions{}.budget;
  std::uint64_t seed = OmegaSearchOptions{}.seed;
};

void cmd_omega(const OmegaOpts& o) {
  const auto p = parse_presentation(file_or_text(o.presentation));
  if (!o.search) {
    const auto w = omega_fixed(p);
    emit({{"omega", w}, {"deficiency", deficiency(p)}}, std::to_string(w) + "\n");
    return;
  }
  OmegaSearchOptions so;
  so.budget = o.budget;
  so.seed = o.seed;
  const auto r = omega_search(p, so);
  const auto best = reorder(p, r.generator_order, r.relator_order);
  std::ostringstream t;
  t << r.omega << "\n"
    << (r.certified ? "certified minimum" : "budget-limited upper bound (lower bound " +
                                                std::to_string(r.lower_bound) + ")")
    << "\nwitness: " << to_string(best) << "\nsteps: " << r.steps << "  seed: " << r.seed << "\n";
  if (!r.note.empty()) t << r.note << "\n";
  emit({{"omega", r.omega},
        {"certified", r.certified},
        {"lower_bound", r.lower_bound},
        {"witness", to_string(best)},
        {"steps", r.steps},
        {"seed", r.seed},
        {"note", r.note}},
       t.str());
}

void cmd_abelianize(const std::string& text) {
  const auto p = parse_presentation(file_or_text(text));
  const auto a = abelianize(p);
  emit({{"free_rank", a.free_rank}, {"torsion", a.torsion}, {"text", to_string(a)}}, to_string(a) + "\n");
}

struct NielsenOpts {
  std::string tuple;
  std::string gens = "a,b";
};

void cmd_nielsen(const NielsenOpts& o) {
  const Alphabet a = alphabet_from(o.gens);
  const auto t = parse_tuple(o.tuple, a);
  const auto r = nielsen_reduce(t);
  const bool basis = t.entries.size() == a.size() && is_basis(t);
  json moves = json::array();
  std::ostringstream t_out;
  t_out << "reduced: " << to_string(r.reduced, a) << "\n";
  for (const auto& m : r.log) moves.push_back(to_string(m));
  t_out << "moves:   " << r.log.size() << "\n";
  if (t.entries.size() == a.size()) t_out << "basis:   " << (basis ? "yes" : "no") << "\n";
  emit({{"reduced", to_string(r.reduced, a)},
        {"moves", moves},
        {"basis", t.entries.size() == a.size() ? json(basis) : json(nullptr)}},
       t_out.str());
}

struct ClosureOpts {
  std::string relators;
  std::string target;
  std::string gens;
  std::size_t radius = 2;
  std::size_t factors = 3;
  std::size_t node_limit = 0;
  std::string probe;
  std::size_t samples = 1000;
  std::uint64_t seed = ProbeOptions{}.seed;
};

void cmd_closure(const ClosureOpts& o) {
  Alphabet a = alphabet_from(o.gens);
  const auto policy = o.gens.empty() ? UnknownGenerators::append : UnknownGenerators::reject;
  std::vector<Word> rels;
  for (const auto& r : split_semicolons(o.relators)) rels.push_back(parse_word(r, a, policy));
  if (rels.empty()) throw Error("at least one relator is required");

  if (!o.probe.empty()) {
    const auto g = a.find(o.probe);
    if (!g) throw Error("unknown generator '" + o.probe + "'");
    ProbeOptions po;
    po.rank = a.size();
    po.samples = o.samples;
    po.radius = o.radius;
    po.factors = o.factors;
    po.seed = o.seed;
    const auto rep = freiheitssatz_probe(rels.front(), *g, po);
    json ce = json::array();
    for (const auto& w : rep.counterexamples) ce.push_back(to_string(w, a));
    std::ostringstream t;
    t << "samples: " << rep.samples << "  trivial skipped: " << rep.trivial_skipped << "  seed: " << rep.seed
      << "\ncounterexamples: " << rep.counterexamples.size() << "\n";
    for (const auto& w : rep.counterexamples) t << "  " << to_string(w, a) << "\n";
    emit({{"samples", rep.samples}, {"trivial_skipped", rep.trivial_skipped}, {"seed", rep.seed},
          {"counterexamples", ce}},
         t.str());
    return;
  }

  ClosureQuery q{rels, parse_word(o.target, a, policy), o.radius, o.factors};
  if (o.node_limit)
    q.node_limit = o.node_limit;
  else if (const char* env = std::getenv("REEBLAB_NODE_LIMIT"))
    q.node_limit = std::stoull(env);
  const auto v = member_bounded(q);
  std::ostringstream t;
  t << to_string(v.status);
  if (v.status == ClosureVerdict::Status::not_member) t << " (" << to_string(v.certificate) << ")";
  t << "\n";
  if (v.status == ClosureVerdict::Status::member) t << "witness: " << to_string(v.witness, a) << "\n";
  t << "nodes: " << v.nodes << "\n";
  if (!v.note.empty()) t << v.note << "\n";
  emit({{"status", to_string(v.status)},
        {"certificate", to_string(v.certificate)},
        {"witness", v.status == ClosureVerdict::Status::member ? json(to_string(v.witness, a)) : json(nullptr)},
        {"nodes", v.nodes},
        {"node_limit", q.node_limit},
        {"note", v.note}},
       t.str());
}

json census_json(const RunResult& r) {
  return {{"k", r.k},
          {"beta1", cycle_rank(r.graph)},
          {"delta1", r.census.delta(1)},
          {"delta2", r.census.delta(2)},
          {"delta3", r.census.delta(3)}};
}

std::string graph_summary(const ReebGraph& g) {
  const auto c = degree_census(g);
  std::ostringstream t;
  t << "vertices: " << g.vertex_count() << "  edges: " << g.edge_count() << "\nk: ";
  for (int i = 0; i <= g.dim(); ++i) t << (i ? " " : "") << c.k(static_cast<std::size_t>(i));
  t << "\nbeta1: " << cycle_rank(g) << "  delta2: " << c.delta(2) << "  delta3: " << c.delta(3) << "\n";
  return t.str();
}

struct SimulateOpts {
  std::string builder;
  std::string script;
  std::string witness;
  int g = 1;
  int e = 1;
  int k1 = 1;
  int r = 0;
  std::uint64_t seed = 1;
  std::size_t max_events = 40;
  bool dot = false;
  bool print_script = false;
};

HandleSequence build_sequence(const SimulateOpts& o) {
  const int chosen = !o.builder.empty() + !o.script.empty() + !o.witness.empty();
  if (chosen != 1) throw CLI::ValidationError("simulate", "give exactly one of --builder, --script, --witness");
  if (!o.script.empty()) return parse_script(file_or_text(o.script));
  if (!o.witness.empty()) return build_witness(o.witness);
  if (o.builder == "ordered") return ordered(o.g);
  if (o.builder == "s2xs1") return s2xs1();
  if (o.builder == "circle-bundle") return circle_bundle_seq(o.g, o.e);
  if (o.builder == "canonical") return canonical_sequence(o.k1, o.r);
  if (o.builder == "random") return random_closed_sequence(o.seed, o.max_events);
  throw CLI::ValidationError("--builder", "unknown builder '" + o.builder + "'");
}

void cmd_simulate(const SimulateOpts& o) {
  const auto seq = build_sequence(o);
  const auto r = run(seq);
  if (o.dot) {
    std::cout << to_dot(r.graph);
    return;
  }
  if (o.print_script) {
    std::cout << to_script(seq);
    return;
  }
  std::ostringstream t;
  t << "events: " << seq.events.size() << "  closed: " << (r.closed ? "yes" : "no") << "\n";
  if (r.closed)
    t << graph_summary(r.graph);
  else
    t << "open level set: " << r.final_state.to_string() << "\n";
  json j{{"events", seq.events.size()}, {"closed", r.closed}};
  if (r.closed) {
    j.update(census_json(r));
    j["graph"] = json::parse(to_json(r.graph));
  } else {
    j["state"] = r.final_state.to_string();
  }
  emit(j, t.str());
}

ManifoldProfile load_profile(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return profile_from_json(read_file(arg));
  return catalog_profile(arg);
}

struct ReebOpts {
  std::string graph;
  std::string profile;
  bool canonical = false;
  bool reduce = false;
  bool dot = false;
  long chi = 0;
};

void cmd_reeb(const ReebOpts& o) {
  auto g = reeb_from_json(file_or_text(o.graph));
  if (o.reduce) g = reduce_extrema(g);
  if (o.canonical) g = canonical_form(g);
  if (o.dot) {
    std::cout << to_dot(g);
    return;
  }
  const long chi = o.profile.empty() ? o.chi : load_profile(o.profile).euler_char;
  const auto b = betti_identity_check(g);
  const bool parity = parity_check(g, chi);
  std::ostringstream t;
  t << graph_summary(g) << "cycle rank identity: " << (b.pass ? "pass" : "fail") << "\nparity (chi=" << chi
    << "): " << (parity ? "pass" : "fail") << "\n";
  json j{{"beta1", cycle_rank(g)},
         {"delta2", degree_census(g).delta(2)},
         {"delta3", degree_census(g).delta(3)},
         {"betti_identity", b.pass},
         {"parity", parity}};
  if (o.reduce || o.canonical) j["graph"] = json::parse(to_json(g));
  if (!o.profile.empty()) {
    const auto v = realization_obstruction(g, load_profile(o.profile));
    t << "realization: " << to_string(v.kind) << "\n";
    for (const auto& r : v.reasons) t << "  " << r << "\n";
    for (const auto& m : v.missing) t << "  missing " << m << "\n";
    j["realization"] = {{"verdict", to_string(v.kind)}, {"reasons", v.reasons}, {"missing", v.missing}};
  }
  emit(j, t.str());
}

json estimate_json(const Delta2Estimate& e) {
  json prov = json::array();
  for (const auto& p : e.provenance)
    prov.push_back({{"id", p.id}, {"value", p.value}, {"kind", p.upper ? "upper" : "lower"}, {"note", p.note}});
  return {{"lower", e.lower},
          {"upper", e.upper ? json(*e.upper) : json(nullptr)},
          {"exact", e.exact},
          {"provenance", prov},
          {"skipped", e.skipped}};
}

void cmd_bounds_estimate(const std::string& profile, const std::string& ring) {
  const auto p = load_profile(profile);
  const auto e = estimate(p, ring);
  auto j = estimate_json(e);
  j["profile"] = p.name;
  emit(j, p.name + "\n" + to_string(e));
}

void cmd_bounds_sum(const std::vector<std::string>& names) {
  if (names.size() < 2) throw CLI::ValidationError("sum", "needs at least two profiles");
  auto p = load_profile(names[0]);
  for (std::size_t i = 1; i < names.size(); ++i) p = connected_sum(p, load_profile(names[i]));
  const auto e = estimate(p);
  auto j = estimate_json(e);
  j["profile"] = json::parse(to_json(p));
  emit(j, p.name + "\n" + to_string(e));
}

void cmd_bounds_additivity() {
  const auto rows = additivity_experiment(catalog());
  json arr = json::array();
  std::ostringstream t;
  for (const auto& r : rows) {
    auto iv = [](const Delta2Estimate& e) {
      return "[" + std::to_string(e.lower) + "," + (e.upper ? std::to_string(*e.upper) : "?") + "]";
    };
    t << r.first << " # " << r.second << ": " << iv(r.a) << " + " << iv(r.b) << " vs " << iv(r.sum)
      << (r.additive_certified ? "  additive" : "") << "\n";
    arr.push_back({{"first", r.first},
                   {"second", r.second},
                   {"a", estimate_json(r.a)},
                   {"b", estimate_json(r.b)},
                   {"sum", estimate_json(r.sum)},
                   {"additive_certified", r.additive_certified}});
  }
  emit(arr, t.str());
}

void cmd_bounds_genus_gap() {
  json arr = json::array();
  std::ostringstream t;
  for (const auto& r : genus_gap_experiment(catalog())) {
    t << r.name << ": [" << r.low << ", " << (r.high ? std::to_string(*r.high) : "?") << "]\n";
    arr.push_back({{"name", r.name}, {"low", r.low}, {"high", r.high ? json(*r.high) : json(nullptr)}});
  }
  emit(arr, t.str());
}

void cmd_catalog(const std::string& show, bool patterns) {
  if (patterns) {
    std::ostringstream t;
    for (const auto& p : catalog_patterns()) t << p << "\n";
    emit(catalog_patterns(), t.str());
    return;
  }
  if (!show.empty()) {
    std::cout << to_json(load_profile(show)) << "\n";
    return;
  }
  json arr = json::array();
  std::ostringstream t;
  for (const auto& p : catalog()) {
    const auto e = estimate(p);
    t << p.name << "  dim " << p.dim << "  Delta_2 in [" << e.lower << ", "
      << (e.upper ? std::to_string(*e.upper) : "?") << "]" << (e.exact ? " exact" : "") << "\n";
    arr.push_back({{"name", p.name}, {"dim", p.dim}, {"estimate", estimate_json(e)}});
  }
  emit(arr, t.str());
}

int cmd_verify(bool acceptance_only) {
  std::vector<verify::Check> checks;
  if (!acceptance_only) checks = verify::reference_checks();
  for (auto& c : verify::acceptance_checks()) checks.push_back(std::move(c));
  std::size_t failed = 0;
  json arr = json::array();
  for (const auto& c : checks) {
    failed += !c.pass;
    arr.push_back({{"id", c.id}, {"title", c.title}, {"pass", c.pass}, {"detail", c.detail}, {"millis", c.millis}});
  }
  std::ostringstream t;
  t << verify::format_table(checks) << "\n"
    << checks.size() - failed << "/" << checks.size() << " checks passed\n";
  emit({{"checks", arr}, {"failed", failed}}, t.str());
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reeb graphs, handle sequences and Delta_2 bounds"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Machine-readable output");

  WordOpts wo;
  auto* word = app.add_subcommand("word", "Reduce a word and show its cyclic core and support");
  word->add_option("word", wo.expr, "Word, e.g. '[a,b] a^-1'")->required();
  word->add_option("--gens", wo.gens, "Comma-separated alphabet (default: order of appearance)");

  OmegaOpts oo;
  auto* omega = app.add_subcommand("omega", "Omega of a presentation");
  omega->add_option("--presentation,-p", oo.presentation, "'gens: ... ; rels: ...' or a file")->required();
  omega->add_flag("--search", oo.search, "Minimise over generator and relator orders");
  omega->add_option("--budget", oo.budget, "Exact search node budget");
  omega->add_option("--seed", oo.seed, "Seed for random restarts");

  std::string ab_text;
  auto* abel = app.add_subcommand("abelianize", "Abelian invariants of a presentation");
  abel->add_option("--presentation,-p", ab_text, "'gens: ... ; rels: ...' or a file")->required();

  NielsenOpts no;
  auto* niel = app.add_subcommand("nielsen", "Nielsen-reduce a tuple and test for a basis");
  niel->add_option("--tuple,-t", no.tuple, "Semicolon-separated words")->required();
  niel->add_option("--gens", no.gens, "Comma-separated alphabet")->capture_default_str();

  ClosureOpts co;
  auto* clos = app.add_subcommand("closure", "Bounded normal-closure membership or a Freiheitssatz probe");
  clos->add_option("--relators,-r", co.relators, "Semicolon-separated relators")->required();
  auto* target = clos->add_option("--target,-t", co.target, "Target word");
  clos->add_option("--gens", co.gens, "Comma-separated alphabet");
  clos->add_option("--radius", co.radius, "Conjugator length bound")->capture_default_str();
  clos->add_option("--factors", co.factors, "Maximum number of conjugate factors")->capture_default_str();
  clos->add_option("--node-limit", co.node_limit, "Search node limit (env REEBLAB_NODE_LIMIT)");
  auto* probe = clos->add_option("--probe", co.probe, "Probe the first relator for this generator");
  clos->add_option("--samples", co.samples, "Probe samples")->capture_default_str();
  clos->add_option("--seed", co.seed, "Probe seed")->capture_default_str();
  target->excludes(probe);

  SimulateOpts so;
  auto* sim = app.add_subcommand("simulate", "Replay a handle sequence and report its Reeb graph");
  sim->add_option("--builder", so.builder, "ordered | s2xs1 | circle-bundle | canonical | random");
  sim->add_option("--script", so.script, "Handle script text or file");
  sim->add_option("--witness", so.witness, "Builder spec such as 'ordered:2 # s2xs1'");
  sim->add_option("--g", so.g, "Genus")->capture_default_str();
  sim->add_option("--e", so.e, "Euler number")->capture_default_str();
  sim->add_option("--k1", so.k1, "1-handles for canonical")->capture_default_str();
  sim->add_option("--r", so.r, "Cycle rank for canonical")->capture_default_str();
  sim->add_option("--seed", so.seed, "Seed for random")->capture_default_str();
  sim->add_option("--max-events", so.max_events, "Length bound for random")->capture_default_str();
  sim->add_flag("--dot", so.dot, "Print the Reeb graph as DOT");
  sim->add_flag("--print-script", so.print_script, "Print the handle script");

  ReebOpts ro;
  auto* reeb = app.add_subcommand("reeb", "Analyse a Reeb graph given as JSON");
  reeb->add_option("--graph", ro.graph, "Graph JSON text or file")->required();
  reeb->add_option("--profile", ro.profile, "Profile file or catalog name for the obstruction test");
  reeb->add_option("--chi", ro.chi, "Euler characteristic when no profile is given")->capture_default_str();
  reeb->add_flag("--canonical", ro.canonical, "Apply the canonical form");
  reeb->add_flag("--reduce", ro.reduce, "Cancel extra extrema");
  reeb->add_flag("--dot", ro.dot, "Print the (transformed) graph as DOT");

  auto* bounds = app.add_subcommand("bounds", "Delta_2 bounds");
  bounds->require_subcommand(1);
  std::string be_profile, be_ring;
  auto* best = bounds->add_subcommand("estimate", "Estimate Delta_2 of one profile");
  best->add_option("--profile", be_profile, "Profile JSON file or catalog name")->required();
  best->add_option("--ring", be_ring, "Restrict the homology bound to one ring (Z, Q, F2, ...)");
  std::vector<std::string> sum_names;
  auto* bsum = bounds->add_subcommand("sum", "Estimate Delta_2 of a connected sum");
  bsum->add_option("profiles", sum_names, "Profile files or catalog names")->required();
  auto* badd = bounds->add_subcommand("additivity", "Connected-sum experiment over the catalog");
  auto* bgap = bounds->add_subcommand("genus-gap", "Delta_2/2 + corank - g over the catalog");

  std::string cat_show;
  bool cat_patterns = false;
  auto* cat = app.add_subcommand("catalog", "List built-in profiles");
  cat->add_option("--show", cat_show, "Print one profile as JSON");
  cat->add_flag("--patterns", cat_patterns, "List accepted names");

  bool acceptance_only = false;
  auto* ver = app.add_subcommand("verify-paper", "Run every reference example and acceptance check");
  ver->add_flag("--acceptance-only", acceptance_only, "Only the ten acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (word->parsed()) cmd_word(wo);
    if (omega->parsed()) cmd_omega(oo);
    if (abel->parsed()) cmd_abelianize(ab_text);
    if (niel->parsed()) cmd_nielsen(no);
    if (clos->parsed()) {
      if (co.target.empty() && co.probe.empty())
        throw CLI::ValidationError("closure", "give --target or --probe");
      cmd_closure(co);
    }
    if (sim->parsed()) cmd_simulate(so);
    if (reeb->parsed()) cmd_reeb(ro);
    if (best->parsed()) cmd_bounds_estimate(be_profile, be_ring);
    if (bsum->parsed()) cmd_bounds_sum(sum_names);
    if (badd->parsed()) cmd_bounds_additivity();
    if (bgap->parsed()) cmd_bounds_genus_gap();
    if (cat->parsed()) cmd_catalog(cat_show, cat_patterns);
    if (ver->parsed()) return cmd_verify(acceptance_only);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
