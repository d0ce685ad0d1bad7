#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "zs/zs.hpp"

using namespace zs;

namespace {

struct Opts {
  std::string group, subset, element, atom, format = "text", cache, suite;
  int max_len = 0, kcap = 0, bound = 0, threads = 1, max_factors = 4;
  long long n = 0, a = 0, from = 5, to = 2000;
  bool full = false;
  std::vector<int> ns;
  std::uint64_t seed = SuiteParams{}.seed;
  int samples = 0;
  int suite_kcap = 12;
};

std::vector<int> subset_or_all(const GroupPtr& g, const std::string& text) {
  if (!text.empty()) return parse_subset(*g, text);
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

json subset_json(const Group& G, const std::vector<int>& s) {
  json j = json::array();
  for (int e : s) j.push_back(G.format(e));
  return j;
}

json seq_list(const GroupPtr& g, const std::vector<Counts>& v) {
  json j = json::array();
  for (const auto& c : v) j.push_back(Sequence(g, c).str());
  return j;
}

std::string cmd_atoms(const Opts& o) {
  auto g = parse_group(o.group);
  auto sub = subset_or_all(g, o.subset);
  int len = o.max_len > 0 ? o.max_len : generated_subgroup(*g, sub).order();
  AtomSet atoms = enumerate_atoms(g, sub, len);
  auto r = make_report("atoms", seq_list(g, atoms.atoms), "oracle", len);
  r.inputs = {{"group", o.group}, {"subset", subset_json(*g, sub)}};
  r.extra = {{"count", atoms.atoms.size()}, {"certified_complete", atoms.certified_complete}};
  return emit(r, parse_format(o.format));
}

std::string cmd_davenport(const Opts& o) {
  auto g = parse_group(o.group);
  auto sub = subset_or_all(g, o.subset);
  Davenport d = davenport_constants(g, sub);
  auto r = make_report("davenport", {{"D", d.D}, {"d", d.d}, {"K", format_rational(d.K)}}, "oracle");
  r.inputs = {{"group", o.group}, {"subset", subset_json(*g, sub)}};
  return emit(r, parse_format(o.format));
}

std::string cmd_lengths(const Opts& o) {
  auto g = parse_group(o.group);
  Sequence s = Sequence::parse(g, o.element);
  Factorizer f(atoms_for(s));
  auto info = length_set_info(lengths_of(f.lengths(s.counts())));
  require(!info.L.empty(), "invalid-argument", "element is not product-one");
  auto r = make_report("lengths", info.L, "oracle");
  r.inputs = {{"group", o.group}, {"element", s.str()}};
  r.extra = {{"delta", info.delta}, {"rho", format_rational(info.rho)}};
  return emit(r, parse_format(o.format));
}

std::string cmd_catenary(const Opts& o) {
  auto g = parse_group(o.group);
  Sequence s = Sequence::parse(g, o.element);
  AtomSet atoms = atoms_for(s);
  Factorizer f(atoms);
  auto z = f.factorizations(s.counts());
  require(!z.empty(), "invalid-argument", "element is not product-one");
  auto r = make_report("catenary", catenary_degree(z), "oracle");
  r.inputs = {{"group", o.group}, {"element", s.str()}};
  r.extra = {{"factorizations", z.size()}};
  return emit(r, parse_format(o.format));
}

std::string cmd_omega(const Opts& o) {
  auto g = parse_group(o.group);
  Sequence u = Sequence::parse(g, o.atom);
  require(is_atom(u), "invalid-argument", "not an atom: " + u.str());
  std::vector<int> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  int kcap = o.kcap > 0 ? o.kcap : 2 * atoms_over(g, all).max_length();
  OmegaSearch search(g, kcap);
  OmegaResult res = search.exhaustive(u.counts());
  InvariantReport r;
  r.name = "omega";
  r.method = res.exact() ? "oracle" : "bounded-search";
  r.bound = kcap;
  r.value = res.exact() ? json(res.lower) : json{{"lo", res.lower}, {"hi", nullptr}};
  r.inputs = {{"group", o.group}, {"atom", u.str()}};
  r.extra = {{"exhaustive", res.exhaustive}, {"witness", seq_list(g, res.witness)}};
  if (!res.note.empty()) r.extra["note"] = res.note;
  return emit(r, parse_format(o.format));
}

std::string cmd_mindist(const Opts& o) {
  auto g = parse_group(o.group);
  auto sub = subset_or_all(g, o.subset);
  auto r = make_report("min_delta", min_delta_exact(g, sub).value, "formula");
  r.inputs = {{"group", o.group}, {"subset", subset_json(*g, sub)}};
  if (g->is_cyclic()) {
    CyclicMinDelta c = min_delta_cyclic_exact(g, sub);
    r.extra["g_norm"] = {{"value", c.value}, {"method", c.method}};
    if (!c.warning.empty()) r.extra["warning"] = c.warning;
  }
  if (o.bound > 0) {
    BoundedMinDelta b = min_delta_bounded(g, sub, o.bound);
    r.bound = o.bound;
    r.extra["bounded"] = {{"value", b.value}, {"distances", b.distances}};
  }
  return emit(r, parse_format(o.format));
}

std::string cmd_cfpair(const Opts& o) {
  auto cf = continued_fraction_odd(o.n, o.a);
  auto r = make_report("min_delta_pair", min_delta_pair(o.n, o.a), "formula");
  r.inputs = {{"n", o.n}, {"a", o.a}};
  r.extra = {{"terms", cf.terms}};
  return emit(r, parse_format(o.format));
}

std::string cmd_sweep(const Opts& o) {
  long long to = o.full ? 10000 : o.to;
  return emit(sweep_remark68(o.from, to, o.threads), parse_format(o.format));
}

std::string cmd_deltastar(const Opts& o) {
  auto g = parse_group(o.group);
  DeltaStar d = delta_star_sets(g, o.max_factors);
  auto r = make_report("delta_star", std::vector<long long>(d.delta_star.begin(), d.delta_star.end()), "formula");
  r.inputs = {{"group", o.group}, {"max_factors", o.max_factors}};
  r.extra = {{"delta_star_rho", std::vector<long long>(d.delta_star_rho.begin(), d.delta_star_rho.end())}};
  return emit(r, parse_format(o.format));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-sum sequences over small groups: atoms, lengths, invariants, verification suites"};
  app.require_subcommand(1);
  app.fallthrough();
  Opts o;
  app.add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--threads", o.threads, "worker threads (sweep)")->check(CLI::PositiveNumber);
  app.add_option("--cache", o.cache, "content-addressed report cache directory");

  auto group_arg = [&](CLI::App* s) { s->add_option("group", o.group, "D<2n>, C<n> or table:<path>")->required(); };

  auto* atoms = app.add_subcommand("atoms", "enumerate atoms over a subset");
  group_arg(atoms);
  atoms->add_option("--subset", o.subset, "elements, e.g. \"a t a*t\"");
  atoms->add_option("--max-len", o.max_len, "length cap (default |<G0>|)");

  auto* dav = app.add_subcommand("davenport", "D, d and K");
  group_arg(dav);
  dav->add_option("--subset", o.subset);

  auto* len = app.add_subcommand("lengths", "set of lengths");
  group_arg(len);
  len->add_option("--element", o.element, "sequence, e.g. \"t:3 a*t:3\"")->required();

  auto* cat = app.add_subcommand("catenary", "catenary degree");
  group_arg(cat);
  cat->add_option("--element", o.element)->required();

  auto* om = app.add_subcommand("omega", "omega of an atom");
  group_arg(om);
  om->add_option("--atom", o.atom)->required();
  om->add_option("--kcap", o.kcap, "cover size cap (default 2 D(G))");

  auto* md = app.add_subcommand("mindist", "min Delta of a subset");
  group_arg(md);
  md->add_option("--subset", o.subset);
  md->add_option("--bound", o.bound, "also run a bounded search up to this length");

  auto* cf = app.add_subcommand("cfpair", "min Delta({g, g^a}) in C_n by continued fractions");
  cf->add_option("--n", o.n)->required();
  cf->add_option("--a", o.a)->required();

  auto* sw = app.add_subcommand("sweep", "classify odd n by conditions (eq) and (*)");
  sw->add_option("--from", o.from);
  sw->add_option("--to", o.to);
  sw->add_flag("--full", o.full, "sweep up to 10000");

  auto* ds = app.add_subcommand("deltastar", "Delta* and Delta*_rho");
  group_arg(ds);
  ds->add_option("--max-factors", o.max_factors, "products of up to this many maximal atoms for Delta*_rho")
      ->check(CLI::Range(1, 8));

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("--suite", o.suite)->required();
  ver->add_option("--n", o.ns, "override the suite's n values")->delimiter(',');
  ver->add_option("--from", o.from);
  ver->add_option("--to", o.to);
  ver->add_option("--seed", o.seed);
  ver->add_option("--samples", o.samples);
  ver->add_option("--kcap", o.suite_kcap);

  CLI11_PARSE(app, argc, argv);

  // canonical key: every option that changes the output
  std::string key = app.get_subcommands().front()->get_name() + "\n" + app.config_to_str(true, false);
  {
    std::istringstream in(key);
    std::string line, kept;
    while (std::getline(in, line))
      if (line.rfind("cache", 0) != 0 && line.rfind("threads", 0) != 0) kept += line + "\n";
    key = kept;
  }
  ReportCache cache(o.cache);

  try {
    if (auto hit = cache.get(key)) {
      const std::string& body = *hit;
      int code = body.size() >= 2 && body.compare(0, 2, "1\n") == 0 ? 1 : 0;
      std::cout << body.substr(2);
      return code;
    }
    std::string out;
    int code = 0;
    if (*atoms) out = cmd_atoms(o);
    else if (*dav) out = cmd_davenport(o);
    else if (*len) out = cmd_lengths(o);
    else if (*cat) out = cmd_catenary(o);
    else if (*om) out = cmd_omega(o);
    else if (*md) out = cmd_mindist(o);
    else if (*cf) out = cmd_cfpair(o);
    else if (*sw) out = cmd_sweep(o);
    else if (*ds) out = cmd_deltastar(o);
    else if (*ver) {
      SuiteParams p;
      p.ns = o.ns;
      p.from = o.from;
      p.to = o.to;
      p.seed = o.seed;
      p.samples = o.samples;
      p.kcap = o.suite_kcap;
      p.threads = o.threads;
      VerificationSuite s = run_suite(o.suite, p);
      out = emit(s, parse_format(o.format));
      code = s.ok() ? 0 : 1;
    }
    cache.put(key, (code ? "1\n" : "0\n") + out);
    std::cout << out;
    return code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == "usage" || e.code() == "parse-error" ? 2 : 3;
  }
}
