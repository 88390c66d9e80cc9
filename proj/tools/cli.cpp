#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "crownlab/battery.hpp"
#include "crownlab/canonical.hpp"
#include "crownlab/errors.hpp"
#include "crownlab/extremal.hpp"
#include "crownlab/reversibility.hpp"
#include "crownlab/serialize.hpp"
#include "crownlab/solvers.hpp"
#include "crownlab/transforms.hpp"

namespace crownlab::cli {

namespace {

struct Options {
  std::string n;
  std::string k;
  std::string set_file;
  std::string sigma;
  int base = 0;
  std::string pattern;
  std::string op;
  int position = 1;
  std::string family;
  int max_size = 3;
  std::string sizes;
  int t = 0;
  std::string out_file;
  bool csv = false;
  bool json = false;
  bool all = false;
  bool verify = false;
  std::uint64_t seed = 0;
  int random_sets = 100;
  bool guard_override = false;
};

class Session {
 public:
  Session(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {
    limits_ = Limits::from_environment();
    limits_.override_guards = opt.guard_override;
  }

  const Options& opt() const { return opt_; }
  const Limits& limits() const { return limits_; }
  std::ostream& err() { return err_; }

  Crown crown() const { return Crown(to_int(opt_.n, "--n"), to_int(opt_.k, "--k")); }

  PairSet load_set() const {
    if (opt_.set_file.empty()) throw DomainError("--set FILE is required");
    std::ifstream in(opt_.set_file);
    if (!in) throw DomainError("cannot open " + opt_.set_file);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw DomainError(opt_.set_file + ": " + e.what());
    }
    return pairset_from_json(j);
  }

  void emit(const json& doc) { write(doc.dump() + "\n"); }

  void write(const std::string& text) {
    if (opt_.out_file.empty()) {
      out_ << text;
      return;
    }
    write_file(opt_.out_file, text);
  }

  static void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    if (!f) throw DomainError("cannot write " + path);
    f << text;
  }

  static int to_int(const std::string& text, const char* flag) {
    if (text.empty()) throw DomainError(std::string(flag) + " is required");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw DomainError(std::string(flag) + " expects an integer, got \"" + text + "\"");
    return value;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  Limits limits_;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

std::vector<int> parse_sigma_list(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split(text, ',')) {
    if (item.front() == 'a' || item.front() == 'A')
      out.push_back(Element::parse(item).index);
    else
      out.push_back(Session::to_int(item, "--sigma"));
  }
  return out;
}

std::string sac3_label(Sac3Class c) { return c == Sac3Class::Disjoint ? "D3" : "O3"; }

json witness_cycle_class(const Crown& crown, const AltCycle& c) {
  if (c.size() != 3) return nullptr;
  return sac3_label(classify_sac3(crown, c));
}

int cmd_info(Session& s) {
  const Crown crown = s.crown();
  const int n = crown.n();
  const int k = crown.k();
  const CritGraph graph(crown);
  json doc = crown_to_json(crown);
  doc["elements"] = crown.element_count();
  doc["inc_count"] = enumerate_inc(crown).size();
  doc["edges"] = graph.edge_count();
  doc["alpha"] = alpha_formula(k);
  doc["chi"] = dimension_formula(n, k);
  doc["dim"] = dimension_formula(n, k);
  doc["maxrev"] = alpha_formula(k);
  doc["canonical_count"] = k < 62 ? json(static_cast<long long>(crown.circle()) << k) : json(nullptr);
  doc["inr_exists"] = n <= 2 * k;
  doc["max_inr"] = n <= 2 * k ? json(inr_extremal_size(n, k)) : json(nullptr);
  doc["second_maximal_reversible"] =
      n <= k ? json(alpha_formula(k) - n * (n - 1) / 2 + 1) : json(nullptr);
  s.emit(doc);
  s.err() << "S_" << n << "^" << k << ": " << doc["inc_count"] << " critical pairs, dim "
          << doc["dim"] << "\n";
  return kOk;
}

int cmd_graph(Session& s) {
  const Crown crown = s.crown();
  if (crown.pair_count() > s.limits().max_vertices && !s.limits().override_guards)
    throw ResourceError("graph has " + std::to_string(crown.pair_count()) +
                        " vertices, above the vertex guard");
  const CritGraph graph(crown);
  json doc = dimacs_sidecar(graph);
  doc["edge_count"] = graph.edge_count();
  const std::string& path = s.opt().out_file;
  if (path.empty()) {
    doc["dimacs"] = to_dimacs(graph);
    s.emit(doc);
  } else {
    Session::write_file(path, to_dimacs(graph));
    Session::write_file(path + ".json", doc.dump() + "\n");
    s.err() << "wrote " << path << " and " << path << ".json\n";
  }
  return kOk;
}

int cmd_solve(Session& s, const std::string& quantity) {
  const Crown crown = s.crown();
  SolveReport r;
  if (quantity == "alpha")
    r = max_independent_set(CritGraph(crown), s.limits());
  else if (quantity == "chi")
    r = chromatic_number(CritGraph(crown), s.limits());
  else if (quantity == "dim")
    r = min_reversible_cover(crown, s.limits());
  else if (quantity == "maxrev")
    r = max_reversible_set(crown, s.limits());
  else
    r = max_inr_set(crown, s.limits());
  s.emit(report_to_json(r));
  s.err() << quantity << "(" << crown.n() << "," << crown.k() << ") = "
          << (r.value ? std::to_string(*r.value) : "none") << " [" << r.nodes << " nodes, "
          << r.elapsed_ms << " ms]\n";
  return kOk;
}

json canonical_doc(const Crown& crown, const std::vector<int>& sigma) {
  const PairSet t = canonical_set(crown, sigma);
  json doc = pairset_to_json(t);
  doc["sigma"] = sigma_to_json(crown, sigma);
  doc["size"] = t.size();
  doc["extension"] = extension_to_json(reversing_extension(t));
  return doc;
}

int cmd_canonical(Session& s) {
  const Options& o = s.opt();
  if (!o.set_file.empty()) {
    const PairSet r = s.load_set();
    const auto sigma = recover_sigma(r);
    json doc = crown_to_json(r.crown());
    doc["canonical"] = sigma.has_value();
    doc["sigma"] = sigma ? sigma_to_json(r.crown(), *sigma) : json(nullptr);
    s.emit(doc);
    return kOk;
  }
  const Crown crown = s.crown();
  if (o.all) {
    json sets = json::array();
    for_each_canonical(crown, [&](const std::vector<int>& sigma, const PairSet& t) {
      sets.push_back({{"sigma", sigma_to_json(crown, sigma)}, {"pairs", pairs_to_json(t.pairs())}});
    });
    json doc = crown_to_json(crown);
    doc["count"] = sets.size();
    doc["sets"] = std::move(sets);
    s.emit(doc);
    return kOk;
  }
  std::vector<int> sigma;
  if (!o.sigma.empty())
    sigma = parse_sigma_list(o.sigma);
  else if (o.base > 0)
    sigma = decode_sigma(crown, {o.base, o.pattern});
  else
    throw DomainError("canonical needs --sigma, --base/--pattern, --all or --set");
  s.emit(canonical_doc(crown, sigma));
  return kOk;
}

int cmd_check(Session& s) {
  const PairSet set = s.load_set();
  const Crown& crown = set.crown();
  const Certificate cert = reversibility_certificate(set);
  json doc = crown_to_json(crown);
  doc["size"] = set.size();
  doc["independent"] = is_independent(set);
  doc["reversible"] = cert.reversible();
  doc["strict_cycle_size"] = cert.cycle ? json(cert.cycle->size()) : json(nullptr);
  doc["class"] = cert.cycle ? witness_cycle_class(crown, *cert.cycle) : json(nullptr);
  doc["cycle"] = cert.cycle ? cycle_to_json(*cert.cycle) : json(nullptr);
  doc["extension"] = cert.extension ? extension_to_json(*cert.extension) : json(nullptr);
  doc["maximal_independent"] = is_maximal_independent(set);
  doc["maximal_reversible"] = cert.reversible() && is_maximal_reversible(set);
  s.emit(doc);
  s.err() << set.size() << " pairs: " << (doc["independent"].get<bool>() ? "" : "not ")
          << "independent, " << (cert.reversible() ? "reversible" : "not reversible") << "\n";
  return kOk;
}

int cmd_transform(Session& s) {
  const PairSet set = s.load_set();
  if (s.opt().op.empty()) throw DomainError("--op is required");
  const TransformKind kind = parse_transform_kind(s.opt().op);
  const TransformOutcome outcome = apply_transform(set, kind, s.opt().position);
  json doc = pairset_to_json(outcome.result);
  doc["step"] = step_to_json(outcome.step);
  doc["size_before"] = set.size();
  doc["size_after"] = outcome.result.size();
  s.emit(doc);
  return kOk;
}

int cmd_extremal(Session& s) {
  const Options& o = s.opt();
  const Crown crown = s.crown();
  const int n = crown.n();
  const int k = crown.k();
  std::optional<AltCycle> cycle;
  PairSet set(crown);
  if (o.family == "canonical") {
    std::vector<int> sigma;
    for (int i = 1; i <= k + 1; ++i) sigma.push_back(i);
    set = canonical_set(crown, sigma);
  } else if (o.family == "noncanonical") {
    set = noncanonical_extremal(crown, o.position);
  } else if (o.family == "inr-low") {
    if (n > k) throw DomainError("inr-low requires n <= k");
    set = inr_extremal(crown);
  } else if (o.family == "inr-high") {
    if (n <= k || n > 2 * k) throw DomainError("inr-high requires k < n <= 2k");
    set = inr_extremal(crown);
  } else if (o.family == "dc0") {
    if (o.sizes.empty()) throw DomainError("dc0 needs --sizes");
    MatchingCycleSpec spec;
    for (const auto& item : split(o.sizes, ',')) spec.sizes.push_back(Session::to_int(item, "--sizes"));
    spec.t = o.t > 0 ? o.t : static_cast<int>(spec.sizes.size() - 1) / 2;
    cycle = matching_cycle(crown, spec);
    set = downset_of_cycle(crown, *cycle);
  } else if (o.family == "sac3") {
    cycle = sac3(crown);
    set = PairSet(crown, std::span<const CritPair>(cycle->pairs));
  } else {
    throw DomainError("unknown family \"" + o.family +
                      "\" (canonical, noncanonical, inr-low, inr-high, dc0, sac3)");
  }
  json doc = pairset_to_json(set);
  doc["family"] = o.family;
  doc["size"] = set.size();
  if (cycle) {
    doc["cycle"] = cycle_to_json(*cycle);
    doc["class"] = witness_cycle_class(crown, *cycle);
  }
  s.emit(doc);
  return kOk;
}

int cmd_hyperedges(Session& s) {
  const Crown crown = s.crown();
  const auto edges = enumerate_min_nonreversible(crown, s.opt().max_size, s.limits());
  std::map<std::string, int> by_size;
  json list = json::array();
  for (const auto& e : edges) {
    ++by_size[std::to_string(e.size())];
    list.push_back(pairs_to_json(e.pairs()));
  }
  json doc = crown_to_json(crown);
  doc["max_size"] = s.opt().max_size;
  doc["count"] = edges.size();
  doc["by_size"] = by_size;
  doc["hyperedges"] = std::move(list);
  s.emit(doc);
  return kOk;
}

BatteryOptions battery_options(const Session& s) {
  BatteryOptions b;
  b.seed = s.opt().seed;
  b.random_sets = s.opt().random_sets;
  b.limits = s.limits();
  if (s.limits().override_guards) {
    b.solver_max_nk = b.cover_max_nk = b.enumeration_max_nk = 1 << 20;
  }
  return b;
}

void summarize(std::ostream& err, const BatteryReport& r) {
  int pass = 0, fail = 0, skipped = 0;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Pass) ++pass;
    if (c.status == CheckStatus::Fail) {
      ++fail;
      err << "  FAIL " << c.name << ": " << c.detail << "\n";
    }
    if (c.status == CheckStatus::Skipped) ++skipped;
  }
  err << "S_" << r.n << "^" << r.k << ": " << pass << " pass, " << fail << " fail, " << skipped
      << " skipped\n";
}

int cmd_verify(Session& s) {
  const BatteryReport report = verify_battery(s.crown(), battery_options(s));
  s.emit(battery_to_json(report));
  summarize(s.err(), report);
  return report.all_pass() ? kOk : kCheckFailed;
}

std::string cell(const std::function<std::optional<long long>()>& f) {
  try {
    const auto v = f();
    return v ? std::to_string(*v) : "none";
  } catch (const ResourceError&) {
    return "";
  }
}

int cmd_sweep(Session& s) {
  const Options& o = s.opt();
  if (o.n.empty() || o.k.empty()) throw DomainError("sweep needs --n and --k ranges");
  const auto ns = parse_range(o.n);
  const auto ks = parse_range(o.k);
  const bool as_json = o.json && !o.csv;
  json rows = json::array();
  std::ostringstream csv;
  bool all_ok = true;
  if (o.verify)
    csv << "n,k,checks,passed,failed,skipped,all_pass\n";
  else
    csv << "n,k,inc_count,alpha,chi,dim,maxrev,max_inr\n";
  for (int n : ns)
    for (int k : ks) {
      if (n < 3 || k < 0) {
        s.err() << "skipping (" << n << "," << k << "): needs n >= 3 and k >= 0\n";
        continue;
      }
      const Crown crown(n, k);
      if (o.verify) {
        const BatteryReport r = verify_battery(crown, battery_options(s));
        int pass = 0, fail = 0, skipped = 0;
        for (const auto& c : r.checks) {
          pass += c.status == CheckStatus::Pass;
          fail += c.status == CheckStatus::Fail;
          skipped += c.status == CheckStatus::Skipped;
        }
        all_ok = all_ok && r.all_pass();
        csv << n << ',' << k << ',' << r.checks.size() << ',' << pass << ',' << fail << ','
            << skipped << ',' << (r.all_pass() ? "true" : "false") << '\n';
        rows.push_back({{"n", n}, {"k", k}, {"passed", pass}, {"failed", fail},
                        {"skipped", skipped}, {"all_pass", r.all_pass()}});
        summarize(s.err(), r);
        continue;
      }
      const CritGraph graph(crown);
      const Limits& lim = s.limits();
      const std::string inc = std::to_string(crown.pair_count());
      const std::string alpha = cell([&] { return max_independent_set(graph, lim).value; });
      const std::string chi = cell([&] { return chromatic_number(graph, lim).value; });
      const std::string dim = cell([&] { return min_reversible_cover(crown, lim).value; });
      const std::string maxrev = cell([&] { return max_reversible_set(crown, lim).value; });
      const std::string inr = cell([&] { return max_inr_set(crown, lim).value; });
      csv << n << ',' << k << ',' << inc << ',' << alpha << ',' << chi << ',' << dim << ','
          << maxrev << ',' << inr << '\n';
      auto num = [](const std::string& v) -> json {
        if (v.empty()) return nullptr;
        if (v == "none") return "none";
        return std::stoll(v);
      };
      rows.push_back({{"n", n}, {"k", k}, {"inc_count", num(inc)}, {"alpha", num(alpha)},
                      {"chi", num(chi)}, {"dim", num(dim)}, {"maxrev", num(maxrev)},
                      {"max_inr", num(inr)}});
    }
  if (as_json)
    s.emit(rows);
  else
    s.write(csv.str());
  return all_ok ? kOk : kCheckFailed;
}

void add_crown(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Crown parameter n (n >= 3)");
  sub->add_option("--k", o.k, "Crown parameter k (k >= 0)");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--out", o.out_file, "Write the output document to FILE");
  sub->add_flag("--guard-override", o.guard_override, "Lift the n+k instance guards");
}

}  // namespace

std::vector<int> parse_range(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = Session::to_int(text.substr(0, dots), "range start");
    const int hi = Session::to_int(text.substr(dots + 2), "range end");
    if (hi < lo) throw DomainError("empty range " + text);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  for (const auto& item : split(text, ',')) out.push_back(Session::to_int(item, "range"));
  if (out.empty()) throw DomainError("empty range");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crown posets S_n^k: critical pairs, reversible sets and exact solvers",
               "crownlab"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);
  Options o;

  std::map<std::string, std::function<int(Session&)>> handlers;
  auto verb = [&](const std::string& name, const std::string& desc,
                  std::function<int(Session&)> fn) {
    CLI::App* sub = app.add_subcommand(name, desc);
    add_common(sub, o);
    handlers[name] = std::move(fn);
    return sub;
  };

  add_crown(verb("info", "Closed-form values and counts", cmd_info), o);
  add_crown(verb("graph", "Export G_n^k as DIMACS plus a JSON vertex map", cmd_graph), o);
  for (const char* q : {"alpha", "chi", "dim", "maxrev", "maxinr"}) {
    const std::string name = q;
    add_crown(verb(name, "Exact solver: " + name,
                   [name](Session& s) { return cmd_solve(s, name); }),
              o);
  }
  {
    auto* sub = verb("canonical", "Build T(sigma), list all canonical sets, or recover sigma",
                     cmd_canonical);
    add_crown(sub, o);
    sub->add_option("--sigma", o.sigma, "Comma-separated A-indices, e.g. 8,9,7,1,6,2");
    sub->add_option("--base", o.base, "First element of sigma");
    sub->add_option("--pattern", o.pattern, "L/T string for the remaining elements");
    sub->add_flag("--all", o.all, "Every canonical set of the crown");
    sub->add_option("--set", o.set_file, "Recover sigma for this pair-set file");
  }
  verb("check", "Independence, reversibility and cycle class of a pair set", cmd_check)
      ->add_option("--set", o.set_file, "Pair-set JSON file")
      ->required();
  {
    auto* sub = verb("transform", "Apply one DFCL/DLCF/DFEL/DLEF step", cmd_transform);
    sub->add_option("--set", o.set_file, "Pair-set JSON file")->required();
    sub->add_option("--op", o.op, "dfcl, dlcf, dfel or dlef")->required();
    sub->add_option("--i", o.position, "Circle position");
  }
  {
    auto* sub = verb("extremal", "Named extremal family", cmd_extremal);
    add_crown(sub, o);
    sub->add_option("--family", o.family,
                    "canonical, noncanonical, inr-low, inr-high, dc0 or sac3")
        ->required();
    sub->add_option("--i", o.position, "Position for noncanonical");
    sub->add_option("--sizes", o.sizes, "Pair sizes for dc0, comma-separated");
    sub->add_option("--t", o.t, "Cycle parameter for dc0 (default from --sizes)");
  }
  {
    auto* sub = verb("hyperedges", "Minimal non-reversible sets up to a size", cmd_hyperedges);
    add_crown(sub, o);
    sub->add_option("--max-size", o.max_size, "Largest hyperedge size");
  }
  {
    auto* sub = verb("verify", "Run the check battery for one crown", cmd_verify);
    add_crown(sub, o);
    sub->add_option("--seed", o.seed, "Seed for randomized checks");
    sub->add_option("--random-sets", o.random_sets, "Random sets per position");
  }
  {
    auto* sub = verb("sweep", "Solver values or battery results over (n,k) ranges", cmd_sweep);
    sub->add_option("--n", o.n, "Range such as 3..5");
    sub->add_option("--k", o.k, "Range such as 0..3");
    sub->add_flag("--verify", o.verify, "Run the battery for each cell");
    sub->add_flag("--csv", o.csv, "CSV output (the default)");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--seed", o.seed, "Seed for randomized checks");
    sub->add_option("--random-sets", o.random_sets, "Random sets per position");
  }

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      !handlers.contains(args.front())) {
    err << "unknown verb \"" << args.front() << "\"\n" << app.help();
    return kUsage;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  Session session(o, out, err);
  try {
    return handlers.at(chosen->get_name())(session);
  } catch (const ResourceError& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}

}  // namespace crownlab::cli
