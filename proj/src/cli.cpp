#include "pcube/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "pcube/classify.hpp"
#include "pcube/constructions.hpp"
#include "pcube/error.hpp"
#include "pcube/io.hpp"
#include "pcube/tables.hpp"

namespace pcube {

namespace {

using json = nlohmann::ordered_json;

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json_output = false;
  int threads = 1;
};

class Timer {
 public:
  double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

void report_time(const Context& ctx, const std::string& what, const Timer& t) {
  ctx.err << "time " << what << " " << std::fixed << std::setprecision(3) << t.seconds() << "s\n";
  ctx.err.unsetf(std::ios::floatfield);
}

json rows_json(const std::vector<Row>& rows, int offset) {
  json a = json::array();
  for (const Row& r : rows) {
    json row = json::array();
    for (int s : r) row.push_back(s + offset);
    a.push_back(std::move(row));
  }
  return a;
}

json params_json(const CubeParams& p) {
  return json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"n", p.n}};
}

std::string header_word(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string w;
    if (words >> w) return w;
  }
  return {};
}

std::optional<GroupTable> load_group_file(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return read_group(read_text_file(path));
}

GroupTable resolve_group(const std::string& name, const std::string& file) {
  if (!file.empty()) return read_group(read_text_file(file));
  if (name.empty()) throw ParseError("a group is required (--group NAME or --group-file FILE)");
  return group_from_name(name);
}

std::string cube_name(const std::string& group, int v, int k, int lambda, int n, std::size_t index) {
  std::ostringstream s;
  s << group << "_" << v << "_" << k << "_" << lambda << "_n" << n << "_" << std::setw(4) << std::setfill('0')
    << index;
  return s.str();
}

std::optional<int> parse_optional_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return std::stoi(s);
}

// ---- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int q = 0;
  int m = 4;
  std::string alpha;
  std::string beta;
  std::string group;
  std::string group_file;
  std::string set;
  std::string out_path;
};

int cmd_construct(const Context& ctx, const ConstructArgs& a) {
  std::optional<GroupTable> group;
  NdDifferenceSet d;
  try {
    if (a.family == "paley") {
      auto c = paley_nd(a.q, parse_optional_int(a.alpha));
      group = std::move(c.group);
      d = std::move(c.diffset);
    } else if (a.family == "cyclotomic") {
      auto c = cyclotomic_nd(a.q, a.m, parse_optional_int(a.alpha));
      group = std::move(c.group);
      d = std::move(c.diffset);
    } else if (a.family == "tpp") {
      auto c = twin_prime_power_nd(a.q, parse_optional_int(a.alpha), parse_optional_int(a.beta));
      group = std::move(c.group);
      d = std::move(c.diffset);
    } else {
      GroupTable g = resolve_group(a.group, a.group_file);
      std::vector<int> elems;
      std::istringstream in(a.set);
      std::string part;
      while (std::getline(in, part, ',')) elems.push_back(std::stoi(part));
      std::sort(elems.begin(), elems.end());
      const int k = static_cast<int>(elems.size());
      if (g.order() < 2 || (k * (k - 1)) % (g.order() - 1) != 0) {
        throw std::invalid_argument("lift: |S|(|S|-1) is not a multiple of v-1");
      }
      const int lambda = k * (k - 1) / (g.order() - 1);
      if (!is_difference_set(g, elems, k, lambda)) throw std::invalid_argument("lift: not a difference set");
      d = lift_to_2d(OrdinaryDifferenceSet{k, lambda, elems});
      group = std::move(g);
    }
  } catch (const std::invalid_argument& e) {
    ctx.err << "construct: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string text = write_diffset(*group, d);
  if (!a.out_path.empty()) write_text_file(a.out_path, text);
  if (ctx.json_output) {
    NdDifferenceSet sorted = d;
    std::sort(sorted.tuples.begin(), sorted.tuples.end());
    json j{{"command", "construct"}, {"family", a.family}, {"group", group->name()}, {"v", group->order()},
           {"k", d.k},         {"lambda", d.lambda},  {"n", d.n},          {"tuples", rows_json(sorted.tuples, 0)}};
    if (!a.out_path.empty()) j["path"] = a.out_path;
    ctx.out << j.dump(2) << "\n";
  } else if (a.out_path.empty()) {
    ctx.out << text;
  } else {
    ctx.out << "wrote " << a.out_path << ": ndiffset v=" << group->order() << " k=" << d.k << " lambda=" << d.lambda
            << " n=" << d.n << " group=" << group->name() << "\n";
  }
  return kExitOk;
}

// ---- verify / develop / project / bounds --------------------------------------

int cmd_verify(const Context& ctx, const std::string& path, const std::string& group_file) {
  const std::string text = read_text_file(path);
  const std::string kind = header_word(text);
  if (kind == "pcube") {
    const Cube c = read_cube(text);
    const VerifyReport r = verify_cube(c);
    if (ctx.json_output) {
      json j{{"command", "verify"}, {"kind", "pcube"}, {"params", params_json(c.params())}, {"ok", r.ok}};
      if (!r.ok) {
        j["condition"] = static_cast<int>(r.condition);
        j["x"] = r.x;
        j["y"] = r.y;
        j["message"] = r.message;
      }
      ctx.out << j.dump(2) << "\n";
    } else if (r.ok) {
      ctx.out << "ok: (" << c.v() << "," << c.k() << "," << c.lambda() << ") projection " << c.n() << "-cube\n";
    } else {
      ctx.out << "fail: condition " << static_cast<int>(r.condition) << " at (" << r.x << "," << r.y
              << "): " << r.message << "\n";
    }
    return r.ok ? kExitOk : kExitFalse;
  }
  if (kind == "ndiffset") {
    const DiffsetFile f = read_diffset(text, load_group_file(group_file));
    const DiffsetReport r = is_nd_difference_set(f.group, f.diffset);
    if (ctx.json_output) {
      json j{{"command", "verify"}, {"kind", "ndiffset"}, {"group", f.group.name()}, {"ok", r.ok}};
      if (!r.ok) {
        j["x"] = r.x;
        j["y"] = r.y;
        j["message"] = r.message;
      }
      ctx.out << j.dump(2) << "\n";
    } else if (r.ok) {
      ctx.out << "ok: " << f.diffset.n << "-dimensional (" << f.group.order() << "," << f.diffset.k << ","
              << f.diffset.lambda << ") difference set in " << f.group.name() << "\n";
    } else {
      ctx.out << "fail: " << r.message << "\n";
    }
    return r.ok ? kExitOk : kExitFalse;
  }
  throw ParseError("unrecognized file header in " + path);
}

int cmd_develop(const Context& ctx, const std::string& path, const std::string& group_file,
                const std::string& out_path) {
  const DiffsetFile f = read_diffset(read_text_file(path), load_group_file(group_file));
  Cube c;
  try {
    c = develop(f.group, f.diffset);
  } catch (const std::invalid_argument& e) {
    ctx.err << "develop: " << e.what() << "\n";
    return kExitFalse;
  }
  const std::string text = write_cube(c);
  if (!out_path.empty()) write_text_file(out_path, text);
  if (ctx.json_output) {
    json j{{"command", "develop"}, {"params", params_json(c.params())}, {"rows", rows_json(c.rows(), 1)}};
    if (!out_path.empty()) j["path"] = out_path;
    ctx.out << j.dump(2) << "\n";
  } else if (out_path.empty()) {
    ctx.out << text;
  } else {
    ctx.out << "wrote " << out_path << ": pcube v=" << c.v() << " k=" << c.k() << " lambda=" << c.lambda()
            << " n=" << c.n() << "\n";
  }
  return kExitOk;
}

int cmd_project(const Context& ctx, const std::string& path, int x, int y) {
  const Cube c = read_cube(read_text_file(path));
  DesignMatrix m;
  try {
    m = projection(c, x, y);
  } catch (const std::invalid_argument& e) {
    ctx.err << "project: " << e.what() << "\n";
    return kExitUsage;
  }
  const bool design = is_symmetric_design(m, c.v(), c.k(), c.lambda());
  if (ctx.json_output) {
    json rows = json::array();
    for (int i = 0; i < m.v; ++i) {
      json r = json::array();
      for (int j = 0; j < m.v; ++j) r.push_back(m.at(i, j));
      rows.push_back(std::move(r));
    }
    ctx.out << json{{"command", "project"}, {"x", x}, {"y", y}, {"matrix", rows}, {"symmetric_design", design}}.dump(2)
            << "\n";
  } else {
    for (int i = 0; i < m.v; ++i) {
      for (int j = 0; j < m.v; ++j) ctx.out << (j ? " " : "") << m.at(i, j);
      ctx.out << "\n";
    }
    ctx.out << "symmetric_design=" << (design ? "yes" : "no") << "\n";
  }
  return design ? kExitOk : kExitFalse;
}

int cmd_bounds(const Context& ctx, int v, int k) {
  if (v < 1 || k < 0 || k > v) {
    ctx.err << "bounds: need 0 <= k <= v\n";
    return kExitUsage;
  }
  const DimensionBounds b = dimension_bounds(v, k);
  if (ctx.json_output) {
    json j{{"command", "bounds"}, {"v", v}, {"k", k}, {"bounded", b.bounded}};
    if (b.bounded) {
      j["triangular"] = b.triangular;
      j["distance"] = b.distance;
    }
    ctx.out << j.dump(2) << "\n";
  } else if (!b.bounded) {
    ctx.out << "unbounded\n";
  } else {
    ctx.out << "triangular=" << b.triangular << "\ndistance=" << b.distance << "\n";
  }
  return kExitOk;
}

// ---- canon / equiv / aut ------------------------------------------------------

int cmd_canon(const Context& ctx, const std::string& path) {
  const Cube c = read_cube(read_text_file(path));
  const CanonicalCertificate cert = canonical_form(c);
  const Cube canon(c.params(), cert.canonical_rows);
  if (ctx.json_output) {
    ctx.out << json{{"command", "canon"},
                    {"params", params_json(c.params())},
                    {"apar_order", cert.apar_order},
                    {"atop_order", cert.atop_order},
                    {"to_canonical", to_string(cert.to_canonical)},
                    {"rows", rows_json(cert.canonical_rows, 1)}}
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "apar_order=" << cert.apar_order << "\natop_order=" << cert.atop_order << "\n" << write_cube(canon);
  }
  return kExitOk;
}

int cmd_equiv(const Context& ctx, const std::string& a, const std::string& b, bool isotopy_only) {
  const Cube c1 = read_cube(read_text_file(a));
  const Cube c2 = read_cube(read_text_file(b));
  if (!(c1.params() == c2.params())) {
    ctx.err << "equiv: parameter mismatch\n";
    return kExitUsage;
  }
  std::optional<std::string> witness;
  if (isotopy_only) {
    if (auto w = are_isotopic(c1, c2)) witness = to_string(*w);
  } else {
    if (auto w = are_paratopic(c1, c2)) witness = to_string(*w);
  }
  const std::string relation = isotopy_only ? "isotopic" : "paratopic";
  if (ctx.json_output) {
    json j{{"command", "equiv"}, {"relation", relation}, {"equivalent", witness.has_value()}};
    if (witness) j["witness"] = *witness;
    ctx.out << j.dump(2) << "\n";
  } else if (witness) {
    ctx.out << relation << "\nwitness " << *witness << "\n";
  } else {
    ctx.out << "not " << relation << "\n";
  }
  return witness ? kExitOk : kExitFalse;
}

int cmd_aut(const Context& ctx, const std::string& path) {
  const Cube c = read_cube(read_text_file(path));
  const CanonicalCertificate cert = canonical_form(c);
  if (ctx.json_output) {
    json gens = json::array();
    for (const auto& g : cert.generators) gens.push_back(to_string(g));
    json atop = json::array();
    for (const auto& g : cert.atop_generators) atop.push_back(to_string(g));
    ctx.out << json{{"command", "aut"},        {"atop_order", cert.atop_order}, {"apar_order", cert.apar_order},
                    {"apar_generators", gens}, {"atop_generators", atop}}
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "atop_order=" << cert.atop_order << "\napar_order=" << cert.apar_order << "\n";
    ctx.out << "apar_generators=" << cert.generators.size() << "\n";
    for (const auto& g : cert.generators) ctx.out << "  " << to_string(g) << "\n";
    ctx.out << "atop_generators=" << cert.atop_generators.size() << "\n";
    for (const auto& g : cert.atop_generators) ctx.out << "  " << to_string(g) << "\n";
  }
  return kExitOk;
}

// ---- classify / enumerate / km-search -----------------------------------------

struct ClassifyArgs {
  std::string group;
  std::string group_file;
  int k = 0;
  int lambda = 0;
  int max_dim = 0;
  double budget = 0;
  std::string emit;
};

void emit_classes(const GroupTable& g, const ClassificationResult& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& dim : r.per_dimension) {
    for (std::size_t i = 0; i < dim.classes.size(); ++i) {
      const auto& rep = dim.classes[i];
      const std::string base = dir + "/" + cube_name(g.name(), g.order(), r.k, r.lambda, dim.n, i + 1);
      write_text_file(base + ".nds", write_diffset(g, rep.diffset));
      write_text_file(base + ".oa", write_cube(develop(g, rep.diffset)));
    }
  }
}

int cmd_classify(const Context& ctx, const ClassifyArgs& a) {
  const GroupTable g = resolve_group(a.group, a.group_file);
  ClassifyOptions opt;
  opt.threads = ctx.threads;
  opt.budget_seconds = a.budget;
  if (a.max_dim > 0) opt.max_dim = a.max_dim;
  Timer timer;
  if (!ctx.json_output) {
    opt.on_dimension = [&](const DimensionClasses& d) {
      ctx.out << "n=" << d.n << " classes=" << d.classes.size() << std::endl;
      report_time(ctx, "n=" + std::to_string(d.n), timer);
    };
  }
  ClassificationResult r;
  try {
    r = classify_nd_diffsets(g, a.k, a.lambda, opt);
  } catch (const BudgetExceeded& e) {
    ctx.err << "classify: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!a.emit.empty()) emit_classes(g, r, a.emit);
  const std::string mu = (r.complete ? "" : ">=") + std::to_string(r.mu);
  if (ctx.json_output) {
    json dims = json::array();
    for (const auto& d : r.per_dimension) dims.push_back(json{{"n", d.n}, {"classes", d.classes.size()}});
    ctx.out << json{{"command", "classify"}, {"group", g.name()},       {"v", g.order()},
                    {"k", a.k},              {"lambda", a.lambda},      {"catalog", r.catalog.size()},
                    {"dimensions", dims},    {"mu", r.mu},              {"complete", r.complete}}
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "mu" << (r.complete ? "=" : ">=") << r.mu << "\n";
  }
  report_time(ctx, "classify", timer);
  return kExitOk;
}

int cmd_enumerate(const Context& ctx, const std::string& group, const std::string& group_file, int k, int lambda,
                  bool list) {
  const GroupTable g = resolve_group(group, group_file);
  std::vector<std::vector<int>> sets;
  try {
    sets = enumerate_difference_sets(g, k, lambda);
  } catch (const BudgetExceeded& e) {
    ctx.err << "enumerate: " << e.what() << "\n";
    return kExitUsage;
  }
  std::vector<int> classes;
  if (!sets.empty()) classes = diffset_classes(g, sets);
  const int nds = classes.empty() ? 0 : *std::max_element(classes.begin(), classes.end()) + 1;
  if (ctx.json_output) {
    json j{{"command", "enumerate"}, {"group", g.name()}, {"v", g.order()}, {"k", k},
           {"lambda", lambda},       {"tds", sets.size()}, {"nds", nds}};
    if (list) {
      j["sets"] = rows_json(sets, 0);
      j["classes"] = classes;
    }
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "tds=" << sets.size() << "\nnds=" << nds << "\n";
    if (list) {
      for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = 0; j < sets[i].size(); ++j) ctx.out << (j ? " " : "") << sets[i][j];
        ctx.out << "  class=" << classes[i] + 1 << "\n";
      }
    }
  }
  return kExitOk;
}

struct KmArgs {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int n = 0;
  std::string action;
  std::string emit;
};

int cmd_km(const Context& ctx, const KmArgs& a) {
  std::vector<Isotopy> gens;
  if (!a.action.empty()) {
    const ActionFile f = read_action(read_text_file(a.action));
    if (f.v != a.v || f.n != a.n) throw ParseError("action file v/n do not match --v/--n");
    gens = f.generators;
  }
  Timer timer;
  std::vector<Cube> cubes;
  try {
    cubes = kramer_mesner_search(a.v, a.k, a.lambda, a.n, gens);
  } catch (const std::invalid_argument& e) {
    ctx.err << "km-search: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    ctx.err << "km-search: " << e.what() << "\n";
    return kExitUsage;
  }
  if (!a.emit.empty()) {
    std::filesystem::create_directories(a.emit);
    for (std::size_t i = 0; i < cubes.size(); ++i) {
      write_text_file(a.emit + "/" + cube_name("km", a.v, a.k, a.lambda, a.n, i + 1) + ".oa", write_cube(cubes[i]));
    }
  }
  if (ctx.json_output) {
    json list = json::array();
    for (const Cube& c : cubes) {
      const AutotopyGroup atop = autotopy_group(c);
      list.push_back(json{{"atop_order", atop.order}, {"rows", rows_json(c.rows(), 1)}});
    }
    ctx.out << json{{"command", "km-search"}, {"v", a.v},         {"k", a.k},     {"lambda", a.lambda},
                    {"n", a.n},               {"generators", gens.size()}, {"classes", cubes.size()}, {"cubes", list}}
                   .dump(2)
            << "\n";
  } else {
    ctx.out << "classes=" << cubes.size() << "\n";
    for (const Cube& c : cubes) ctx.out << "\n" << write_cube(c);
  }
  report_time(ctx, "km-search", timer);
  return kExitOk;
}

// ---- tables -------------------------------------------------------------------

struct TablesArgs {
  int table = 1;
  bool expected = false;
  double budget = 0;
  bool mu = false;
};

struct Check {
  bool ok = true;
  std::vector<std::string> mismatches;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      mismatches.push_back(what);
    }
  }
};

int finish_tables(const Context& ctx, const TablesArgs& a, json& j, const Check& check) {
  if (a.expected) {
    j["expected_ok"] = check.ok;
    j["mismatches"] = check.mismatches;
  }
  if (ctx.json_output) {
    ctx.out << j.dump(2) << "\n";
  } else if (a.expected) {
    for (const auto& m : check.mismatches) ctx.out << "mismatch: " << m << "\n";
    ctx.out << "expected: " << (check.ok ? "ok" : "MISMATCH") << "\n";
  }
  return check.ok ? kExitOk : kExitFalse;
}

int table1(const Context& ctx, const TablesArgs& a) {
  const auto cells = compute_table1(6);
  json j{{"command", "tables"}, {"table", 1}};
  json counts = json::object();
  Check check;
  std::ostringstream ns, cs;
  ns << "n:";
  cs << "#:";
  for (const auto& c : cells) {
    ns << " " << c.n;
    cs << " " << c.count;
    counts[std::to_string(c.n)] = c.count;
    if (a.expected) {
      const auto& exp = expected_tables().table1;
      const auto it = std::find_if(exp.begin(), exp.end(), [&](const Table1Cell& e) { return e.n == c.n; });
      check.expect(it != exp.end() && it->count == c.count,
                   "table1 n=" + std::to_string(c.n) + " computed " + std::to_string(c.count));
    }
  }
  j["counts"] = counts;
  if (!ctx.json_output) ctx.out << ns.str() << "\n" << cs.str() << "\n";
  return finish_tables(ctx, a, j, check);
}

ClassificationResult run_classification(const Context& ctx, const std::string& group, int k, int lambda,
                                        double budget) {
  ClassifyOptions opt;
  opt.threads = ctx.threads;
  opt.budget_seconds = budget;
  Timer t;
  ClassificationResult r = classify_nd_diffsets(group_from_name(group), k, lambda, opt);
  report_time(ctx, group + " (" + std::to_string(r.v) + "," + std::to_string(k) + "," + std::to_string(lambda) + ")",
              t);
  return r;
}

std::string mu_text(const ClassificationResult& r) {
  if (r.mu == 0) return "-";
  return (r.complete ? "" : ">=") + std::to_string(r.mu);
}

// Table 2 and the class counts behind it: every (group, parameters) cell of
// the reference data is classified once.
int table2(const Context& ctx, const TablesArgs& a, bool with_counts) {
  const ExpectedTables& exp = expected_tables();
  std::map<std::string, ClassificationResult> runs;
  auto key = [](const std::string& g, int k, int l) { return g + "/" + std::to_string(k) + "/" + std::to_string(l); };
  json j{{"command", "tables"}, {"table", with_counts ? 4 : 2}};
  json cells = json::array();
  Check check;
  for (const Table2Cell& cell : exp.table2) {
    const ClassificationResult& r =
        runs.emplace(key(cell.group, cell.k, cell.lambda), run_classification(ctx, cell.group, cell.k, cell.lambda,
                                                                              a.budget))
            .first->second;
    if (!with_counts) {
      if (!ctx.json_output) {
        ctx.out << "(" << cell.v << "," << cell.k << "," << cell.lambda << ") " << cell.group << " mu=" << mu_text(r)
                << "\n";
      }
      cells.push_back(json{{"group", cell.group}, {"v", cell.v}, {"k", cell.k}, {"lambda", cell.lambda},
                           {"mu", r.mu}, {"complete", r.complete}});
      if (a.expected) {
        check.expect(r.complete && r.mu == cell.mu,
                     "table2 " + cell.group + " (" + std::to_string(cell.v) + "," + std::to_string(cell.k) + "," +
                         std::to_string(cell.lambda) + ") computed mu=" + mu_text(r));
      }
    }
  }
  if (with_counts) {
    for (const Table4Row& row : exp.table4) {
      std::vector<ClassificationResult> parts;
      bool complete = true;
      for (const auto& g : row.groups) {
        auto it = runs.find(key(g, row.k, row.lambda));
        if (it == runs.end()) it = runs.emplace(key(g, row.k, row.lambda),
                                                run_classification(ctx, g, row.k, row.lambda, a.budget)).first;
        parts.push_back(it->second);
        complete = complete && it->second.complete;
      }
      const std::vector<int> counts = merged_class_counts(parts);
      if (!ctx.json_output) {
        ctx.out << "(" << row.v << "," << row.k << "," << row.lambda << ")";
        for (int c : counts) ctx.out << " " << c;
        if (!complete) ctx.out << " (partial)";
        ctx.out << "\n";
      }
      std::string groups;
      for (const auto& g : row.groups) groups += (groups.empty() ? "" : ",") + g;
      cells.push_back(json{{"groups", groups}, {"v", row.v}, {"k", row.k}, {"lambda", row.lambda},
                           {"counts", counts}, {"complete", complete}});
      if (a.expected) {
        check.expect(complete && counts == row.counts,
                     "table4 (" + std::to_string(row.v) + "," + std::to_string(row.k) + "," +
                         std::to_string(row.lambda) + ") class counts differ");
      }
    }
  }
  j["cells"] = cells;
  return finish_tables(ctx, a, j, check);
}

int table3(const Context& ctx, const TablesArgs& a) {
  json j{{"command", "tables"}, {"table", 3}};
  json rows = json::array();
  Check check;
  if (!ctx.json_output) ctx.out << "id group tds nds mu\n";
  for (int id = 1; id <= 14; ++id) {
    const GroupTable g = small_group_16(id);
    Timer t;
    const DifferenceSetCensus census = difference_set_census(g, 6, 2);
    report_time(ctx, "census SG16_" + std::to_string(id), t);
    std::optional<ClassificationResult> mu;
    if (a.mu && census.tds > 0) mu = run_classification(ctx, g.name(), 6, 2, a.budget);
    const std::string mu_str = census.tds == 0 ? "-" : mu ? mu_text(*mu) : "skipped";
    if (!ctx.json_output) {
      ctx.out << id << " " << g.name() << " " << census.tds << " " << census.nds << " " << mu_str << "\n";
    }
    json row{{"id", id}, {"group", g.name()}, {"tds", census.tds}, {"nds", census.nds}, {"mu", mu_str}};
    rows.push_back(row);
    if (a.expected) {
      const auto& exp = expected_tables().table3;
      const auto it = std::find_if(exp.begin(), exp.end(), [&](const Table3Cell& c) { return c.id == id; });
      const std::string label = "table3 id=" + std::to_string(id);
      check.expect(it != exp.end(), label + " has no reference row");
      if (it == exp.end()) continue;
      check.expect(it->tds == census.tds, label + " tds computed " + std::to_string(census.tds));
      check.expect(it->nds == census.nds, label + " nds computed " + std::to_string(census.nds));
      if (mu) {
        // A partial run is a lower bound; it contradicts nothing it does not exceed.
        const bool ok = mu->complete ? it->mu.accepts(mu->mu)
                                     : (it->mu.absent ? false : mu->mu <= it->mu.value || it->mu.lower_bound);
        check.expect(ok, label + " mu computed " + mu_text(*mu) + ", reference " + it->mu.to_string());
      }
    }
  }
  j["rows"] = rows;
  return finish_tables(ctx, a, j, check);
}

int cmd_tables(const Context& ctx, const TablesArgs& a) {
  switch (a.table) {
    case 1:
      return table1(ctx, a);
    case 2:
      return table2(ctx, a, false);
    case 3:
      return table3(ctx, a);
    case 4:
      return table2(ctx, a, true);
    default:
      ctx.err << "tables: --table must be 1, 2, 3 or 4\n";
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projection cubes of symmetric designs and n-dimensional difference sets", "pcube"};
  app.require_subcommand(1);
  std::string format = "text";
  int threads = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", threads, "Worker threads for classification")->check(CLI::Range(1, 1024));

  ConstructArgs construct;
  auto* sc_construct = app.add_subcommand("construct", "Build an n-dimensional difference set");
  sc_construct->add_option("family", construct.family, "paley | cyclotomic | tpp | lift")
      ->required()
      ->check(CLI::IsMember({"paley", "cyclotomic", "tpp", "lift"}));
  sc_construct->add_option("--q", construct.q, "Field order");
  sc_construct->add_option("--m", construct.m, "Cyclotomic index (cyclotomic)");
  sc_construct->add_option("--alpha", construct.alpha, "Primitive element of F_q (field index)");
  sc_construct->add_option("--beta", construct.beta, "Primitive element of F_(q+2) (tpp)");
  sc_construct->add_option("--group", construct.group, "Group name (lift)");
  sc_construct->add_option("--group-file", construct.group_file, "Group file (lift)");
  sc_construct->add_option("--set", construct.set, "Comma-separated difference set (lift)");
  sc_construct->add_option("--out", construct.out_path, "Write the ndiffset file here");

  std::string path, path2, group_file, out_path;
  auto* sc_verify = app.add_subcommand("verify", "Check a .oa cube or .nds difference set");
  sc_verify->add_option("path", path)->required();
  sc_verify->add_option("--group-file", group_file);

  auto* sc_develop = app.add_subcommand("develop", "Develop a difference set into a cube");
  sc_develop->add_option("path", path)->required();
  sc_develop->add_option("--group-file", group_file);
  sc_develop->add_option("--out", out_path);

  int px = 1, py = 2;
  auto* sc_project = app.add_subcommand("project", "Print the projection onto two coordinates");
  sc_project->add_option("path", path)->required();
  sc_project->add_option("--x", px)->required();
  sc_project->add_option("--y", py)->required();

  int bv = 0, bk = 0;
  auto* sc_bounds = app.add_subcommand("bounds", "Upper bounds on the dimension");
  sc_bounds->add_option("--v", bv)->required();
  sc_bounds->add_option("--k", bk)->required();

  auto* sc_canon = app.add_subcommand("canon", "Canonical form under paratopy");
  sc_canon->add_option("path", path)->required();

  bool isotopy_only = false;
  auto* sc_equiv = app.add_subcommand("equiv", "Decide paratopy (or isotopy) of two cubes");
  sc_equiv->add_option("a", path)->required();
  sc_equiv->add_option("b", path2)->required();
  sc_equiv->add_flag("--isotopy", isotopy_only, "Fix the coordinate order");

  auto* sc_aut = app.add_subcommand("aut", "Autotopy and autoparatopy groups");
  sc_aut->add_option("path", path)->required();

  ClassifyArgs classify;
  auto* sc_classify = app.add_subcommand("classify", "Classify n-dimensional difference sets");
  sc_classify->add_option("--group", classify.group);
  sc_classify->add_option("--group-file", classify.group_file);
  sc_classify->add_option("--k", classify.k)->required();
  sc_classify->add_option("--lambda", classify.lambda)->required();
  sc_classify->add_option("--max-dim", classify.max_dim);
  sc_classify->add_option("--budget", classify.budget, "Wall-clock seconds");
  sc_classify->add_option("--emit", classify.emit, "Write representatives to this directory");

  std::string egroup, egroup_file;
  int ek = 0, el = 0;
  bool elist = false;
  auto* sc_enum = app.add_subcommand("enumerate", "All ordinary difference sets and their classes");
  sc_enum->add_option("--group", egroup);
  sc_enum->add_option("--group-file", egroup_file);
  sc_enum->add_option("--k", ek)->required();
  sc_enum->add_option("--lambda", el)->required();
  sc_enum->add_flag("--list", elist);

  KmArgs km;
  auto* sc_km = app.add_subcommand("km-search", "Cubes with a prescribed autotopy group");
  sc_km->add_option("--v", km.v)->required();
  sc_km->add_option("--k", km.k)->required();
  sc_km->add_option("--lambda", km.lambda)->required();
  sc_km->add_option("--n", km.n)->required();
  sc_km->add_option("--action", km.action, "Group action file (omit for the trivial group)");
  sc_km->add_option("--emit", km.emit);

  TablesArgs tables;
  auto* sc_tables = app.add_subcommand("tables", "Recompute the classification tables");
  sc_tables->add_option("--table", tables.table)->required();
  sc_tables->add_flag("--expected", tables.expected, "Compare against the reference values");
  sc_tables->add_option("--budget", tables.budget, "Seconds per classification run");
  sc_tables->add_flag("--mu", tables.mu, "Table 3: also compute maximal dimensions");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Context ctx{out, err, format == "json", threads};
  try {
    if (sc_construct->parsed()) return cmd_construct(ctx, construct);
    if (sc_verify->parsed()) return cmd_verify(ctx, path, group_file);
    if (sc_develop->parsed()) return cmd_develop(ctx, path, group_file, out_path);
    if (sc_project->parsed()) return cmd_project(ctx, path, px, py);
    if (sc_bounds->parsed()) return cmd_bounds(ctx, bv, bk);
    if (sc_canon->parsed()) return cmd_canon(ctx, path);
    if (sc_equiv->parsed()) return cmd_equiv(ctx, path, path2, isotopy_only);
    if (sc_aut->parsed()) return cmd_aut(ctx, path);
    if (sc_classify->parsed()) return cmd_classify(ctx, classify);
    if (sc_enum->parsed()) return cmd_enumerate(ctx, egroup, egroup_file, ek, el, elist);
    if (sc_km->parsed()) return cmd_km(ctx, km);
    if (sc_tables->parsed()) return cmd_tables(ctx, tables);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pcube
