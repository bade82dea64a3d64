#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "ybx/catalog.hpp"
#include "ybx/io.hpp"
#include "ybx/quadratic.hpp"
#include "ybx/semigroup.hpp"
#include "ybx/tower.hpp"

namespace ybx::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Report {
  Json json;
  std::ostringstream text;
  int exit = kOk;

  Report(const std::string& command, const std::string& input) {
    json["command"] = command;
    json["input"] = input;
    json["generic"] = Json::object();
    json["classical"] = Json::object();
    json["verdict"] = "";
    json["failures"] = Json::array();
  }

  Json& generic() { return json["generic"]; }
  Json& classical() { return json["classical"]; }
  void fail(const std::string& what) { json["failures"].push_back(what); }
  bool failed() const { return !json["failures"].empty(); }
};

std::string pass(bool ok) { return ok ? "pass" : "FAIL"; }

template <class T>
std::string join(const std::vector<T>& items) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) out << (i ? ", " : "") << items[i];
  return out.str();
}

std::vector<std::string> strings(const std::vector<RatFun>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

void row(std::ostream& out, const std::string& label, const std::string& generic,
         const std::string& classical) {
  out << std::left << std::setw(20) << label << std::setw(24) << generic << classical << "\n";
}

Json rows_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (const auto& x : m.row(r)) row.push_back(x.to_string());
    out.push_back(row);
  }
  return out;
}

SymmetryFile require_symmetry(const InputFile& input, const std::string& path,
                              const std::string& command) {
  if (const auto* file = std::get_if<SymmetryFile>(&input)) return *file;
  throw Error(ErrorCode::Input, path + ": " + command + " needs a symmetry file, found relations");
}

std::optional<Matrix> try_specialize(const Matrix& m, const Rational& at) {
  try {
    return m.specialized(at);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Pole) throw;
    return std::nullopt;
  }
}

std::optional<Rational> try_specialize(const RatFun& x, const Rational& at) {
  if (x.denominator()(at) == 0) return std::nullopt;
  return specialize(x, at);
}

bool pairwise_distinct_nonzero(const std::vector<Rational>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] == 0) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (xs[i] == xs[j]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- check

void check_axioms(Report& rep, const SymmetryFile& file, const std::optional<Matrix>& special,
                  const std::optional<std::vector<Rational>>& values) {
  const auto& ev = file.eigenvalues;
  const bool classical_ok = special && values && pairwise_distinct_nonzero(*values);
  auto v = [&](std::size_t i) { return RatFun((*values)[i]); };
  const std::string na = "n/a";

  if (file.kind == SymmetryKind::Hecke) {
    if (ev.size() != 2) throw Error(ErrorCode::Input, "kind hecke needs exactly two eigenvalues");
    const bool ok = ev[0] != ev[1] && check_hecke(file.matrix, ev[0], ev[1]);
    rep.generic()["hecke"] = ok;
    if (!ok) rep.fail("hecke");
    std::string c = na;
    if (classical_ok) {
      const bool cok = check_hecke(*special, v(0), v(1));
      rep.classical()["hecke"] = cok;
      c = pass(cok);
    } else {
      rep.classical()["hecke"] = nullptr;
    }
    row(rep.text, "hecke", pass(ok), c);
  } else if (file.kind == SymmetryKind::BirmanWenzl) {
    if (ev.size() != 3) {
      throw Error(ErrorCode::Input, "kind birman-wenzl needs exactly three eigenvalues");
    }
    const bool distinct = ev[0] != ev[1] && ev[0] != ev[2] && ev[1] != ev[2];
    if (!distinct) {
      rep.fail("cubic");
      row(rep.text, "cubic", "FAIL", na);
      return;
    }
    const BWReport bw = check_bw(file.matrix, ev[0], ev[1], ev[2]);
    auto& g = rep.generic();
    g["cubic"] = bw.cubic;
    g["contraction_a"] = bw.contraction_a;
    g["contraction_b"] = bw.contraction_b;
    g["a"] = bw.a ? Json(bw.a->to_string()) : Json(nullptr);
    g["b"] = bw.b ? Json(bw.b->to_string()) : Json(nullptr);
    g["formula_consistent"] = bw.formula_consistent;
    if (!bw.cubic) rep.fail("cubic");
    if (!bw.contraction_a) rep.fail("contraction-a");
    if (!bw.contraction_b) rep.fail("contraction-b");
    if (bw.contraction_a && bw.contraction_b && !bw.formula_consistent) rep.fail("bw-constants");

    std::optional<BWReport> cbw;
    if (classical_ok) cbw = check_bw(*special, v(0), v(1), v(2));
    auto& c = rep.classical();
    c["cubic"] = cbw ? Json(cbw->cubic) : Json(nullptr);
    c["contraction_a"] = cbw ? Json(cbw->contraction_a) : Json(nullptr);
    c["contraction_b"] = cbw ? Json(cbw->contraction_b) : Json(nullptr);
    auto col = [&](bool BWReport::*field) { return cbw ? pass((*cbw).*field) : na; };
    row(rep.text, "cubic", pass(bw.cubic), col(&BWReport::cubic));
    row(rep.text, "contraction a", pass(bw.contraction_a), col(&BWReport::contraction_a));
    row(rep.text, "contraction b", pass(bw.contraction_b), col(&BWReport::contraction_b));
    row(rep.text, "a", bw.a ? bw.a->to_string() : "undefined",
        cbw && cbw->a ? cbw->a->to_string() : na);
    row(rep.text, "b", bw.b ? bw.b->to_string() : "undefined",
        cbw && cbw->b ? cbw->b->to_string() : na);
    row(rep.text, "a, b formulas", pass(bw.formula_consistent), "");
  }
}

Report cmd_check(const std::string& path, const Rational& at) {
  Report rep("check", path);
  const SymmetryFile file = require_symmetry(load_input(path), path, "check");
  const std::string at_s = to_string(at);
  rep.classical()["at"] = at_s;
  rep.text << "check " << path << " (n = " << file.n << ", kind " << to_string(file.kind) << ")\n";
  row(rep.text, "", "generic q", "q = " + at_s);

  const bool braid = check_braid(file.matrix);
  rep.generic()["braid"] = braid;
  if (!braid) rep.fail("braid");
  const auto special = try_specialize(file.matrix, at);
  rep.classical()["braid"] = special ? Json(check_braid(*special)) : Json(nullptr);
  row(rep.text, "braid", pass(braid),
      special ? pass(rep.classical()["braid"].get<bool>()) : "pole");

  std::optional<std::vector<Rational>> values(std::in_place);
  for (const auto& x : file.eigenvalues) {
    const auto v = try_specialize(x, at);
    if (!v) {
      values.reset();
      break;
    }
    values->push_back(*v);
  }
  rep.generic()["eigenvalues"] = strings(file.eigenvalues);
  std::vector<std::string> value_strings;
  if (values) {
    for (const auto& v : *values) value_strings.push_back(to_string(v));
    rep.classical()["eigenvalues"] = value_strings;
  } else {
    rep.classical()["eigenvalues"] = nullptr;
  }
  row(rep.text, "eigenvalues", join(strings(file.eigenvalues)),
      values ? join(value_strings) : "pole");

  std::optional<Symmetry> sym;
  try {
    sym = file.to_symmetry();
  } catch (const SpectrumError& e) {
    rep.fail(std::string("spectrum: ") + e.what());
  }
  rep.generic()["spectrum"] = sym.has_value();
  rep.generic()["eigenspace_dims"] = sym ? Json(sym->eigenspace_dims()) : Json(nullptr);
  std::vector<std::size_t> special_dims;
  if (special && values) {
    for (const auto& v : *values) special_dims.push_back(kernel(special->shifted(RatFun(v))).dim());
    rep.classical()["eigenspace_dims"] = special_dims;
  } else {
    rep.classical()["eigenspace_dims"] = nullptr;
  }
  row(rep.text, "spectrum", pass(sym.has_value()), "");
  row(rep.text, "eigenspace dims", sym ? join(sym->eigenspace_dims()) : "-",
      special && values ? join(special_dims) : "-");

  check_axioms(rep, file, special, values);

  rep.json["verdict"] = rep.failed() ? "FAIL" : "PASS";
  rep.text << "verdict: " << rep.json["verdict"].get<std::string>() << "\n";
  if (rep.failed()) {
    for (const auto& f : rep.json["failures"]) rep.text << "failed: " << f.get<std::string>() << "\n";
    rep.exit = kCheckFailed;
  }
  return rep;
}

// ---------------------------------------------------------------- dims

struct DimsArgs {
  std::size_t max_degree = 4;
  std::size_t algebra = 1;
  std::string classical_at = "1";
  bool koszul = false;
  std::size_t max_ambient = kDefaultTensorBound;
};

Json situations(const std::vector<DegreeSituation>& ws) {
  Json out = Json::array();
  for (const auto& d : ws) out.push_back(d.well_situated);
  return out;
}

Report cmd_dims(const std::string& path, const DimsArgs& args) {
  Report rep("dims", path);
  const Rational at = parse_rational(args.classical_at);
  const InputFile input = load_input(path);
  FlatnessOptions options{at, args.koszul, HilbertOptions{args.max_ambient}};
  rep.classical()["at"] = to_string(at);

  QuadraticPresentation p;
  std::optional<Symmetry> sym;
  std::size_t m = 0;
  std::string title;
  if (const auto* file = std::get_if<SymmetryFile>(&input)) {
    try {
      sym = file->to_symmetry();
    } catch (const SpectrumError& e) {
      rep.fail(std::string("spectrum: ") + e.what());
      rep.json["verdict"] = "FAIL";
      rep.text << "dims " << path << ": declared spectrum fails: " << e.what() << "\n";
      rep.exit = kCheckFailed;
      return rep;
    }
    if (args.algebra < 1 || args.algebra > sym->eigenvalues.size()) {
      throw Error(ErrorCode::Input, "--algebra must be between 1 and " +
                                        std::to_string(sym->eigenvalues.size()));
    }
    m = args.algebra - 1;
    p = eigen_presentation(*sym, m, at);
    rep.generic()["algebra"] = args.algebra;
    rep.generic()["omitted_eigenvalue"] = sym->eigenvalues[m].to_string();
    title = "(V, J_" + std::to_string(args.algebra) + "), J_" + std::to_string(args.algebra) +
            " = sum of the eigenspaces other than lambda = " + sym->eigenvalues[m].to_string();
  } else {
    const auto& rel = std::get<RelationsFile>(input);
    p = QuadraticPresentation::from_generators(rel.n, rel.generators);
    title = "(V, J), J spanned by " + std::to_string(rel.generators.rows()) + " given relations";
  }

  const FlatnessReport fr = flatness_report(p, args.max_degree, options);
  auto& g = rep.generic();
  auto& c = rep.classical();
  g["relations_dim"] = p.relations.dim();
  g["dims"] = fr.generic.dims;
  c["relations_dim"] = fr.limit.limit.dim();
  c["naive_rank"] = fr.limit.naive_dim;
  c["dropped"] = fr.limit.dropped;
  c["dims"] = fr.classical ? Json(fr.classical->dims) : Json(nullptr);

  std::optional<std::vector<DegreeSituation>> ws_generic;
  std::optional<std::vector<DegreeSituation>> ws_classical;
  if (sym) {
    const HilbertOptions ho{args.max_ambient};
    ws_generic = check_well_situated(sym->eigenspaces[m], p.relations, args.max_degree, ho);
    if (!fr.limit.dropped) {
      try {
        ws_classical = check_well_situated(limit_subspace(sym->eigenspaces[m], at).limit,
                                           fr.limit.limit, args.max_degree, ho);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotComplementary) throw;
      }
    }
  }
  g["well_situated"] = ws_generic ? situations(*ws_generic) : Json(nullptr);
  c["well_situated"] = ws_classical ? situations(*ws_classical) : Json(nullptr);

  rep.text << "dims " << path << ": " << title << "\n";
  row(rep.text, "degree", "generic q", "q = " + to_string(at));
  for (std::size_t k = 0; k <= args.max_degree; ++k) {
    std::string gen = std::to_string(fr.generic.dims[k]);
    std::string cls = fr.classical ? std::to_string(fr.classical->dims[k]) : "-";
    if (k >= 2 && ws_generic) {
      gen += (*ws_generic)[k - 2].well_situated ? "  well-situated" : "  NOT well-situated";
    }
    if (k >= 2 && ws_classical) {
      cls += (*ws_classical)[k - 2].well_situated ? "  well-situated" : "  NOT well-situated";
    }
    row(rep.text, std::to_string(k), gen, cls);
  }

  rep.json["verdict"] = to_string(fr.verdict);
  switch (fr.verdict) {
    case FlatnessVerdict::Flat:
      rep.text << "verdict: FLAT to degree " << args.max_degree << "\n";
      break;
    case FlatnessVerdict::NotFlat:
      for (auto k : fr.differing_degrees) rep.fail("dimension differs in degree " + std::to_string(k));
      rep.text << "verdict: NOT-FLAT\n";
      break;
    case FlatnessVerdict::NotADeformation:
      c["limit_basis"] = rows_json(fr.limit.limit.basis());
      rep.fail("specialized relations drop rank (" + std::to_string(fr.limit.naive_dim) + " < " +
               std::to_string(fr.limit.generic_dim) + ")");
      rep.text << "saturated limit at q = " << to_string(at) << ": "
               << fr.limit.limit.basis().to_string() << "\n";
      rep.text << "verdict: NOT-A-DEFORMATION\n";
      break;
  }
  if (fr.advisory) {
    rep.json["advisory"] = *fr.advisory;
    rep.text << "note: " << *fr.advisory << "\n";
  }
  for (const auto& f : rep.json["failures"]) rep.text << "failed: " << f.get<std::string>() << "\n";
  if (fr.verdict != FlatnessVerdict::Flat) rep.exit = kCheckFailed;
  return rep;
}

// ---------------------------------------------------------------- tower

Report cmd_tower(const std::string& path, std::size_t k_max, const std::string& at_text,
                 std::uint64_t seed, std::size_t max_work) {
  Report rep("tower", path);
  const Rational at = parse_rational(at_text);
  const SymmetryFile file = require_symmetry(load_input(path), path, "tower");
  Symmetry sym;
  try {
    sym = file.to_symmetry();
  } catch (const SpectrumError& e) {
    rep.fail(std::string("spectrum: ") + e.what());
    rep.json["verdict"] = "CRITERION-FAILED";
    rep.text << "tower " << path << ": declared spectrum fails: " << e.what() << "\n";
    rep.exit = kCheckFailed;
    return rep;
  }
  TowerOptions options;
  options.seed = seed;
  options.classical_at = at;
  options.closure.max_work = max_work;
  const TowerReport tr = tower_flatness(sym, k_max, options);

  auto& g = rep.generic();
  auto& c = rep.classical();
  g["random_point"] = to_string(tr.random_point);
  c["at"] = to_string(at);
  c["limits_complementary"] = tr.limits_complementary;
  Json gdims = Json::array(), cdims = Json::array(), gss = Json::array(), css = Json::array();
  rep.text << "tower " << path << " (seed " << seed << ", random point q0 = "
           << to_string(tr.random_point) << ")\n";
  row(rep.text, "k", "generic q", "q = " + to_string(at));
  for (const auto& d : tr.degrees) {
    gdims.push_back(d.generic_dim);
    cdims.push_back(d.classical_dim);
    gss.push_back(d.random.nondegenerate);
    css.push_back(d.classical.nondegenerate);
    row(rep.text, std::to_string(d.k),
        "dim " + std::to_string(d.generic_dim) +
            (d.random.nondegenerate ? "  semisimple@q0" : "  DEGENERATE@q0"),
        "dim " + std::to_string(d.classical_dim) +
            (d.classical.nondegenerate ? "  semisimple" : "  DEGENERATE"));
  }
  g["dims"] = gdims;
  g["semisimple_at_random_point"] = gss;
  c["dims"] = cdims;
  c["semisimple"] = css;
  if (tr.first_failure) rep.fail(*tr.first_failure);
  rep.json["verdict"] = tr.satisfied() ? "CRITERION-SATISFIED" : "CRITERION-FAILED";
  rep.text << "verdict: " << (tr.satisfied() ? "CRITERION SATISFIED" : "CRITERION FAILED")
           << " to k = " << k_max << "\n";
  if (tr.first_failure) {
    rep.text << "failed: " << *tr.first_failure << "\n";
    rep.exit = kCheckFailed;
  }
  return rep;
}

// ---------------------------------------------------------------- semigroup

Report cmd_semigroup(const std::string& path, std::size_t max_degree, const std::string& at_text,
                     std::size_t max_ambient) {
  Report rep("semigroup", path);
  const Rational at = parse_rational(at_text);
  const SymmetryFile file = require_symmetry(load_input(path), path, "semigroup");
  Symmetry sym;
  try {
    sym = file.to_symmetry();
  } catch (const SpectrumError& e) {
    rep.fail(std::string("spectrum: ") + e.what());
    rep.json["verdict"] = "FAIL";
    rep.text << "semigroup " << path << ": declared spectrum fails: " << e.what() << "\n";
    rep.exit = kCheckFailed;
    return rep;
  }
  const HilbertOptions ho{max_ambient};
  const auto perp = relations_perp(sym);
  const auto comm = relations_commutator(sym);
  const bool agree = perp.relation_space == comm.relation_space;
  const HilbertTable gdims = semigroup_dims(perp, max_degree, ho);

  std::vector<Subspace> limits;
  for (const auto& e : sym.eigenspaces) limits.push_back(limit_subspace(e, at).limit);
  const auto cperp = relations_perp(limits);
  const HilbertTable cdims = semigroup_dims(cperp, max_degree, ho);

  auto& g = rep.generic();
  auto& c = rep.classical();
  g["relations_dim"] = perp.relation_space.dim();
  g["constructions_agree"] = agree;
  g["dims"] = gdims.dims;
  c["at"] = to_string(at);
  c["relations_dim"] = cperp.relation_space.dim();
  c["dims"] = cdims.dims;

  rep.text << "semigroup " << path << ": relations in End(V) ⊗ End(V), ambient "
           << perp.relation_space.ambient_dim() << "\n";
  row(rep.text, "", "generic q", "q = " + to_string(at));
  row(rep.text, "relation dim", std::to_string(perp.relation_space.dim()),
      std::to_string(cperp.relation_space.dim()));
  row(rep.text, "perp = commutator", agree ? "yes" : "NO", "");
  for (std::size_t k = 0; k <= max_degree; ++k) {
    row(rep.text, "degree " + std::to_string(k), std::to_string(gdims.dims[k]),
        std::to_string(cdims.dims[k]));
  }
  if (!agree) rep.fail("perp and commutator constructions differ");
  for (std::size_t k = 0; k <= max_degree; ++k) {
    if (gdims.dims[k] != cdims.dims[k]) rep.fail("dimension differs in degree " + std::to_string(k));
  }
  rep.json["verdict"] = rep.failed() ? "NOT-FLAT" : "FLAT";
  rep.text << "verdict: " << rep.json["verdict"].get<std::string>() << " to degree " << max_degree
           << "\n";
  for (const auto& f : rep.json["failures"]) rep.text << "failed: " << f.get<std::string>() << "\n";
  if (rep.failed()) rep.exit = kCheckFailed;
  return rep;
}

// ---------------------------------------------------------------- files

std::string emit_entry(const std::string& name) {
  const CatalogEntry entry = catalog_get(name);
  if (entry.symmetry) return format_file(SymmetryFile::from_symmetry(*entry.symmetry));
  return format_file(RelationsFile{entry.n, *entry.relation_generators});
}

Report cmd_catalog_list() {
  Report rep("catalog list", "");
  Json entries = Json::array();
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_get(name);
    entries.push_back({{"name", e.name}, {"kind", to_string(e.kind)}, {"dim", e.n},
                       {"description", e.description}});
    rep.text << std::left << std::setw(10) << e.name << std::setw(14) << to_string(e.kind) << "n = "
             << e.n << "  " << e.description << "\n";
  }
  rep.generic()["entries"] = entries;
  rep.json["verdict"] = "OK";
  return rep;
}

std::string specialize_file(const std::string& path, const Rational& at) {
  const InputFile input = load_input(path);
  if (const auto* file = std::get_if<SymmetryFile>(&input)) {
    SymmetryFile out = *file;
    out.matrix = file->matrix.specialized(at);
    for (auto& x : out.eigenvalues) x = RatFun(specialize(x, at));
    return format_file(out);
  }
  RelationsFile out = std::get<RelationsFile>(input);
  out.generators = out.generators.specialized(at);
  return format_file(out);
}

void write_or_print(const std::string& content, const std::string& target, std::ostream& out) {
  if (target.empty()) {
    out << content;
    return;
  }
  std::ofstream file(target, std::ios::binary);
  if (!file || !(file << content)) throw Error(ErrorCode::Input, "cannot write " + target);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"ybx: exact checks for Yang-Baxter symmetries and their quadratic algebras", "ybx"};
  app.require_subcommand(1);
  bool json = false;
  std::uint64_t seed = 0x5EED;
  app.add_flag("--json", json, "Print the machine-readable report");
  app.add_option("--seed", seed, "Seed for randomized checks")->capture_default_str();

  std::string file, at = "1", output, name;
  std::size_t max_ambient = kDefaultTensorBound;
  std::size_t max_work = ClosureOptions{}.max_work;

  auto* check = app.add_subcommand("check", "Braid, spectrum and Hecke / Birman-Wenzl axioms");
  check->add_option("FILE", file, "Symmetry file")->required();
  check->add_option("--classical-at", at, "Special point of the family")->capture_default_str();

  DimsArgs dims_args;
  auto* dims = app.add_subcommand(
      "dims", "Graded dimensions of (V, J_M) at generic q and at the special point");
  dims->add_option("FILE", file, "Symmetry or relations file")->required();
  dims->add_option("--max-degree,-K", dims_args.max_degree, "Highest degree")->capture_default_str();
  dims->add_option("--algebra,-M", dims_args.algebra,
                   "1-based eigenvalue index M; J_M is the sum of the other eigenspaces")
      ->capture_default_str();
  dims->add_option("--classical-at", dims_args.classical_at, "Special point")->capture_default_str();
  dims->add_flag("--koszul", dims_args.koszul, "Declare the special fibre Koszul");
  dims->add_option("--max-ambient", dims_args.max_ambient, "Bound on n^K")->capture_default_str();

  std::size_t tower_k = 3;
  auto* tower = app.add_subcommand("tower", "Tower algebras A_k: dimensions and trace forms");
  tower->add_option("FILE", file, "Symmetry file")->required();
  tower->add_option("-k", tower_k, "Largest tensor degree")->capture_default_str();
  tower->add_option("--classical-at", at, "Special point")->capture_default_str();
  tower->add_option("--max-work", max_work, "Bound on side^2 * dim during closure")
      ->capture_default_str();

  std::size_t semigroup_k = 2;
  auto* semigroup = app.add_subcommand("semigroup", "Quantum semigroup relations on End(V)");
  semigroup->add_option("FILE", file, "Symmetry file")->required();
  semigroup->add_option("--max-degree,-K", semigroup_k, "Highest degree")->capture_default_str();
  semigroup->add_option("--classical-at", at, "Special point")->capture_default_str();
  semigroup->add_option("--max-ambient", max_ambient, "Bound on (n^2)^K")->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "Built-in examples");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "List catalog entries");
  auto* emit = catalog->add_subcommand("emit", "Write an entry as an input file");
  emit->add_option("NAME", name, "Entry name")->required();
  emit->add_option("-o,--output", output, "Output path (default stdout)");

  auto* special = app.add_subcommand("specialize", "Substitute q = A into a file");
  special->add_option("FILE", file, "Symmetry or relations file")->required();
  special->add_option("--at", at, "Value of q")->required();
  special->add_option("-o,--output", output, "Output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  std::string command;
  std::string guard_flag;
  auto finish = [&](Report rep) {
    if (json) {
      out << rep.json.dump(2) << "\n";
    } else {
      out << rep.text.str();
    }
    return rep.exit;
  };
  auto refuse = [&](const std::string& verdict, const std::string& message, int code) {
    err << message << "\n";
    if (json) {
      Report rep(command, file);
      rep.json["verdict"] = verdict;
      rep.fail(message);
      out << rep.json.dump(2) << "\n";
    }
    return code;
  };

  try {
    if (check->parsed()) {
      command = "check";
      return finish(cmd_check(file, parse_rational(at)));
    }
    if (dims->parsed()) {
      command = "dims";
      guard_flag = "--max-ambient";
      return finish(cmd_dims(file, dims_args));
    }
    if (tower->parsed()) {
      command = "tower";
      guard_flag = "--max-work";
      return finish(cmd_tower(file, tower_k, at, seed, max_work));
    }
    if (semigroup->parsed()) {
      command = "semigroup";
      guard_flag = "--max-ambient";
      return finish(cmd_semigroup(file, semigroup_k, at, max_ambient));
    }
    if (list->parsed()) {
      command = "catalog list";
      return finish(cmd_catalog_list());
    }
    if (emit->parsed()) {
      command = "catalog emit";
      write_or_print(emit_entry(name), output, out);
      return kOk;
    }
    if (special->parsed()) {
      command = "specialize";
      write_or_print(specialize_file(file, parse_rational(at)), output, out);
      return kOk;
    }
  } catch (const ResourceGuardError& e) {
    std::string message = std::string("resource guard: ") + e.what();
    if (!guard_flag.empty()) message += "; raise it with " + guard_flag;
    return refuse("RESOURCE-GUARD", message, kResourceGuard);
  } catch (const Error& e) {
    return refuse("INPUT-ERROR", std::string("error: ") + e.what(), kInputError);
  }
  return kInputError;
}

}  // namespace ybx::cli
