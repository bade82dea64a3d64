// Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "oracle.hpp"
#include "support.hpp"
#include "ybx/catalog.hpp"
#include "ybx/io.hpp"
#include "ybx/quadratic.hpp"
#include "ybx/semigroup.hpp"
#include "ybx/tensor_ops.hpp"
#include "ybx/tower.hpp"

using namespace ybx;
using ybx::testing::Gen;
namespace fs = std::filesystem;

namespace {

const RatFun q = RatFun::q();
const RatFun one(1L);
const RatFun zero;
using Dims = std::vector<std::size_t>;

// Collects the first failed expectation of a criterion.
struct Check {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

std::string show(const Dims& d) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out;
}

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.failure.empty() && elapsed >= limit_s) {
    c.failure = "took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_s) + " s";
  }
  const bool ok = c.failure.empty();
  if (!ok) ++failures;
  std::printf("criterion %2d: %s  %-44s %7.3f s / %g s%s%s\n", id, ok ? "PASS" : "FAIL", title,
              elapsed, limit_s, ok ? "" : "  -- ", c.failure.c_str());
  std::fflush(stdout);
}

Symmetry glq(std::size_t n) { return eigen_decompose(glq_matrix(n), {q, -q.inverse()}); }

// Oracle Hilbert dimensions of the family at a rational point.
Dims oracle_dims(const Matrix& generators, std::size_t n, std::size_t k_max, const oracle::Q& at) {
  const auto g = oracle::specialize(generators, at);
  Dims out = {1, n};
  for (std::size_t k = 2; k <= k_max; ++k) out.push_back(oracle::hilbert_dim(g, n, k));
  return out;
}

// Generic and q = 1 Hilbert dimensions of (V, J_m), each against the oracle.
void flat_dims(Check& c, const Symmetry& sym, std::size_t m, std::size_t k_max, const Dims& want) {
  const QuadraticPresentation p = eigen_presentation(sym, m, 1);
  const FlatnessReport f = flatness_report(p, k_max);
  c.expect(f.verdict == FlatnessVerdict::Flat, std::string("verdict ") + to_string(f.verdict));
  c.expect(f.generic.dims == want, "generic dims " + show(f.generic.dims));
  c.expect(f.classical && f.classical->dims == want, "classical dims differ");
  // 7/3 is not a root of any minor that matters here; q = 1 uses the saturated generators.
  c.expect(oracle_dims(p.generators, sym.n, k_max, oracle::Q(7, 3)) == want, "oracle at q=7/3");
  c.expect(oracle_dims(f.limit.limit.basis(), sym.n, k_max, oracle::Q(1)) == want,
           "oracle at q=1");
}

Subspace random_subspace(Gen& gen, std::size_t n) {
  const auto rows = static_cast<std::size_t>(gen.integer(0, static_cast<int>(n)));
  return Subspace::span(gen.rational_matrix(rows, n, 3, 0.3));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  criterion(1, "axiom suite", 30, [](Check& c) {
    for (std::size_t n : {2u, 3u}) {
      c.expect(check_braid(flip(n)), "flip braid");
      c.expect(check_braid(glq_matrix(n)), "glq braid");
      c.expect(check_hecke(glq_matrix(n), q, -q.inverse()), "glq Hecke");
    }
    const RatFun q2 = q * q;
    const BWReport bw = check_bw(so3_matrix(), q2, -q2.inverse(), (q2 * q2).inverse());
    c.expect(bw.all_pass(), "so3 BW axioms");
    c.expect(bw.a && *bw.a == bw.expected_a(), "so3 constant a");
    c.expect(bw.b && *bw.b == bw.expected_b(), "so3 constant b");
  });

  criterion(2, "quantum plane flat, well situated", 5, [](Check& c) {
    const Symmetry g = glq(2);
    flat_dims(c, g, 0, 4, {1, 2, 3, 4, 5});
    for (const auto& d : check_well_situated(g.eigenspaces[0], g.eigenspaces[1], 4)) {
      c.expect(d.well_situated, "not well situated in degree " + std::to_string(d.degree));
    }
  });

  criterion(3, "quantum exterior algebra flat", 5,
            [](Check& c) { flat_dims(c, glq(2), 1, 4, {1, 2, 1, 0, 0}); });

  criterion(4, "glq(3) polynomial dims", 60,
            [](Check& c) { flat_dims(c, glq(3), 0, 3, {1, 3, 6, 10}); });

  criterion(5, "tower criterion for glq(2)", 60, [](Check& c) {
    const Symmetry g = glq(2);
    const TowerReport r = tower_flatness(g, 3);
    c.expect(r.satisfied(), "criterion failed: " + r.first_failure.value_or(""));
    c.expect(r.degrees.size() == 2, "degree count");
    const std::size_t want[] = {2, 5};
    for (std::size_t i = 0; i < r.degrees.size() && i < 2; ++i) {
      const TowerDegree& d = r.degrees[i];
      c.expect(d.generic_dim == want[i] && d.classical_dim == want[i], "tower dims");
      c.expect(d.classical.nondegenerate && d.random.nondegenerate, "trace form degenerate");
      for (const oracle::Q& at : {oracle::Q(1), oracle::Q(r.random_point)}) {
        const auto s = oracle::specialize(g.matrix, at);
        std::vector<oracle::Mat> placed;
        for (std::size_t j = 1; j < d.k; ++j) placed.push_back(oracle::placed(s, 2, d.k, j));
        c.expect(oracle::closure_dim(placed, oracle::power(2, d.k)) == want[i], "oracle closure");
      }
    }
  });

  criterion(6, "semigroup constructions", 60, [](Check& c) {
    for (const Symmetry& sym : {eigen_decompose(flip(2), {one, -one}), glq(2)}) {
      const auto perp = relations_perp(sym);
      c.expect(perp.relation_space == relations_commutator(sym).relation_space,
               "perp and commutator differ");
      c.expect(perp.relation_space.dim() == 6, "relation dim");
      std::vector<Subspace> limits;
      for (const auto& e : sym.eigenspaces) limits.push_back(limit_subspace(e, 1).limit);
      c.expect(semigroup_dims(perp, 2).dims == Dims{1, 4, 10}, "generic dims");
      c.expect(semigroup_dims(relations_perp(limits), 2).dims == Dims{1, 4, 10}, "q=1 dims");
    }
  });

  criterion(7, "L + K decomposition, 25 commuting pairs", 10, [](Check& c) {
    Gen gen(0x1C);
    for (int trial = 0; trial < 25; ++trial) {
      Matrix b;
      do {
        b = gen.rational_matrix(5, 5, 4, 0.2);
      } while (rank(b) != 5);
      const Matrix bi = inverse(b);
      std::vector<Matrix> ops;
      std::vector<RatFun> lambdas;
      for (int i = 0; i < 2; ++i) {
        std::vector<RatFun> d;
        for (int j = 0; j < 5; ++j) d.push_back(RatFun(static_cast<long>(gen.integer(-2, 2))));
        ops.push_back(b * Matrix::diagonal(d) * bi);
        lambdas.push_back(d[static_cast<std::size_t>(gen.integer(0, 4))]);
      }
      c.expect(ops[0] * ops[1] == ops[1] * ops[0], "operators do not commute");
      c.expect(lk_decomposition(ops, lambdas).is_direct, "not direct, trial " + std::to_string(trial));
    }
  });

  criterion(8, "torsion handling", 1, [](Check& c) {
    const LimitResult r = limit_subspace(nonflat_generators(), 1);
    c.expect(r.dropped, "drop not reported");
    c.expect(r.limit == Subspace::span(4, {{zero, one, zero, zero}, {zero, zero, one, zero}}),
             "wrong saturated limit");
    const FlatnessReport f =
        flatness_report(QuadraticPresentation::from_generators(2, nonflat_generators()), 4);
    c.expect(f.verdict == FlatnessVerdict::NotADeformation, "verdict");
  });

  criterion(9, "Hilbert dims vs brute-force oracle", 120, [](Check& c) {
    Gen gen(0x0AC1E);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = trial % 2 == 0 ? 2 : 3;
      const auto d = static_cast<std::size_t>(gen.integer(1, static_cast<int>(n * n) - 1));
      const Matrix g = gen.rational_matrix(d, n * n, 3, 0.4);
      c.expect(hilbert_dims(Subspace::span(g), 4).dims == oracle_dims(g, n, 4, oracle::Q(0)),
               "mismatch in trial " + std::to_string(trial));
    }
  });

  criterion(10, "annihilator duality, 50 pairs", 10, [](Check& c) {
    Gen gen(0xD0A1);
    for (int trial = 0; trial < 50; ++trial) {
      const auto n = static_cast<std::size_t>(gen.integer(2, 7));
      const Subspace l = random_subspace(gen, n), m = random_subspace(gen, n);
      c.expect(annihilator(subspace_sum(l, m)) ==
                   subspace_intersect(annihilator(l), annihilator(m)),
               "sum duality");
      c.expect(annihilator(subspace_intersect(l, m)) ==
                   subspace_sum(annihilator(l), annihilator(m)),
               "intersection duality");
    }
  });

  criterion(11, "cabling glq(2) into blocks of 2", 60, [](Check& c) {
    const Matrix cable = cable_symmetry(glq_matrix(2), 2);
    const Matrix s1 = place(cable, {4, 3, 1});
    const Matrix s2 = place(cable, {4, 3, 2});
    c.expect(s1.rows() == 64, "blocks do not act on V^6");
    c.expect(s1 * s2 * s1 == s2 * s1 * s2, "braid relation on blocks");
  });

  criterion(12, "CLI round trip and exit codes", 5, [](Check& c) {
    const fs::path dir = fs::temp_directory_path() / "ybx_acceptance";
    fs::create_directories(dir);
    const fs::path file = dir / "glq2.json";
    c.expect(run_cli({"catalog", "emit", "glq2", "-o", file.string()}) == cli::kOk, "emit");
    const std::string text = slurp(file);
    c.expect(format_file(load_input(file.string())) == text, "round trip not byte-identical");
    c.expect(run_cli({"check", file.string()}) == cli::kOk, "pass case");

    auto j = nlohmann::ordered_json::parse(text);
    j["matrix"][1][2] = "2";
    std::ofstream(dir / "typo.json") << j.dump();
    c.expect(run_cli({"check", (dir / "typo.json").string()}) == cli::kCheckFailed,
             "failing-axiom case");

    std::ofstream(dir / "broken.json") << "{\"dim\": 2, \"matrix\": [";
    c.expect(run_cli({"check", (dir / "broken.json").string()}) == cli::kInputError,
             "malformed case");
  });

  const double total =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of 12 criteria failed, %.3f s total\n", failures, total);
  return failures == 0 ? 0 : 1;
}
