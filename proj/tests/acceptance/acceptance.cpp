// Acceptance checks: one PASS/FAIL line per criterion.
//
//   acceptance [--golden-dir DIR] [--allow-fail N]... [--only N]...
//
// Exit status is 0 when every failing criterion was listed with --allow-fail.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "nilherm/catalog/catalog.hpp"
#include "nilherm/cli/cli.hpp"
#include "nilherm/invariants/invariants.hpp"
#include "nilherm/soliton/search.hpp"
#include "support/support.hpp"

using namespace nilherm;
using namespace nilherm::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(3);
  s << x;
  return s.str();
}

const std::vector<Gaussian>& quartic_samples() {
  static const std::vector<Gaussian> t = {0, 1, 2, Gaussian::i(), Gaussian(1, 1), Gaussian(Rational(-3, 2), Rational(2, 3))};
  return t;
}

/// f == c g for the c read off the first term of g; returns c when it exists and is nonzero.
std::optional<Gaussian> multiple_of(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero() || f.is_zero()) return std::nullopt;
  const auto& [e, lead] = *g.terms().begin();
  const Gaussian c = f.coefficient(e) / lead;
  if (is_zero(c) || !(f == c * g)) return std::nullopt;
  return c;
}

PfaffianForm complex_form(const std::string& name, const Gaussian& t) {
  return pfaffian_form(two_step_presentation(catalog_get(name, t).doc.complex_algebra()));
}

Outcome pfaffian_82() {
  Outcome o;
  double worst = 0;
  for (const Gaussian t : {Gaussian(0), Gaussian(1), Gaussian(2), Gaussian(1, 1)}) {
    const auto start = Clock::now();
    const auto f = complex_form("lambda82", t);
    const double dt = seconds_since(start);
    worst = std::max(worst, dt);
    o.require(multiple_of(f.poly, quartic_family(t)).has_value(), "t = " + to_string(t) + ": not a multiple of f_t");
    o.require(dt < 1, "t = " + to_string(t) + ": took " + fmt(dt) + " s");
  }
  if (o.pass) o.detail = "t in {0, 1, 2, 1+1i}; slowest " + fmt(worst) + " s";
  return o;
}

Outcome binary_invariants() {
  Outcome o;
  for (const auto& t : quartic_samples()) {
    const auto inv = binary_quartic_st(quartic_family(t), Convention::Plain);
    o.require(inv.s == 1 + 3 * t * t && inv.t == t - t.pow(3), "plain S, T wrong at t = " + to_string(t));
  }
  Rng rng(2024);
  for (int k = 0; k < 20; ++k) {
    MultiPoly f = quartic_family(quartic_samples()[k % quartic_samples().size()]);
    if (k % 2) f.add_term({3, 1}, random_gaussian(rng));
    const auto a = random_unimodular<Gaussian>(rng, 2);
    const auto x = binary_quartic_st(f, Convention::Binomial);
    const auto y = binary_quartic_st(substitute_linear(f, a), Convention::Binomial);
    o.require(x.s == y.s && x.t == y.t, "binomial S, T changed under substitution " + std::to_string(k));
  }
  if (o.pass) o.detail = "6 sample t exact; 20 unimodular substitutions";
  return o;
}

Outcome pfaffian_63() {
  Outcome o;
  for (const Gaussian t : {Gaussian(1), Gaussian(2), Gaussian::i(), Gaussian(Rational(1, 2), -1)}) {
    o.require(multiple_of(complex_form("lambda63", t).poly, cubic_family(t)).has_value(),
              "t = " + to_string(t) + ": not a multiple of f_t");
  }
  if (o.pass) o.detail = "t in {1, 2, 1i, 1/2-1i}";
  return o;
}

Outcome ternary_invariants() {
  Outcome o;
  for (const Gaussian t : {Gaussian(1), Gaussian(-2), Gaussian::i(), Gaussian(Rational(1, 3), 1)}) {
    const auto inv = ternary_cubic_st(cubic_family(t));
    o.require(inv.s == hesse_s(t) && inv.t == hesse_t(t), "closed forms fail at t = " + to_string(t));
    const auto pf = complex_form("lambda63", t);
    if (const auto c = multiple_of(pf.poly, cubic_family(t))) {
      const auto p = ternary_cubic_st(pf.poly);
      o.require(p.s == c->pow(4) * hesse_s(t) && p.t == c->pow(6) * hesse_t(t),
                "Pfaffian form invariants fail at t = " + to_string(t));
    }
  }
  Rng rng(77);
  for (int k = 0; k < 10; ++k) {
    MultiPoly f(3);
    for (unsigned i = 0; i <= 3; ++i)
      for (unsigned j = 0; i + j <= 3; ++j) f.add_term({i, j, 3 - i - j}, Gaussian(uniform_int(rng, -3, 3)));
    const auto a = random_unimodular<Gaussian>(rng, 3, 4);
    const auto x = ternary_cubic_st(f), y = ternary_cubic_st(substitute_linear(f, a));
    o.require(x.s == y.s && x.t == y.t, "S, T changed under substitution " + std::to_string(k));
  }
  if (o.pass) o.detail = "Hesse closed forms at 4 t; 10 unimodular substitutions";
  return o;
}

Outcome real_form() {
  Outcome o;
  const auto start = Clock::now();
  for (auto conv : {Convention::Plain, Convention::Binomial}) {
    const auto inv = binary_quartic_st(complex_form("lambda82", Gaussian(1, 1)).poly, conv);
    const auto abs = absolute_invariant(inv);
    o.require(abs.kind == AbsoluteInvariant::Kind::Finite && !abs.value.is_real(),
              to_string(conv) + ": S^3/T^2 at t = 1+1i is " + to_string(abs));
    o.require(real_form_obstruction(inv) == ObstructionVerdict::NoRealForm, to_string(conv) + ": verdict at 1+1i");
    for (const Gaussian t : {Gaussian(-3), Gaussian(Rational(-1, 2)), Gaussian(0), Gaussian(Rational(1, 3)),
                             Gaussian(1), Gaussian(2), Gaussian(5)}) {
      const auto r = binary_quartic_st(complex_form("lambda82", t).poly, conv);
      o.require(real_form_obstruction(r) == ObstructionVerdict::Inconclusive,
                to_string(conv) + ": verdict at t = " + to_string(t));
    }
  }
  const double dt = seconds_since(start);
  o.require(dt < 1, "took " + fmt(dt) + " s");
  if (o.pass) {
    const auto inv = binary_quartic_st(quartic_family(Gaussian(1, 1)), Convention::Plain);
    o.detail = "t = 1+1i: S^3/T^2 = " + to_string(absolute_invariant(inv)) + "; rational t inconclusive; " +
               fmt(dt) + " s";
  }
  return o;
}

struct HermitianCase {
  std::string label;
  LieAlgebra algebra;
  AlmostComplexStructure j;
};

std::vector<HermitianCase> bi_invariant_cases() {
  const auto h3 = catalog_get("heisenberg3").doc.real_algebra();
  const auto iw = catalog_get("iwasawa").doc;
  const auto anti = anticomplexify(h3);
  const auto c = complexify(h3);
  return {{"iwasawa", iw.real_algebra(), iw.structure()},
          {"conjugate(anticomplexify(h3))", conjugate_bracket(default_conjugation_split(anti.algebra, anti.j)), anti.j},
          {"complexify(h3)", c.algebra, c.j}};
}

Outcome bi_invariant_agreement() {
  Outcome o;
  const auto start = Clock::now();
  Rng rng(606);
  auto cases = bi_invariant_cases();
  const auto aff = catalog_get("aff_c").doc;
  cases.push_back({"aff_c", aff.real_algebra(), aff.structure()});
  int instances = 0;
  for (const auto& c : cases) {
    o.require(classify(c.algebra, c.j).in_C, c.label + ": J is not bi-invariant");
    const bool two_step = nilpotency(c.algebra).two_step();
    for (int k = 0; k < 5; ++k) {
      const auto ip = random_hermitian_metric(rng, c.j);
      const auto g2 = gray_check(curvature(c.algebra, ip), c.j, GrayIdentity::G2);
      const bool qk = quasi_kahler_check(c.algebra, ip, j_flip(c.algebra, c.j, ip)).holds;
      const std::string where = c.label + ", metric " + std::to_string(k);
      o.require(g2.holds == two_step && qk == two_step, where + ": g2, 2-step and quasi-Kaehler(J-) disagree");
      if (c.label == "aff_c") {
        o.require(!g2.holds && g2.witness.has_value(), where + ": expected a G2 witness");
        o.require(!qk, where + ": J- should not be quasi-Kaehler");
      } else {
        o.require(g2.holds && qk, where + ": G2 or quasi-Kaehler(J-) fails");
      }
      ++instances;
    }
  }
  const double dt = seconds_since(start);
  o.require(dt < 5, "took " + fmt(dt) + " s");
  if (o.pass) o.detail = std::to_string(instances) + " instances agree; " + fmt(dt) + " s";
  return o;
}

bool quarter_formula(const LieAlgebra& a, const AlmostComplexStructure& j, const InnerProduct& ip) {
  const auto nabla = levi_civita(a, ip);
  const auto frame = holomorphic_frame(j);
  for (const auto& zi : frame)
    for (const auto& zj : frame)
      for (const auto& zk : frame) {
        const auto lhs = complex_curvature(a, nabla, zi, zj, zk);
        const auto rhs = scale(Gaussian(Rational(1, 4)), complex_bracket(a, zk, complex_bracket(a, zi, zj)));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

Outcome parallelisable_curvature() {
  Outcome o;
  const auto iw = catalog_get("iwasawa").doc;
  o.require(quarter_formula(iw.real_algebra(), iw.structure(), iw.metric_or_identity()), "identity metric");
  Rng rng(707);
  for (int k = 0; k < 3; ++k) {
    o.require(quarter_formula(iw.real_algebra(), iw.structure(), random_hermitian_metric(rng, iw.structure())),
              "Hermitian metric " + std::to_string(k));
  }
  // a 3-step case, where the right-hand side is not identically zero
  BracketTensor<Rational> t(4);
  t.set(0, 1, {0, 0, 1, 0});
  t.set(0, 2, {0, 0, 0, 1});
  const auto c = complexify(LieAlgebra::validate(t));
  o.require(quarter_formula(c.algebra, c.j, InnerProduct::identity(8)), "complexified filiform algebra");
  if (o.pass) o.detail = "iwasawa (identity + 3 Hermitian metrics), complexified 3-step control";
  return o;
}

Outcome ricci_solitons() {
  Outcome o;
  const auto h3 = catalog_get("heisenberg3").doc.real_algebra();
  const auto id3 = InnerProduct::identity(3);
  o.require(ricci(h3, id3) == Matrix<Rational>::diagonal({Rational(-1, 2), Rational(-1, 2), Rational(1, 2)}),
            "Ric(h3)");
  o.require(ricci(h3, id3) == ricci_orthogonal_frame(h3, id3), "Ric(h3) against the frame formula");
  const auto cert = nilsoliton_check(h3, id3);
  o.require(cert && cert->c == Rational(-3, 2) && cert->d == Matrix<Rational>::diagonal({1, 1, 2}),
            "nilsoliton certificate of h3");

  Rng rng(808);
  for (int k = 0; k < 4; ++k) {
    const auto ip = k == 0 ? id3 : random_metric(rng, 3);
    const auto r = ricci(h3, ip);
    Matrix<Rational> doubled(6, 6);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) doubled(i, j) = doubled(3 + i, 3 + j) = 2 * r(i, j);
    o.require(interleaved_to_blocks(ricci(complexify(h3).algebra, complexified_metric(ip))) == doubled,
              "block doubling, metric " + std::to_string(k));
  }

  std::vector<std::string> checked;
  for (const auto& info : catalog_list()) {
    const auto doc = catalog_get(info.name).doc;
    if (!doc.is_real() || !doc.j || !nilpotency(doc.real_algebra()).nilpotent) continue;
    const auto f = classify(doc.real_algebra(), doc.structure());
    if (!f.in_C && !f.in_Cbar) continue;
    const auto ip = doc.metric_or_identity();
    const bool minimal = minimal_check(doc.real_algebra(), ip, doc.structure()).has_value();
    const bool soliton = nilsoliton_check(doc.real_algebra(), ip).has_value();
    o.require(minimal == soliton, info.name + ": minimal and nilsoliton verdicts differ");
    checked.push_back(info.name);
  }
  if (o.pass) {
    o.detail = "Ric(h3), c = -3/2, D = diag(1,1,2), doubling; minimal = nilsoliton on";
    for (const auto& n : checked) o.detail += " " + n;
  }
  return o;
}

AlmostComplexStructure random_conjugate_j(Rng& rng, std::size_t n, Matrix<Rational>& p) {
  p = random_invertible(rng, n);
  return AlmostComplexStructure(p * AlmostComplexStructure::standard(n).matrix() * inverse(p));
}

Outcome decomposition() {
  Outcome o;
  Rng rng(909);
  for (int k = 0; k < 100; ++k) {
    Matrix<Rational> p;
    const auto j = k % 2 ? random_conjugate_j(rng, 6, p) : AlmostComplexStructure::standard(6);
    const auto b = random_bracket(rng, 6);
    const auto d = decompose_bracket(b, j);
    const std::string where = "sample " + std::to_string(k);
    o.require(d.ab + d.c + d.cbar == b, where + ": parts do not re-sum");
    o.require(classify(d.ab, j).in_ab && classify(d.c, j).in_C && classify(d.cbar, j).in_Cbar,
              where + ": a part leaves its subspace");
    const BracketTensor<Rational> zero(6);
    const auto a = decompose_bracket(d.ab, j), c = decompose_bracket(d.c, j), cb = decompose_bracket(d.cbar, j);
    o.require(a.ab == d.ab && a.c == zero && a.cbar == zero && c.ab == zero && c.c == d.c && c.cbar == zero &&
                  cb.ab == zero && cb.c == zero && cb.cbar == d.cbar,
              where + ": projections are not idempotent");
  }
  if (o.pass) o.detail = "100 random brackets, dim 6 (half with a random J)";
  return o;
}

Outcome conjugation() {
  Outcome o;
  Rng rng(1010);
  int exchanges = 0;
  for (int k = 0; k < 50; ++k) {
    Matrix<Rational> p;
    const auto j = random_conjugate_j(rng, 6, p);
    const auto base = act_gl(LieAlgebra::trusted(random_two_step_bracket(rng, 4, 2)), p);
    const auto d = decompose_bracket(base.constants(), j);
    const std::string where = "sample " + std::to_string(k);
    for (const auto* t : {&base.constants(), &d.c, &d.cbar}) {
      const auto a = LieAlgebra::trusted(*t);
      const auto once = conjugate_bracket(vpq_split(a, j, p, 4));
      o.require(conjugate_bracket(vpq_split(once, j, p, 4)) == a, where + ": not an involution");
      const auto before = classify(a, j), after = classify(once, j);
      o.require(before.in_C == after.in_Cbar && before.in_Cbar == after.in_C, where + ": in_C, in_Cbar not exchanged");
      exchanges += before.in_C || before.in_Cbar;
    }
  }
  o.require(exchanges >= 50, "too few samples in V(C) or V(Cbar)");
  const auto h3 = catalog_get("heisenberg3").doc.real_algebra();
  std::vector<LieAlgebra> inputs = {h3};
  while (inputs.size() < 11) {
    const std::size_t p = uniform_int(rng, 2, 4), q = uniform_int(rng, 1, 2);
    const auto a = act_gl(LieAlgebra::trusted(random_two_step_bracket(rng, p, q)), random_invertible(rng, p + q));
    if (nilpotency(a).two_step()) inputs.push_back(a);
  }
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    const auto c = complexify(inputs[k]);
    o.require(anticomplexify(inputs[k]).algebra == conjugate_bracket(default_conjugation_split(c.algebra, c.j)),
              "anticomplexify != conjugate o complexify on input " + std::to_string(k));
  }
  if (o.pass) o.detail = "50 random brackets in V_pq; anticomplexify = conjugate o complexify on h3 + 10 random";
  return o;
}

Outcome skt() {
  Outcome o;
  Rng rng(1111);
  std::vector<std::string> negatives;
  const auto flat = catalog_get("torus4").doc;
  for (int k = 0; k < 3; ++k) {
    const auto ip = k == 0 ? flat.metric_or_identity() : random_hermitian_metric(rng, flat.structure());
    o.require(skt_check(flat.real_algebra(), ip, flat.structure()), "torus4 should be SKT");
  }
  auto negative = [&](const std::string& label, const LieAlgebra& a, const AlmostComplexStructure& j,
                      const InnerProduct& ip) {
    if (!ip.is_compatible(j.matrix()) || !classify(a, j).in_int || !chern_flat_check(a, j)) return;
    o.require(a.is_abelian() == skt_check(a, ip, j), label + ": SKT verdict wrong");
    if (!a.is_abelian()) negatives.push_back(label);
  };
  for (const auto& info : catalog_list()) {
    const auto doc = catalog_get(info.name).doc;
    if (!doc.is_real()) continue;
    const auto& a = doc.real_algebra();
    if (doc.j) negative(info.name, a, *doc.j, doc.metric_or_identity());
    if (nilpotency(a).two_step()) {
      const auto c = complexify(a);
      negative("complexify(" + info.name + ")", c.algebra, c.j, complexified_metric(doc.metric_or_identity()));
    }
  }
  o.require(negatives.size() >= 3, "too few nonabelian Chern-flat Hermitian entries");
  if (o.pass) {
    o.detail = "torus4 SKT; not SKT:";
    for (const auto& n : negatives) o.detail += " " + n;
  }
  return o;
}

Outcome soliton_search_check() {
  Outcome o;
  const auto start = Clock::now();
  FlowConfig cfg;
  const auto h3 = catalog_get("heisenberg3").doc.real_algebra();
  const std::pair<std::string, LieAlgebra> positives[] = {{"h3", h3}, {"complexify(h3)", complexify(h3).algebra}};
  std::string detail;
  for (const auto& [label, a] : positives) {
    const auto trace = soliton_search(a, cfg);
    const auto& best = trace.best();
    o.require(trace.verdict == SearchVerdict::CertificateFound && !trace.heuristic, label + ": no certificate");
    o.require(trace.min_residual < 1e-8, label + ": residual " + fmt(trace.min_residual));
    o.require(best.residuals.size() <= cfg.max_iters + 1, label + ": too many iterations");
    o.require(best.rational_metric.has_value() &&
                  nilsoliton_check(a, InnerProduct(*best.rational_metric)).has_value(),
              label + ": rationalized metric fails the exact check");
    detail += label + " certified (residual " + fmt(trace.min_residual) + "); ";
  }
  const auto will = catalog_get("will63", Gaussian(2)).doc.real_algebra();
  const auto trace = soliton_search(will, cfg);
  o.require(trace.restarts.size() == 8, "will63: expected 8 restarts");
  o.require(trace.verdict == SearchVerdict::NoCertificateFound, "will63: unexpected certificate");
  double worst_condition = 0;
  for (const auto& r : trace.restarts) worst_condition = std::max(worst_condition, r.condition);
  detail += "will63 t=2: " + to_string(trace.verdict) + ", min residual " + fmt(trace.min_residual) +
            ", max condition " + fmt(worst_condition) + " (heuristic, not a proof)";
  o.require(trace.min_residual > 1e-3, "will63: min residual " + fmt(trace.min_residual) +
                                           " <= 1e-3 (infimum 0 approached by degenerating metrics, condition " +
                                           fmt(worst_condition) + ")");
  const double dt = seconds_since(start);
  o.require(dt < 30, "took " + fmt(dt) + " s");
  if (o.pass) o.detail = detail + "; " + fmt(dt) + " s";
  else o.detail += "; " + detail;
  return o;
}

std::string read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome cli_golden(const std::filesystem::path& golden_dir) {
  Outcome o;
  const std::pair<std::string, std::vector<std::string>> cases[] = {
      {"report_iwasawa.json", {"report", "catalog:iwasawa"}},
      {"invariants_lambda82_t2.json", {"invariants", "catalog:lambda82", "--t", "2"}}};
  const auto tmp = std::filesystem::temp_directory_path() / ("nilherm_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);
  for (const auto& [file, args] : cases) {
    std::string first;
    for (int run = 0; run < 2; ++run) {
      const auto path = tmp / (std::to_string(run) + file);
      auto full = args;
      full.insert(full.end(), {"--json", path.string()});
      std::ostringstream out, err;
      o.require(run_command(full, out, err) == 0, file + ": command failed: " + err.str());
      const std::string bytes = read_bytes(path);
      if (run == 0) first = bytes;
      o.require(bytes == first, file + ": output differs between runs");
    }
    const auto golden = golden_dir / file;
    o.require(std::filesystem::exists(golden), "missing golden file " + golden.string());
    o.require(first == read_bytes(golden), file + ": differs from the golden file");
  }
  std::filesystem::remove_all(tmp);
  int round_trips = 0;
  for (const auto& info : catalog_list()) {
    std::vector<std::optional<Gaussian>> ts = {std::nullopt};
    if (info.has_parameter) ts.insert(ts.end(), {Gaussian(3), Gaussian(Rational(-1, 2))});
    if (info.name == "lambda82" || info.name == "lambda63") ts.push_back(Gaussian(1, 1));
    for (const auto& t : ts) {
      const auto doc = catalog_get(info.name, t).doc;
      const auto text = emit_algebra_document(doc);
      const auto back = parse_algebra_document(text);
      o.require(back == doc && emit_algebra_document(back) == text, info.name + ": round trip fails");
      ++round_trips;
    }
  }
  if (o.pass) o.detail = "2 golden reports byte-stable; " + std::to_string(round_trips) + " catalog round trips";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path golden_dir = NILHERM_SOURCE_DIR "/tests/golden";
  std::set<int> allowed, only;
  for (int k = 1; k < argc; ++k) {
    const std::string a = argv[k];
    if (a == "--golden-dir" && k + 1 < argc) golden_dir = argv[++k];
    else if (a == "--allow-fail" && k + 1 < argc) allowed.insert(std::stoi(argv[++k]));
    else if (a == "--only" && k + 1 < argc) only.insert(std::stoi(argv[++k]));
    else {
      std::cerr << "usage: acceptance [--golden-dir DIR] [--allow-fail N]... [--only N]...\n";
      return 2;
    }
  }
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Pfaffian form of the (8,2) family", pfaffian_82},
      {"binary quartic invariants", binary_invariants},
      {"Pfaffian form of the (6,3) family", pfaffian_63},
      {"ternary cubic invariants", ternary_invariants},
      {"real-form obstruction", real_form},
      {"G2 / 2-step / quasi-Kaehler agreement", bi_invariant_agreement},
      {"curvature of complex parallelisable metrics", parallelisable_curvature},
      {"Ricci operators and solitons", ricci_solitons},
      {"bracket decomposition", decomposition},
      {"conjugation and anti-complexification", conjugation},
      {"SKT metrics", skt},
      {"numerical soliton search", soliton_search_check},
      {"CLI golden reports and round trips", [&] { return cli_golden(golden_dir); }},
  };
  int unexpected = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::string tag = o.pass ? "PASS" : "FAIL";
    if (!o.pass && allowed.count(id)) tag += " (allowed)";
    else if (!o.pass) ++unexpected;
    std::printf("%-15s %2d  %s: %s\n", tag.c_str(), id, criteria[k].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return unexpected == 0 ? 0 : 1;
}
