#include "nilherm/cli/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "nilherm/catalog/catalog.hpp"
#include "nilherm/invariants/invariants.hpp"
#include "nilherm/soliton/search.hpp"

namespace nilherm {

namespace {

using json = nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// Verdicts that make the command exit with kExitCheckFailed.
class CheckFailed {};

struct Options {
  std::string input;
  std::string t;
  std::string json_path;
  bool timings = false;
  std::string convention = "binomial";
  bool search = false;
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::size_t max_iters = 5000;
  std::string identity;
  std::string catalog_name;
};

struct Report {
  std::string command;
  json inputs = json::object();
  std::string digest = sha256_hex("");
  json verdicts = json::object();
  json witnesses = json::object();
  json results = json::object();
};

json to_json(const Rational& q) { return to_string(q); }

template <class K>
json to_json(const Matrix<K>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

template <class K>
void print_matrix(std::ostream& out, const Matrix<K>& m) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (const auto& x : m.data()) {
    cells.push_back(to_string(x));
    width = std::max(width, cells.back().size());
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << " ";
    for (std::size_t j = 0; j < m.cols(); ++j) out << " " << std::setw(static_cast<int>(width)) << cells[i * m.cols() + j];
    out << "\n";
  }
}

template <std::size_t N>
json witness_json(const std::array<std::size_t, N>& w, const std::vector<std::string>& names) {
  json a = json::array();
  for (std::size_t k : w) a.push_back(names[k]);
  return a;
}

template <std::size_t N>
std::string witness_text(const std::array<std::size_t, N>& w, const std::vector<std::string>& names) {
  std::string s = "(";
  for (std::size_t k = 0; k < N; ++k) s += (k ? "," : "") + names[w[k]];
  return s + ")";
}

template <class K>
json brackets_json(const BracketTensor<K>& t, const std::vector<std::string>& names) {
  json b = json::object();
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const auto v = t.bracket_basis(i, j);
      if (!is_zero_vec(v)) b["[" + names[i] + "," + names[j] + "]"] = format_combo(v, names);
    }
  return b;
}

template <class K>
void print_brackets(std::ostream& out, const BracketTensor<K>& t, const std::vector<std::string>& names) {
  bool any = false;
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      const auto v = t.bracket_basis(i, j);
      if (is_zero_vec(v)) continue;
      out << "  [" << names[i] << "," << names[j] << "] = " << format_combo(v, names) << "\n";
      any = true;
    }
  if (!any) out << "  (zero)\n";
}

json flags_json(const ClassificationFlags& f) {
  return {{"in_int", f.in_int}, {"in_ab", f.in_ab}, {"in_C", f.in_C}, {"in_Ch", f.in_Ch}, {"in_Cbar", f.in_Cbar}};
}

void print_flags(std::ostream& out, const ClassificationFlags& f) {
  out << "in_int:  " << f.in_int << "\n"
      << "in_ab:   " << f.in_ab << "\n"
      << "in_C:    " << f.in_C << "\n"
      << "in_Ch:   " << f.in_Ch << "\n"
      << "in_Cbar: " << f.in_Cbar << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json document_inputs(const std::string& source, const AlgebraDocument& doc) {
  json params = json::object();
  for (const auto& [k, v] : doc.params) params[k] = to_string(v);
  return {{"source", source},
          {"name", doc.name},
          {"field", doc.is_real() ? "Q" : "QI"},
          {"dim", doc.dim()},
          {"params", params},
          {"has_j", doc.j.has_value()},
          {"has_metric", doc.metric.has_value()}};
}

AlgebraDocument load_input(const Options& o, Report& r) {
  std::optional<Gaussian> t;
  if (!o.t.empty()) t = parse_gaussian(o.t);
  AlgebraDocument doc;
  const std::string prefix = "catalog:";
  if (o.input.rfind(prefix, 0) == 0) {
    doc = catalog_get(o.input.substr(prefix.size()), t).doc;
  } else {
    if (t) throw UsageError("--t only applies to catalog inputs");
    doc = parse_algebra_document(read_file(o.input));
  }
  r.inputs = document_inputs(o.input, doc);
  r.digest = sha256_hex(emit_algebra_document(doc));
  return doc;
}

std::string nilpotency_text(const NilpotencyInfo& info) {
  if (!info.nilpotent) return "not nilpotent";
  if (info.abelian()) return "abelian";
  if (info.two_step()) return "2-step nilpotent";
  return std::to_string(info.step) + "-step nilpotent";
}

template <class K>
json structure_json(const BasicLieAlgebra<K>& a, std::ostream& out) {
  const auto info = nilpotency(a);
  const auto z = center(a);
  const auto der = derivation_space(a);
  out << "valid Lie algebra, " << nilpotency_text(info) << "\n";
  out << "lower central series dims:";
  for (std::size_t d : info.series_dims) out << " " << d;
  out << "\ncenter dim: " << z.dim() << "\nderivations dim: " << der.dim() << "\n";
  return {{"nilpotent", info.nilpotent},
          {"step", info.step},
          {"lower_central_series", info.series_dims},
          {"center_dim", z.dim()},
          {"derivation_dim", der.dim()}};
}

int cmd_check(const AlgebraDocument& doc, Report& r, std::ostream& out) {
  const json s = std::visit([&](const auto& a) { return structure_json(a, out); }, doc.algebra);
  r.verdicts["lie_algebra"] = true;
  r.verdicts["nilpotent"] = s["nilpotent"];
  r.verdicts["two_step"] = s["nilpotent"].get<bool>() && s["step"].get<std::size_t>() == 2;
  r.results["structure"] = s;
  if (doc.j) {
    const bool compatible = doc.metric_or_identity().is_compatible(doc.j->matrix());
    out << "almost complex structure: J^2 = -I, " << (compatible ? "compatible" : "not compatible")
        << " with the metric\n";
    r.verdicts["j_compatible"] = compatible;
  }
  return kExitOk;
}

int cmd_classify(const AlgebraDocument& doc, Report& r, std::ostream& out) {
  const auto f = classify(doc.real_algebra(), doc.structure());
  print_flags(out, f);
  r.verdicts = flags_json(f);
  return kExitOk;
}

int cmd_decompose(const AlgebraDocument& doc, Report& r, std::ostream& out) {
  const auto& bracket = doc.real_algebra().constants();
  const auto d = decompose_bracket(bracket, doc.structure());
  const std::pair<const char*, const BracketTensor<Rational>*> parts[] = {
      {"ab", &d.ab}, {"C", &d.c}, {"Cbar", &d.cbar}};
  for (const auto& [label, t] : parts) {
    out << "V(" << label << "):\n";
    print_brackets(out, *t, doc.basis);
    r.results[label] = brackets_json(*t, doc.basis);
    r.verdicts[std::string("zero_") + label] = t->is_zero();
  }
  return kExitOk;
}

int emit_derived(const AlgebraDocument& derived, Report& r, std::ostream& out) {
  const std::string text = emit_algebra_document(derived);
  out << text;
  r.results["document"] = text;
  r.results["document_digest"] = sha256_hex(text);
  return kExitOk;
}

int cmd_conjugate(const AlgebraDocument& doc, Report& r, std::ostream& out) {
  const auto split = default_conjugation_split(doc.real_algebra(), doc.structure());
  AlgebraDocument next = doc;
  next.name = doc.name + "_conj";
  next.algebra = conjugate_bracket(split);
  r.results["phi"] = to_json(split.phi);
  r.verdicts["classification_before"] = flags_json(classify(doc.real_algebra(), doc.structure()));
  r.verdicts["classification_after"] = flags_json(classify(next.real_algebra(), doc.structure()));
  return emit_derived(next, r, out);
}

int cmd_complexify(const AlgebraDocument& doc, Report& r, std::ostream& out, bool anti) {
  const auto& h = doc.real_algebra();
  const auto realified = anti ? anticomplexify(h) : complexify(h);
  AlgebraDocument next;
  next.name = doc.name + (anti ? "_anticomplexified" : "_complexified");
  for (const auto& b : doc.basis) {
    next.basis.push_back(b);
    next.basis.push_back("i" + b);
  }
  next.algebra = realified.algebra;
  next.j = realified.j;
  next.metric = complexified_metric(doc.metric_or_identity());
  next.params = doc.params;
  r.verdicts["classification"] = flags_json(classify(realified.algebra, realified.j));
  return emit_derived(next, r, out);
}

std::vector<std::string> form_variables(std::size_t q) {
  if (q == 2) return {"x", "y"};
  if (q == 3) return {"x", "y", "z"};
  std::vector<std::string> v;
  for (std::size_t k = 1; k <= q; ++k) v.push_back("z" + std::to_string(k));
  return v;
}

PfaffianForm document_form(const AlgebraDocument& doc) {
  return std::visit([](const auto& a) { return pfaffian_form(two_step_presentation(a)); }, doc.algebra);
}

json form_json(const PfaffianForm& f, std::ostream& out) {
  const std::string text = f.poly.to_string(form_variables(f.q));
  out << "type (" << f.p << "," << f.q << ")\nPf = " << text << "\n";
  return {{"p", f.p}, {"q", f.q}, {"form", text}};
}

Convention parse_convention(const std::string& s) {
  if (s == "plain") return Convention::Plain;
  if (s == "binomial") return Convention::Binomial;
  throw UsageError("--convention must be plain or binomial");
}

json invariants_json(const InvariantPair& inv, std::ostream& out) {
  const auto abs = absolute_invariant(inv);
  out << "family: " << to_string(inv.family) << "\n";
  if (inv.family == FormFamily::BinaryQuartic) out << "convention: " << to_string(inv.convention) << "\n";
  out << "S = " << to_string(inv.s) << "\nT = " << to_string(inv.t) << "\nS^3/T^2 = " << to_string(abs) << "\n";
  json j = {{"family", to_string(inv.family)},
            {"S", to_string(inv.s)},
            {"T", to_string(inv.t)},
            {"absolute_invariant", to_string(abs)}};
  if (inv.family == FormFamily::BinaryQuartic) j["convention"] = to_string(inv.convention);
  return j;
}

int cmd_pfaffian(const AlgebraDocument& doc, Report& r, std::ostream& out) {
  r.results["pfaffian"] = form_json(document_form(doc), out);
  return kExitOk;
}

int cmd_invariants(const AlgebraDocument& doc, const Options& o, Report& r, std::ostream& out) {
  const Convention conv = parse_convention(o.convention);
  const auto f = document_form(doc);
  r.results["pfaffian"] = form_json(f, out);
  r.results["invariants"] = invariants_json(form_invariants(f.poly, conv), out);
  return kExitOk;
}

int cmd_obstruction(const AlgebraDocument& doc, Report& r, std::ostream& out) {
  const auto f = document_form(doc);
  r.results["pfaffian"] = form_json(f, out);
  const auto inv = form_invariants(f.poly, Convention::Binomial);
  r.results["invariants"] = invariants_json(inv, out);
  const auto v = real_form_obstruction(inv);
  out << "real form: " << to_string(v) << "\n";
  r.verdicts["real_form"] = to_string(v);
  return kExitOk;
}

json certificate_json(const std::optional<SolitonCertificate>& c) {
  if (!c) return nullptr;
  return {{"c", to_string(c->c)}, {"D", to_json(c->d)}};
}

void print_certificate(std::ostream& out, const std::optional<SolitonCertificate>& c, const std::string& what) {
  if (!c) {
    out << what << ": none\n";
    return;
  }
  out << what << ": Ric = c I + D with c = " << to_string(c->c) << ", D =\n";
  print_matrix(out, c->d);
}

int cmd_ricci(const AlgebraDocument& doc, Report& r, std::ostream& out) {
  const auto ric = ricci(doc.real_algebra(), doc.metric_or_identity());
  Rational scal = 0;
  for (std::size_t i = 0; i < ric.rows(); ++i) scal += ric(i, i);
  out << "Ricci operator:\n";
  print_matrix(out, ric);
  out << "scalar curvature: " << to_string(scal) << "\n";
  r.results["ricci"] = to_json(ric);
  r.results["scalar_curvature"] = to_string(scal);
  return kExitOk;
}

int cmd_soliton(const AlgebraDocument& doc, const Options& o, Report& r, std::ostream& out) {
  const auto& alg = doc.real_algebra();
  if (!o.search) {
    const auto cert = nilsoliton_check(alg, doc.metric_or_identity());
    print_certificate(out, cert, "nilsoliton certificate");
    r.verdicts["nilsoliton"] = cert.has_value();
    r.results["certificate"] = certificate_json(cert);
    if (!cert) throw CheckFailed{};
    return kExitOk;
  }
  FlowConfig cfg;
  cfg.restarts = o.restarts;
  cfg.seed = o.seed;
  cfg.tol = o.tol;
  cfg.max_iters = o.max_iters;
  cfg.validate();
  const auto trace = soliton_search(alg, cfg);
  json restarts = json::array();
  for (std::size_t k = 0; k < trace.restarts.size(); ++k) {
    const auto& rr = trace.restarts[k];
    out << "restart " << k << ": residual " << std::scientific << std::setprecision(3) << rr.final_residual
        << ", steps " << rr.residuals.size() << ", condition " << rr.condition << std::defaultfloat
        << (rr.certificate ? ", certified" : "") << "\n";
    restarts.push_back({{"final_residual", rr.final_residual},
                        {"steps", rr.residuals.size()},
                        {"condition", rr.condition},
                        {"certified", rr.certificate.has_value()}});
  }
  out << "min residual: " << std::scientific << std::setprecision(3) << trace.min_residual << std::defaultfloat
      << "\nverdict: " << to_string(trace.verdict) << "\n";
  r.verdicts["search"] = to_string(trace.verdict);
  r.verdicts["heuristic"] = trace.heuristic;
  r.results["restarts"] = restarts;
  r.results["min_residual"] = trace.min_residual;
  r.results["chosen"] = trace.chosen;
  if (trace.verdict == SearchVerdict::CertificateFound) {
    const auto& best = trace.best();
    out << "rational metric:\n";
    print_matrix(out, *best.rational_metric);
    print_certificate(out, best.certificate, "nilsoliton certificate");
    r.results["rational_metric"] = to_json(*best.rational_metric);
    r.results["certificate"] = certificate_json(best.certificate);
    return kExitOk;
  }
  out << "numerical search only: absence of a certificate does not prove that no nilsoliton exists\n";
  if (trace.heuristic) out << "residual below tolerance without an exact certificate (heuristic)\n";
  throw CheckFailed{};
}

GrayIdentity parse_identity(const std::string& s) {
  if (s == "g1") return GrayIdentity::G1;
  if (s == "g2") return GrayIdentity::G2;
  if (s == "g3") return GrayIdentity::G3;
  throw UsageError("--identity must be g1, g2 or g3");
}

int cmd_gray(const AlgebraDocument& doc, const Options& o, Report& r, std::ostream& out) {
  const auto& j = doc.structure();
  const auto rt = curvature(doc.real_algebra(), doc.metric_or_identity());
  std::vector<std::string> which = {"g1", "g2", "g3"};
  if (!o.identity.empty()) {
    parse_identity(o.identity);
    which = {o.identity};
  }
  bool all = true;
  for (const auto& name : which) {
    const auto g = gray_check(rt, j, parse_identity(name));
    std::string label = name;
    label[0] = 'G';
    out << label << ": " << (g.holds ? "holds" : "fails");
    if (g.witness) {
      out << " at " << witness_text(*g.witness, doc.basis);
      r.witnesses[name] = witness_json(*g.witness, doc.basis);
    }
    out << "\n";
    r.verdicts[name] = g.holds;
    all = all && g.holds;
  }
  if (!all) throw CheckFailed{};
  return kExitOk;
}

json hermitian_json(const HermitianReport& h, const std::vector<std::string>& names, Report& r, std::ostream& out) {
  print_flags(out, h.classification);
  out << "metric compatible: " << h.compatible << "\nChern-flat: " << h.chern_flat
      << "\nquasi-Kaehler: " << h.quasi_kahler << "\nSKT: " << (h.skt ? (*h.skt ? "true" : "false") : "n/a")
      << "\nG1: " << h.g1 << "\nG2: " << h.g2 << "\nG3: " << h.g3 << "\nin CP2: " << h.in_CP2
      << "\nin QK0: " << h.in_QK0 << "\n";
  if (h.quasi_kahler_witness) r.witnesses["quasi_kahler"] = witness_json(*h.quasi_kahler_witness, names);
  if (h.g1_witness) r.witnesses["g1"] = witness_json(*h.g1_witness, names);
  if (h.g2_witness) r.witnesses["g2"] = witness_json(*h.g2_witness, names);
  if (h.g3_witness) r.witnesses["g3"] = witness_json(*h.g3_witness, names);
  json skt = h.skt ? json(*h.skt) : json(nullptr);
  return {{"classification", flags_json(h.classification)},
          {"compatible", h.compatible},
          {"chern_flat", h.chern_flat},
          {"quasi_kahler", h.quasi_kahler},
          {"skt", skt},
          {"g1", h.g1},
          {"g2", h.g2},
          {"g3", h.g3},
          {"in_CP2", h.in_CP2},
          {"in_QK0", h.in_QK0}};
}

int cmd_report(const AlgebraDocument& doc, Report& r, std::ostream& out) {
  out << "algebra " << doc.name << " (" << (doc.is_real() ? "Q" : "QI") << ", dim " << doc.dim() << ")\n";
  const json s = std::visit([&](const auto& a) { return structure_json(a, out); }, doc.algebra);
  r.results["structure"] = s;
  r.verdicts["nilpotent"] = s["nilpotent"];
  const bool two_step = s["nilpotent"].get<bool>() && s["step"].get<std::size_t>() == 2;
  r.verdicts["two_step"] = two_step;
  if (doc.is_real()) {
    const auto& alg = doc.real_algebra();
    const auto ip = doc.metric_or_identity();
    if (doc.j) {
      const auto h = hermitian_report(alg, ip, *doc.j);
      r.verdicts["hermitian"] = hermitian_json(h, doc.basis, r, out);
    }
    if (s["nilpotent"].get<bool>()) {
      const auto ric = ricci(alg, ip);
      out << "Ricci operator:\n";
      print_matrix(out, ric);
      r.results["ricci"] = to_json(ric);
      const auto cert = nilsoliton_check(alg, ip);
      print_certificate(out, cert, "nilsoliton certificate");
      r.verdicts["nilsoliton"] = cert.has_value();
      r.results["nilsoliton"] = certificate_json(cert);
      if (doc.j) {
        const auto mc = minimal_check(alg, ip, *doc.j);
        print_certificate(out, mc, "minimal certificate");
        r.verdicts["minimal"] = mc.has_value();
        r.results["minimal"] = certificate_json(mc);
      }
    }
  }
  if (two_step) {
    const auto f = document_form(doc);
    if (f.p % 2 == 0) {
      r.results["pfaffian"] = form_json(f, out);
      const bool binary = f.q == 2 && f.p == 8;
      const bool ternary = f.q == 3 && f.p == 6;
      if (binary || ternary) {
        const auto inv = form_invariants(f.poly, Convention::Binomial);
        r.results["invariants"] = invariants_json(inv, out);
        const auto v = real_form_obstruction(inv);
        out << "real form: " << to_string(v) << "\n";
        r.verdicts["real_form"] = to_string(v);
      }
    }
  }
  return kExitOk;
}

int cmd_catalog_list(Report& r, std::ostream& out) {
  json list = json::array();
  for (const auto& e : catalog_list()) {
    out << std::left << std::setw(12) << e.name << (e.has_parameter ? " [t] " : "     ") << e.summary << "\n";
    list.push_back({{"name", e.name}, {"summary", e.summary}, {"has_parameter", e.has_parameter}});
  }
  r.results["entries"] = list;
  return kExitOk;
}

int cmd_catalog_show(const Options& o, Report& r, std::ostream& out) {
  std::optional<Gaussian> t;
  if (!o.t.empty()) t = parse_gaussian(o.t);
  const auto e = catalog_get(o.catalog_name, t);
  const std::string text = emit_algebra_document(e.doc);
  r.inputs = document_inputs("catalog:" + o.catalog_name, e.doc);
  r.digest = sha256_hex(text);
  out << "# " << e.summary << "\n# provenance: " << e.provenance << "\n" << text;
  r.results["document"] = text;
  r.results["summary"] = e.summary;
  r.results["provenance"] = e.provenance;
  if (e.declared) r.verdicts["declared_classification"] = flags_json(*e.declared);
  return kExitOk;
}

void write_report(const Options& o, const Report& r, double seconds, std::ostream& out) {
  if (o.json_path.empty()) return;
  json timings = json::object();
  if (o.timings) timings["total_seconds"] = seconds;
  const json j = {{"schema_version", kSchemaVersion},
                  {"tool_version", kToolVersion},
                  {"command", r.command},
                  {"inputs", r.inputs},
                  {"inputs_digest", r.digest},
                  {"verdicts", r.verdicts},
                  {"witnesses", r.witnesses},
                  {"results", r.results},
                  {"timings", timings}};
  const std::string text = j.dump(2) + "\n";
  if (o.json_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(o.json_path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + o.json_path + "'");
  f << text;
}

}  // namespace

std::string sha256_hex(const std::string& text) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
  std::ostringstream s;
  for (unsigned int k = 0; k < len; ++k) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[k]);
  return s.str();
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations on 2-step nilpotent Lie algebras with almost complex structures", "nilherm"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool input) {
    if (input) sub->add_option("input", o.input, "algebra file or catalog:NAME")->required();
    sub->add_option("--t", o.t, "parameter t of a catalog entry");
    sub->add_option("--json", o.json_path, "write the JSON report to PATH (- for standard output)");
    sub->add_flag("--timings", o.timings, "record timings in the JSON report");
    return sub;
  };
  common(app.add_subcommand("check", "validate an algebra and describe its structure"), true);
  common(app.add_subcommand("classify", "classification flags of (bracket, J)"), true);
  common(app.add_subcommand("decompose", "split the bracket into its V(ab), V(C), V(Cbar) parts"), true);
  common(app.add_subcommand("conjugate", "conjugate bracket phi[phi., phi.]"), true);
  common(app.add_subcommand("complexify", "realified complexification"), true);
  common(app.add_subcommand("anticomplexify", "realified anti-complexification"), true);
  common(app.add_subcommand("pfaffian", "Pfaffian form of a 2-step algebra"), true);
  common(app.add_subcommand("invariants", "S and T invariants of the Pfaffian form"), true)
      ->add_option("--convention", o.convention, "plain or binomial coefficients for binary quartics")
      ->check(CLI::IsMember({"plain", "binomial"}));
  common(app.add_subcommand("obstruction", "real-form obstruction from S^3/T^2"), true);
  common(app.add_subcommand("ricci", "Ricci operator of the metric"), true);
  auto* soliton = common(app.add_subcommand("soliton", "exact nilsoliton test or numerical search"), true);
  soliton->add_flag("--search", o.search, "search over metrics instead of testing the given one");
  soliton->add_option("--restarts", o.restarts, "number of restarts")->check(CLI::PositiveNumber);
  soliton->add_option("--seed", o.seed, "random seed");
  soliton->add_option("--tol", o.tol, "residual tolerance")->check(CLI::PositiveNumber);
  soliton->add_option("--max-iters", o.max_iters, "iterations per restart");
  common(app.add_subcommand("gray", "Gray identities G1, G2, G3 of the curvature"), true)
      ->add_option("--identity", o.identity, "check only this identity")
      ->check(CLI::IsMember({"g1", "g2", "g3"}));
  common(app.add_subcommand("report", "all applicable computations"), true);
  auto* catalog = app.add_subcommand("catalog", "built-in algebras");
  catalog->require_subcommand(1);
  common(catalog->add_subcommand("list", "list the entries"), false);
  auto* show = common(catalog->add_subcommand("show", "print an entry in file format"), false);
  show->add_option("name", o.catalog_name, "entry name")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  std::ios saved(nullptr);
  saved.copyfmt(out);
  out << std::boolalpha;
  struct Restore {
    std::ostream& out;
    std::ios& saved;
    ~Restore() { out.copyfmt(saved); }
  } restore{out, saved};
  Report r;
  r.command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    try {
      if (r.command == "catalog") {
        CLI::App* action = sub->get_subcommands().front();
        r.command = "catalog " + action->get_name();
        code = action->get_name() == "list" ? cmd_catalog_list(r, out) : cmd_catalog_show(o, r, out);
      } else {
        const auto doc = load_input(o, r);
        const std::string& c = r.command;
        if (c == "check") code = cmd_check(doc, r, out);
        else if (c == "classify") code = cmd_classify(doc, r, out);
        else if (c == "decompose") code = cmd_decompose(doc, r, out);
        else if (c == "conjugate") code = cmd_conjugate(doc, r, out);
        else if (c == "complexify") code = cmd_complexify(doc, r, out, false);
        else if (c == "anticomplexify") code = cmd_complexify(doc, r, out, true);
        else if (c == "pfaffian") code = cmd_pfaffian(doc, r, out);
        else if (c == "invariants") code = cmd_invariants(doc, o, r, out);
        else if (c == "obstruction") code = cmd_obstruction(doc, r, out);
        else if (c == "ricci") code = cmd_ricci(doc, r, out);
        else if (c == "soliton") code = cmd_soliton(doc, o, r, out);
        else if (c == "gray") code = cmd_gray(doc, o, r, out);
        else code = cmd_report(doc, r, out);
      }
    } catch (const CheckFailed&) {
      code = kExitCheckFailed;
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    write_report(o, r, elapsed.count(), out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return code;
}

}  // namespace nilherm
