#include "nilherm/io/document.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace nilherm {

const LieAlgebra& AlgebraDocument::real_algebra() const {
  if (!is_real()) throw Error("operation needs a real (field Q) algebra");
  return std::get<LieAlgebra>(algebra);
}

const ComplexLieAlgebra& AlgebraDocument::complex_algebra() const {
  if (is_real()) throw Error("operation needs a complex (field QI) algebra");
  return std::get<ComplexLieAlgebra>(algebra);
}

const AlmostComplexStructure& AlgebraDocument::structure() const {
  if (!j) throw Error("no almost complex structure given");
  return *j;
}

InnerProduct AlgebraDocument::metric_or_identity() const {
  return metric ? *metric : InnerProduct::identity(dim());
}

bool operator==(const AlgebraDocument& a, const AlgebraDocument& b) {
  if (a.name != b.name || a.basis != b.basis || a.params != b.params || !(a.algebra == b.algebra)) return false;
  if (a.j.has_value() != b.j.has_value() || (a.j && !(*a.j == *b.j))) return false;
  if (!a.is_real()) return true;
  return a.metric_or_identity() == b.metric_or_identity();
}

std::vector<std::string> default_basis_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

namespace {

std::string coefficient_text(const Rational& r) { return to_string(r); }
std::string coefficient_text(const Gaussian& z) {
  return z.is_real() ? to_string(z.re()) : "(" + to_string(z) + ")";
}
bool negative(const Rational& r) { return sgn(r) < 0; }
bool negative(const Gaussian& z) { return z.is_real() && sgn(z.re()) < 0; }

}  // namespace

template <class K>
std::string format_combo(const Vec<K>& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    K c = v[k];
    const bool neg = negative(c);
    if (neg) c = -c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (!(c == K(1))) out += coefficient_text(c) + "*";
    out += names[k];
  }
  return out.empty() ? "0" : out;
}

template std::string format_combo<Rational>(const Vec<Rational>&, const std::vector<std::string>&);
template std::string format_combo<Gaussian>(const Vec<Gaussian>&, const std::vector<std::string>&);

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

class ComboParser {
 public:
  ComboParser(std::string_view text, const std::map<std::string, std::size_t>& index, bool complex, std::size_t line)
      : s_(text), index_(index), complex_(complex), line_(line) {}

  Vec<Gaussian> parse() {
    Vec<Gaussian> v(index_.size(), Gaussian(0));
    skip();
    if (pos_ == s_.size()) fail("empty linear combination");
    if (s_.substr(pos_) == "0") return v;
    bool first = true;
    while (true) {
      skip();
      if (pos_ == s_.size()) break;
      Gaussian sign(1);
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        if (s_[pos_] == '-') sign = Gaussian(-1);
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      auto [coeff, id] = term();
      v[id] += sign * coeff;
      first = false;
    }
    return v;
  }

 private:
  std::pair<Gaussian, std::size_t> term() {
    if (pos_ == s_.size()) fail("dangling sign");
    Gaussian coeff(1);
    bool has_coeff = false;
    if (s_[pos_] == '(') {
      const std::size_t close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced parenthesis");
      const std::string lit(s_.substr(pos_ + 1, close - pos_ - 1));
      try {
        coeff = parse_gaussian(lit);
      } catch (const Error& e) {
        fail(e.what());
      }
      if (!complex_ && !coeff.is_real()) fail("complex coefficient in a field Q document");
      pos_ = close + 1;
      has_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      try {
        coeff = Gaussian(parse_rational(s_.substr(start, pos_ - start)));
      } catch (const Error& e) {
        fail(e.what());
      }
      has_coeff = true;
    }
    if (has_coeff) {
      skip();
      if (pos_ == s_.size() || s_[pos_] != '*') fail("expected '*' after coefficient");
      ++pos_;
      skip();
    }
    if (pos_ == s_.size() || !ident_start(s_[pos_])) fail("expected a generator name");
    const std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    const std::string id(s_.substr(start, pos_ - start));
    auto it = index_.find(id);
    if (it == index_.end()) fail("unknown generator '" + id + "'");
    return {coeff, it->second};
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, msg); }

  std::string_view s_;
  const std::map<std::string, std::size_t>& index_;
  bool complex_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct BracketLine {
  std::size_t i, j;
  Vec<Gaussian> value;
};

}  // namespace

AlgebraDocument parse_algebra_document(std::string_view text) {
  std::optional<std::string> name;
  std::optional<Field> field;
  std::optional<std::size_t> dim;
  std::vector<std::string> basis;
  std::map<std::string, std::size_t> index;
  std::vector<BracketLine> brackets;
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  std::map<std::size_t, Vec<Gaussian>> j_images;
  std::size_t j_line = 0;
  std::optional<bool> metric_identity;
  std::vector<Vec<Rational>> metric_rows;
  std::size_t metric_line = 0;
  std::map<std::string, Gaussian> params;
  std::size_t last_bracket_line = 0;

  auto need_basis = [&](std::size_t line) {
    if (!dim) throw ParseError(line, "'dim' must come first");
    if (basis.empty()) {
      basis = default_basis_names(*dim);
      for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    }
  };
  auto generator = [&](const std::string& id, std::size_t line) {
    auto it = index.find(id);
    if (it == index.end()) throw ParseError(line, "unknown generator '" + id + "'");
    return it->second;
  };

  std::size_t line_no = 0;
  std::string raw;
  std::istringstream in{std::string(text)};
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto words = split_words(line);
    const std::string& kw = words[0];
    if (kw == "name") {
      if (words.size() != 2) throw ParseError(line_no, "usage: name ID");
      if (name) throw ParseError(line_no, "duplicate 'name'");
      name = words[1];
    } else if (kw == "field") {
      if (words.size() != 2 || (words[1] != "Q" && words[1] != "QI")) throw ParseError(line_no, "usage: field Q|QI");
      if (field) throw ParseError(line_no, "duplicate 'field'");
      field = words[1] == "Q" ? Field::Rational : Field::GaussianRational;
    } else if (kw == "dim") {
      if (words.size() != 2) throw ParseError(line_no, "usage: dim N");
      if (dim) throw ParseError(line_no, "duplicate 'dim'");
      std::size_t n = 0;
      try {
        std::size_t used = 0;
        n = std::stoul(words[1], &used);
        if (used != words[1].size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        throw ParseError(line_no, "dimension must be a nonnegative integer");
      }
      dim = n;
    } else if (kw == "basis") {
      if (!dim) throw ParseError(line_no, "'dim' must come before 'basis'");
      if (!basis.empty()) throw ParseError(line_no, "duplicate or late 'basis'");
      if (words.size() - 1 != *dim) throw ParseError(line_no, "basis has " + std::to_string(words.size() - 1) +
                                                                  " names, dim is " + std::to_string(*dim));
      for (std::size_t k = 1; k < words.size(); ++k) {
        const std::string& id = words[k];
        if (!ident_start(id[0]) || !std::all_of(id.begin(), id.end(), ident_char)) {
          throw ParseError(line_no, "invalid generator name '" + id + "'");
        }
        if (!index.emplace(id, k - 1).second) throw ParseError(line_no, "generator '" + id + "' listed twice");
        basis.push_back(id);
      }
    } else if (kw == "bracket") {
      need_basis(line_no);
      const auto arrow = line.find("->");
      if (words.size() < 5 || words[3] != "->" || arrow == std::string::npos) {
        throw ParseError(line_no, "usage: bracket ID ID -> combo");
      }
      const std::size_t i = generator(words[1], line_no);
      const std::size_t j = generator(words[2], line_no);
      if (i == j) throw ParseError(line_no, "bracket of '" + words[1] + "' with itself (repeated generator)");
      if (!seen_pairs.insert({std::min(i, j), std::max(i, j)}).second) {
        throw ParseError(line_no, "bracket of '" + words[1] + "' and '" + words[2] + "' given twice");
      }
      ComboParser parser(std::string_view(line).substr(arrow + 2), index, field == Field::GaussianRational, line_no);
      brackets.push_back({i, j, parser.parse()});
      last_bracket_line = line_no;
    } else if (kw == "J") {
      need_basis(line_no);
      const auto arrow = line.find("->");
      if (words.size() < 4 || words[2] != "->" || arrow == std::string::npos) {
        throw ParseError(line_no, "usage: J ID -> combo");
      }
      const std::size_t i = generator(words[1], line_no);
      if (j_images.count(i)) throw ParseError(line_no, "J of '" + words[1] + "' given twice");
      ComboParser parser(std::string_view(line).substr(arrow + 2), index, false, line_no);
      j_images[i] = parser.parse();
      j_line = line_no;
    } else if (kw == "metric") {
      need_basis(line_no);
      if (words.size() == 2 && words[1] == "identity") {
        if (metric_identity) throw ParseError(line_no, "duplicate metric");
        metric_identity = true;
      } else if (words.size() >= 2 && words[1] == "row") {
        if (metric_identity && *metric_identity) throw ParseError(line_no, "metric rows after 'metric identity'");
        metric_identity = false;
        if (words.size() - 2 != *dim) throw ParseError(line_no, "metric row needs " + std::to_string(*dim) + " entries");
        Vec<Rational> row;
        for (std::size_t k = 2; k < words.size(); ++k) {
          try {
            row.push_back(parse_rational(words[k]));
          } catch (const Error& e) {
            throw ParseError(line_no, e.what());
          }
        }
        metric_rows.push_back(std::move(row));
        metric_line = line_no;
      } else {
        throw ParseError(line_no, "usage: metric identity | metric row s s ...");
      }
    } else if (kw == "param") {
      if (words.size() != 4 || words[2] != "=") throw ParseError(line_no, "usage: param ID = scalar");
      try {
        params[words[1]] = parse_gaussian(words[3]);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + kw + "'");
    }
  }

  if (!dim) throw ParseError(line_no, "missing 'dim'");
  need_basis(line_no);
  const Field f = field.value_or(Field::Rational);
  AlgebraDocument doc;
  doc.name = name.value_or("unnamed");
  doc.basis = basis;
  doc.params = params;
  const std::size_t n = *dim;
  try {
    if (f == Field::Rational) {
      BracketTensor<Rational> t(n);
      for (const auto& b : brackets) {
        Vec<Rational> v;
        for (const auto& z : b.value) v.push_back(z.re());
        t.set(b.i, b.j, v);
      }
      doc.algebra = LieAlgebra::validate(std::move(t));
    } else {
      BracketTensor<Gaussian> t(n);
      for (const auto& b : brackets) t.set(b.i, b.j, b.value);
      doc.algebra = ComplexLieAlgebra::validate(std::move(t));
    }
  } catch (const JacobiViolation& e) {
    throw ParseError(last_bracket_line, e.what());
  }
  if (!j_images.empty()) {
    if (f != Field::Rational) throw ParseError(j_line, "J is only supported for field Q");
    if (j_images.size() != n) throw ParseError(j_line, "J must be given on every generator");
    Matrix<Rational> jm(n, n);
    for (const auto& [i, v] : j_images)
      for (std::size_t k = 0; k < n; ++k) jm(k, i) = v[k].re();
    try {
      doc.j = AlmostComplexStructure(std::move(jm));
    } catch (const Error& e) {
      throw ParseError(j_line, e.what());
    }
  }
  if (metric_identity) {
    if (f != Field::Rational) throw ParseError(metric_line ? metric_line : line_no, "metric is only supported for field Q");
    if (*metric_identity) {
      doc.metric = InnerProduct::identity(n);
    } else {
      if (metric_rows.size() != n) throw ParseError(metric_line, "metric needs " + std::to_string(n) + " rows");
      try {
        doc.metric = InnerProduct(Matrix<Rational>::from_rows(metric_rows));
      } catch (const Error& e) {
        throw ParseError(metric_line, e.what());
      }
    }
  }
  return doc;
}

std::string emit_algebra_document(const AlgebraDocument& doc) {
  std::ostringstream out;
  const std::size_t n = doc.dim();
  out << "name " << doc.name << "\n";
  out << "field " << (doc.is_real() ? "Q" : "QI") << "\n";
  out << "dim " << n << "\n";
  out << "basis";
  for (const auto& b : doc.basis) out << " " << b;
  out << "\n";
  for (const auto& [k, v] : doc.params) out << "param " << k << " = " << to_string(v) << "\n";
  auto emit_brackets = [&](const auto& alg) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto v = alg.bracket_basis(i, j);
        if (is_zero_vec(v)) continue;
        out << "bracket " << doc.basis[i] << " " << doc.basis[j] << " -> " << format_combo(v, doc.basis) << "\n";
      }
  };
  std::visit(emit_brackets, doc.algebra);
  if (doc.j) {
    for (std::size_t i = 0; i < n; ++i) {
      out << "J " << doc.basis[i] << " -> " << format_combo(doc.j->matrix().column(i), doc.basis) << "\n";
    }
  }
  if (doc.metric) {
    if (doc.metric->gram() == Matrix<Rational>::identity(n)) {
      out << "metric identity\n";
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        out << "metric row";
        for (std::size_t k = 0; k < n; ++k) out << " " << to_string(doc.metric->gram()(i, k));
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace nilherm
