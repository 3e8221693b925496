#include "volterra_app/io.hpp"

#include <algorithm>
#include <fstream>

#include <fmt/format.h>

namespace volterra::app {

namespace {

constexpr double kSymmetryTol = 1e-12;

class Reader {
 public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const std::string& key, const std::string& why) const {
    throw InputError(fmt::format("cannot read operator spec '{}': key '{}' {}", origin_, key, why));
  }

  const json& field(const json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object()) fail(path, "must be an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "is missing");
    return *it;
  }

  int integer(const json& v, const std::string& path) const {
    if (!v.is_number_integer()) fail(path, "must be an integer");
    return v.get<int>();
  }

  double number(const json& v, const std::string& path) const {
    if (!v.is_number()) fail(path, "must be a number");
    return v.get<double>();
  }

  double optional_number(const json& obj, const std::string& key, const std::string& path) const {
    auto it = obj.find(key);
    return it == obj.end() ? 0.0 : number(*it, path + "." + key);
  }

  MultiIndex frequency(const json& entry, int dim, const std::string& path) const {
    const json& f = field(entry, "freq", path);
    const std::string key = path + ".freq";
    if (!f.is_array() || int(f.size()) != dim) fail(key, fmt::format("must be an array of {} integers", dim));
    MultiIndex k{};
    for (int i = 0; i < dim; ++i) k[i] = integer(f[i], fmt::format("{}[{}]", key, i));
    return k;
  }

  complex amplitude(const json& entry, const std::string& path) const {
    if (!entry.contains("re") && !entry.contains("im")) fail(path, "needs 're' and/or 'im'");
    return {optional_number(entry, "re", path), optional_number(entry, "im", path)};
  }

  const json& list(const json& doc, const std::string& key) const {
    static const json empty = json::array();
    auto it = doc.find(key);
    if (it == doc.end()) return empty;
    if (!it->is_array()) fail(key, "must be an array");
    return *it;
  }

 private:
  std::string origin_;
};

}  // namespace

OperatorSpec parse_operator_spec(const json& doc, const std::string& origin) {
  Reader r(origin);
  if (!doc.is_object()) r.fail("<root>", "must be a JSON object");
  const int dim = r.integer(r.field(doc, "dim", ""), "dim");
  if (dim < 1 || dim > kMaxDim) r.fail("dim", "must be 1 or 2");
  std::string name = std::filesystem::path(origin).stem().string();
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) r.fail("name", "must be a string");
    name = it->get<std::string>();
  }

  OperatorSpec op(dim, name);
  // Each (i, j) slot accumulated separately so that g^{ij} = g^{ji} can be checked.
  std::array<std::array<TrigPolynomial, kMaxDim>, kMaxDim> g;
  for (auto& row : g)
    for (auto& e : row) e = TrigPolynomial(dim);
  const json& gs = r.list(doc, "g");
  if (gs.empty()) r.fail("g", "must list at least one metric entry");
  for (std::size_t n = 0; n < gs.size(); ++n) {
    const std::string path = fmt::format("g[{}]", n);
    const int i = r.integer(r.field(gs[n], "i", path), path + ".i");
    const int j = r.integer(r.field(gs[n], "j", path), path + ".j");
    if (i < 0 || i >= dim) r.fail(path + ".i", "is out of range");
    if (j < 0 || j >= dim) r.fail(path + ".j", "is out of range");
    g[i][j].add(r.frequency(gs[n], dim, path), r.amplitude(gs[n], path));
  }
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      TrigPolynomial entry = g[i][j];
      if (i != j) {
        if (!g[i][j].is_zero() && !g[j][i].is_zero() && !approx_equal(g[i][j], g[j][i], kSymmetryTol))
          r.fail("g", fmt::format("is not symmetric: entries ({},{}) and ({},{}) differ", i, j, j, i));
        if (entry.is_zero()) entry = g[j][i];
      }
      if (!entry.is_real_valued(kSymmetryTol))
        r.fail("g", fmt::format("entry ({},{}) is not real-valued (c_-k must equal conj(c_k))", i, j));
      op.metric.set_entry(i, j, entry);
    }
  }

  const json& bs = r.list(doc, "b");
  for (std::size_t n = 0; n < bs.size(); ++n) {
    const std::string path = fmt::format("b[{}]", n);
    const int j = r.integer(r.field(bs[n], "j", path), path + ".j");
    if (j < 0 || j >= dim) r.fail(path + ".j", "is out of range");
    op.drift[j].add(r.frequency(bs[n], dim, path), r.amplitude(bs[n], path));
  }
  for (int j = 0; j < dim; ++j)
    if (!op.drift[j].is_real_valued(kSymmetryTol))
      r.fail("b", fmt::format("component {} is not real-valued (c_-k must equal conj(c_k))", j));

  const json& vs = r.list(doc, "V");
  for (std::size_t n = 0; n < vs.size(); ++n) {
    const std::string path = fmt::format("V[{}]", n);
    op.potential.add(r.frequency(vs[n], dim, path), r.amplitude(vs[n], path));
  }
  if (!op.potential.is_real_valued(kSymmetryTol)) r.fail("V", "is not real-valued (c_-k must equal conj(c_k))");

  try {
    op.validate();
  } catch (const DomainError& e) {
    r.fail("g", e.what());
  }
  return op;
}

OperatorSpec load_operator_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot read operator spec '{}': file not found or unreadable", path.string()));
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("cannot read operator spec '{}': invalid JSON ({})", path.string(), e.what()));
  }
  return parse_operator_spec(doc, path.string());
}

std::vector<OperatorSpec> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir))
    throw InputError(fmt::format("cannot read corpus directory '{}'", dir.string()));
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError(fmt::format("corpus directory '{}' has no *.json operators", dir.string()));
  std::vector<OperatorSpec> ops;
  for (const auto& f : files) ops.push_back(load_operator_spec(f));
  return ops;
}

json to_json(const TrigPolynomial& p) {
  json arr = json::array();
  for (const auto& [k, a] : p.terms()) {
    json freq = json::array();
    for (int i = 0; i < p.dim(); ++i) freq.push_back(k[i]);
    arr.push_back(json{{"freq", freq}, {"re", a.value.real()}, {"im", a.value.imag()}});
  }
  return arr;
}

json to_json(const OperatorSpec& op) {
  json g = json::array();
  for (int i = 0; i < op.dim; ++i)
    for (int j = i; j < op.dim; ++j)
      for (auto entry : to_json(op.metric.entry(i, j))) {
        json e{{"i", i}, {"j", j}};
        e.update(entry);
        g.push_back(e);
      }
  json b = json::array();
  for (int j = 0; j < op.dim; ++j)
    for (auto entry : to_json(op.drift[j])) {
      json e{{"j", j}};
      e.update(entry);
      b.push_back(e);
    }
  return json{{"name", op.name}, {"dim", op.dim}, {"g", g}, {"b", b}, {"V", to_json(op.potential)}};
}

json to_json(const ParabolicSymbol& q) {
  json terms = json::array();
  for (const auto& [key, c] : q.terms()) {
    json beta = json::array();
    for (int i = 0; i < q.dim(); ++i) beta.push_back(key.beta[i]);
    terms.push_back(json{{"degree", key.degree()}, {"beta", beta}, {"lpow", key.lpow}, {"coeff", to_json(c)}});
  }
  json out{{"order", q.order()}};
  out["floor"] = q.floor() ? json(*q.floor()) : json(nullptr);
  out["terms"] = terms;
  return out;
}

std::string format_trig(const TrigPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [k, a] : p.terms()) {
    if (!out.empty()) out += " + ";
    const complex c = a.value;
    std::string amp = c.imag() == 0.0   ? fmt::format("{:.6g}", c.real())
                      : c.real() == 0.0 ? fmt::format("{:.6g}i", c.imag())
                                        : fmt::format("({:.6g}{:+.6g}i)", c.real(), c.imag());
    if (k == MultiIndex{}) {
      out += amp;
    } else if (p.dim() == 1) {
      out += fmt::format("{}e^{{i({})x}}", amp, k[0]);
    } else {
      out += fmt::format("{}e^{{i({},{})x}}", amp, k[0], k[1]);
    }
  }
  return out;
}

}  // namespace volterra::app
