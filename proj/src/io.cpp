#include "phl/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "phl/error.hpp"

namespace phl::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::MalformedInput, what); }

std::vector<std::string> label_list(const Poset& p, ElementSet s) {
  std::vector<std::string> out;
  for (std::size_t x : members(s)) out.push_back(p.label(x));
  return out;
}

ElementSet label_set(const Poset& p, const json& arr, const char* field) {
  if (!arr.is_array()) malformed(std::string("\"") + field + "\" must be an array of labels");
  ElementSet s = 0;
  for (const auto& l : arr) {
    if (!l.is_string()) malformed(std::string("\"") + field + "\" must contain strings");
    s |= singleton(p.index(l.get<std::string>()));
  }
  return s;
}

}  // namespace

json poset_to_json(const Poset& p) {
  json pairs = json::array();
  for (const auto& [i, j] : p.covers()) pairs.push_back({p.label(i), p.label(j)});
  return json{{"labels", p.labels()}, {"pairs", pairs}, {"mode", "covers"}};
}

Poset poset_from_json(const json& doc) {
  if (!doc.is_object()) malformed("poset document must be a JSON object");
  if (!doc.contains("labels") || !doc["labels"].is_array()) malformed("poset document needs a \"labels\" array");
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) malformed("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("pairs")) {
    if (!doc["pairs"].is_array()) malformed("\"pairs\" must be an array");
    for (const auto& pr : doc["pairs"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string()) {
        malformed("each pair must be a two-element array of labels");
      }
      pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  PairMode mode = PairMode::covers;
  if (doc.contains("mode")) {
    const auto m = doc["mode"].is_string() ? doc["mode"].get<std::string>() : std::string();
    if (m == "full") {
      mode = PairMode::full;
    } else if (m != "covers") {
      malformed("\"mode\" must be \"covers\" or \"full\"");
    }
  }
  return from_pairs(std::move(labels), pairs, mode);
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    malformed(path.string() + ": " + e.what());
  }
}

Poset load_poset(std::string_view ref, const std::filesystem::path& base_dir) {
  if (ref.starts_with("catalog:")) {
    try {
      return catalog(ref.substr(8));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::InvalidParameter) malformed(e.what());
      throw;
    }
  }
  if (!ref.empty() && ref.front() == '{') {
    try {
      return poset_from_json(json::parse(ref));
    } catch (const json::exception& e) {
      malformed(std::string("inline poset: ") + e.what());
    }
  }
  std::filesystem::path path(ref.starts_with("file:") ? ref.substr(5) : ref);
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  return poset_from_json(read_json_file(path));
}

Poset poset_from_ref(const json& ref, const std::filesystem::path& base_dir) {
  if (ref.is_string()) return load_poset(ref.get<std::string>(), base_dir);
  if (ref.is_object()) return poset_from_json(ref);
  malformed("poset reference must be a string or an object");
}

json hom_to_json(const HomMap& f) {
  json out = json::object();
  for (std::size_t x = 0; x < f.map().size(); ++x) out[f.dom().label(x)] = f.cod().label(f(x));
  return out;
}

HomMap hom_from_json(const json& doc, const Poset& dom, const Poset& cod) {
  if (!doc.is_object()) malformed("map must be a JSON object from labels to labels");
  if (doc.size() != dom.size()) malformed("map must assign every domain label exactly once");
  std::vector<std::size_t> m(dom.size(), 0);
  for (const auto& [k, v] : doc.items()) {
    if (!v.is_string()) malformed("map values must be labels");
    m[dom.index(k)] = cod.index(v.get<std::string>());
  }
  return HomMap(dom, cod, std::move(m));
}

json ev_element_to_json(const EVSystem& e, std::size_t i) {
  const EVElement& el = e.element(i);
  const Poset& p = e.base();
  return json{{"anchor", p.label(el.anchor)}, {"down", label_list(p, el.down)}, {"up", label_list(p, el.up)}};
}

std::string ev_to_jsonl(const EVSystem& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) out += ev_element_to_json(e, i).dump() + "\n";
  return out;
}

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string set_text(const Poset& p, ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : members(s)) {
    out += (first ? "" : ",") + p.label(x);
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string ev_to_dot(const EVSystem& e, std::string_view graph_name) {
  const Poset& p = e.base();
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n  rankdir=BT;\n  node [shape=point];\n";
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto [first, last] = e.fiber_range(x);
    out << "  subgraph " << quoted("cluster_" + std::to_string(x)) << " {\n    label=" << quoted(p.label(x)) << ";\n";
    for (std::size_t i = first; i < last; ++i) {
      const EVElement& el = e.element(i);
      out << "    e" << i << " [tooltip=" << quoted("(" + p.label(x) + "," + set_text(p, el.down) + "," + set_text(p, el.up) + ")")
          << "];\n";
    }
    out << "  }\n";
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j : e.successors(i)) out << "  e" << i << " -> e" << j << ";\n";
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Certificates

namespace {

[[noreturn]] void bad_cert(const std::string& what) { fail(ErrorKind::MalformedCertificate, what); }

const json& field(const json& doc, const char* name) {
  if (!doc.contains(name)) bad_cert(std::string("certificate lacks \"") + name + "\"");
  return doc[name];
}

}  // namespace

json certificate_to_json(const TransportCertificate& cert) {
  json out;
  out["R"] = poset_to_json(cert.r);
  out["S"] = poset_to_json(cert.s);
  if (cert.q_classes) {
    json q = json::array();
    for (const Poset& p : *cert.q_classes) q.push_back(poset_to_json(p));
    out["q"] = q;
  }
  json qp = json::array();
  for (const Poset& p : cert.qprime_classes) qp.push_back(poset_to_json(p));
  out["qprime"] = qp;
  out["nu"] = cert.nu;
  out["lambda"] = cert.lambda;
  json dists = json::array();
  for (const DistributorSpec& d : cert.distributors) {
    json sources = json::array();
    for (const HomMap& tau : d.sources) sources.push_back(json{{"poset", poset_to_json(tau.dom())}, {"tau", hom_to_json(tau)}});
    dists.push_back(json{{"target", poset_to_json(d.target)}, {"sources", sources}});
  }
  out["distributors"] = dists;
  return out;
}

TransportCertificate certificate_from_json(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) bad_cert("certificate must be a JSON object");
  try {
    TransportCertificate cert;
    cert.r = poset_from_ref(field(doc, "R"), base_dir);
    cert.s = poset_from_ref(field(doc, "S"), base_dir);
    if (doc.contains("q")) {
      if (!doc["q"].is_array()) bad_cert("\"q\" must be an array");
      std::vector<Poset> q;
      for (const auto& ref : doc["q"]) q.push_back(poset_from_ref(ref, base_dir));
      cert.q_classes = std::move(q);
    }
    const json& qp = field(doc, "qprime");
    if (!qp.is_array()) bad_cert("\"qprime\" must be an array");
    for (const auto& ref : qp) cert.qprime_classes.push_back(poset_from_ref(ref, base_dir));
    const json& nu = field(doc, "nu");
    if (!nu.is_array()) bad_cert("\"nu\" must be an array");
    for (const auto& v : nu) {
      if (!v.is_number_unsigned()) bad_cert("\"nu\" entries must be natural numbers");
      cert.nu.push_back(v.get<std::size_t>());
    }
    std::vector<Poset> q_list;
    if (cert.q_classes) {
      q_list = *cert.q_classes;
    } else {
      q_list = embeddable_connected(cert.r).reps();
    }
    const json& lam = field(doc, "lambda");
    if (!lam.is_array()) bad_cert("\"lambda\" must be an array of arrays");
    for (const auto& row : lam) {
      if (!row.is_array()) bad_cert("\"lambda\" must be an array of arrays");
      std::vector<std::size_t> l;
      for (const auto& v : row) {
        if (v.is_number_unsigned()) {
          l.push_back(v.get<std::size_t>());
          continue;
        }
        const Poset target = poset_from_ref(v, base_dir);
        auto it = std::find_if(q_list.begin(), q_list.end(), [&](const Poset& q) { return is_isomorphic(q, target); });
        if (it == q_list.end()) bad_cert("lambda entry " + class_name(target) + " is not among the Q classes");
        l.push_back(static_cast<std::size_t>(it - q_list.begin()));
      }
      cert.lambda.push_back(std::move(l));
    }
    const json& dists = field(doc, "distributors");
    if (!dists.is_array()) bad_cert("\"distributors\" must be an array");
    for (const auto& d : dists) {
      if (!d.is_object()) bad_cert("distributor entries must be objects");
      DistributorSpec spec;
      spec.target = poset_from_ref(field(d, "target"), base_dir);
      const json& sources = field(d, "sources");
      if (!sources.is_array()) bad_cert("\"sources\" must be an array");
      for (const auto& src : sources) {
        if (!src.is_object()) bad_cert("source entries must be objects");
        const Poset dom = poset_from_ref(field(src, "poset"), base_dir);
        spec.sources.push_back(hom_from_json(field(src, "tau"), dom, spec.target));
      }
      cert.distributors.push_back(std::move(spec));
    }
    return cert;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::MalformedCertificate) throw;
    bad_cert(e.what());
  } catch (const json::exception& e) {
    bad_cert(e.what());
  }
}

json spec_to_json(const ConstructionSpec& spec) {
  json beta = json::object();
  for (const auto& [x, y] : spec.beta) beta[spec.p.label(x)] = spec.q.label(y);
  return json{{"P", poset_to_json(spec.p)},
              {"Q", poset_to_json(spec.q)},
              {"A", label_list(spec.p, spec.a)},
              {"B", label_list(spec.q, spec.b)},
              {"beta", beta}};
}

ConstructionSpec spec_from_json(const json& doc, const std::filesystem::path& base_dir) {
  if (!doc.is_object()) malformed("spec must be a JSON object");
  for (const char* k : {"P", "Q", "A", "B", "beta"}) {
    if (!doc.contains(k)) malformed(std::string("spec lacks \"") + k + "\"");
  }
  ConstructionSpec spec;
  spec.p = poset_from_ref(doc["P"], base_dir);
  spec.q = poset_from_ref(doc["Q"], base_dir);
  spec.a = label_set(spec.p, doc["A"], "A");
  spec.b = label_set(spec.q, doc["B"], "B");
  if (!doc["beta"].is_object()) malformed("\"beta\" must map labels of A to labels of B");
  for (const auto& [k, v] : doc["beta"].items()) {
    if (!v.is_string()) malformed("\"beta\" values must be labels");
    spec.beta[spec.p.index(k)] = spec.q.index(v.get<std::string>());
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Matrices

namespace {

void csv_block(std::ostringstream& out, const std::string& title, const CountMatrix& m) {
  out << title;
  for (const auto& c : m.col_names) out << "," << c;
  out << "\n";
  for (std::size_t i = 0; i < m.row_names.size(); ++i) {
    out << m.row_names[i];
    for (auto v : m.cells[i]) out << "," << v;
    out << "\n";
  }
}

void pretty_block(std::ostringstream& out, const std::string& title, const CountMatrix& m) {
  std::size_t w0 = title.size();
  for (const auto& r : m.row_names) w0 = std::max(w0, r.size());
  std::vector<std::size_t> w(m.col_names.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    w[j] = m.col_names[j].size();
    for (const auto& row : m.cells) w[j] = std::max(w[j], std::to_string(row[j]).size());
  }
  auto pad = [](const std::string& s, std::size_t width) { return std::string(width - s.size(), ' ') + s; };
  std::string line = title + std::string(w0 - title.size(), ' ');
  for (std::size_t j = 0; j < w.size(); ++j) line += "  " + pad(m.col_names[j], w[j]);
  while (!line.empty() && line.back() == ' ') line.pop_back();
  out << line << "\n";
  for (std::size_t i = 0; i < m.row_names.size(); ++i) {
    line = m.row_names[i] + std::string(w0 - m.row_names[i].size(), ' ');
    for (std::size_t j = 0; j < w.size(); ++j) {
      const auto v = m.cells[i][j];
      line += "  " + pad(v == 0 ? std::string() : std::to_string(v), w[j]);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }
}

}  // namespace

std::string format_csv(const FactorMatrices& m) {
  std::ostringstream out;
  csv_block(out, "sro", m.sro);
  out << "\n";
  csv_block(out, "emb", m.emb);
  out << "\n";
  csv_block(out, "strict", m.strict);
  return out.str();
}

std::string format_pretty(const FactorMatrices& m) {
  std::ostringstream out;
  pretty_block(out, "sro", m.sro);
  out << "\n";
  pretty_block(out, "emb", m.emb);
  out << "\n";
  pretty_block(out, "strict", m.strict);
  return out.str();
}

}  // namespace phl::io
