#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phl/config.hpp"
#include "phl/construction.hpp"
#include "phl/error.hpp"
#include "phl/ev_system.hpp"
#include "phl/factorization.hpp"
#include "phl/fixtures.hpp"
#include "phl/gscheme.hpp"
#include "phl/hom.hpp"
#include "phl/io.hpp"
#include "phl/poset.hpp"
#include "phl/random.hpp"

namespace {

using phl::io::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kDomain = 2;
constexpr int kMalformed = 3;

struct Globals {
  bool json_out = false;
  std::optional<std::size_t> bound;
  std::uint64_t seed = 1;
};

std::size_t bound_or(const Globals& g, std::size_t fallback) {
  return phl::Config::cap_bound(g.bound.value_or(fallback));
}

json witness_json(const phl::WitnessReport& w) {
  json out{{"verdict", std::string(phl::to_string(w.verdict))}, {"bound", w.bound}, {"checked_classes", w.checked_classes}};
  if (w.witness) {
    out["witness"] = json{{"P", phl::io::poset_to_json(w.witness->p)},
                          {"name", phl::class_name(w.witness->p)},
                          {"count_r", w.witness->r_count},
                          {"count_s", w.witness->s_count}};
  }
  return out;
}

void print_witness(const phl::WitnessReport& w) {
  std::cout << phl::to_string(w.verdict) << " (bound " << w.bound << ", " << w.checked_classes << " classes)\n";
  if (w.witness) {
    std::cout << "witness " << phl::class_name(w.witness->p) << ": #S(P,R) = " << w.witness->r_count
              << " > #S(P,S) = " << w.witness->s_count << "\n";
  }
}

json certificate_report_json(const phl::CertificateReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back(json{{"j", t.j},
                         {"i", t.i},
                         {"Q", t.q_name},
                         {"Qprime", t.qprime_name},
                         {"emb_Q_R", t.emb_q},
                         {"q", t.q_mult},
                         {"r", t.r_mult},
                         {"aut_Q", t.aut_q},
                         {"emb_Qprime_S", t.emb_qp},
                         {"aut_Qprime", t.aut_qp},
                         {"holds", t.holds}});
  }
  json dists = json::array();
  for (const auto& d : r.distributors) {
    json entry{{"passed", d.passed}, {"bound", d.bound}, {"posets_checked", d.posets_checked}};
    if (d.failure) entry["failure"] = d.failure->reason;
    dists.push_back(entry);
  }
  json out{{"verdict", std::string(phl::to_string(r.verdict))}, {"summary", r.summary()}, {"bound", r.bound},
           {"terms", terms}, {"distributors", dists}, {"sanity", witness_json(r.sanity)}};
  if (!r.failure.empty()) out["failure"] = r.failure;
  return out;
}

void print_certificate_report(const phl::CertificateReport& r) {
  for (const auto& t : r.terms) {
    std::cout << "  j=" << t.j << " " << t.qprime_name << " <- i=" << t.i << " " << t.q_name << ": " << t.emb_q << "/("
              << t.q_mult << "*" << t.r_mult << "*" << t.aut_q << ") <= " << t.emb_qp << "/" << t.aut_qp << " "
              << (t.holds ? "ok" : "violated") << "\n";
  }
  for (std::size_t k = 0; k < r.distributors.size(); ++k) {
    const auto& d = r.distributors[k];
    std::cout << "  distributor " << k << ": " << (d.passed ? "passed" : "failed") << " (" << d.posets_checked
              << " posets, bound " << d.bound << ")";
    if (d.failure) std::cout << " " << d.failure->reason;
    std::cout << "\n";
  }
  std::cout << "  sanity scan: " << phl::to_string(r.sanity.verdict) << " (bound " << r.sanity.bound << ")\n";
  std::cout << r.summary() << "\n";
}

void emit(const json& doc, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) phl::fail(phl::ErrorKind::InvalidParameter, "cannot write " + path);
  out << doc.dump(2) << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Finite poset homomorphism counting and order certificates"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json_out, "Structured JSON output (errors as JSON on stderr)");
  app.add_option("--bound", g.bound, "Size bound for bounded scans");
  app.add_option("--seed", g.seed, "Seed for random generators");
  app.fallthrough();

  int status = kOk;

  // catalog
  auto* cat = app.add_subcommand("catalog", "Print a built-in poset");
  std::string cat_name;
  std::string cat_format = "json";
  cat->add_option("name", cat_name, "Name such as N, C3, Lambda3 or A1+C3")->required();
  cat->add_option("--format", cat_format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  cat->callback([&] {
    const phl::Poset p = phl::io::load_poset("catalog:" + cat_name);
    if (cat_format == "dot") {
      std::cout << phl::to_dot(p, cat_name);
    } else {
      std::cout << phl::io::poset_to_json(p).dump(2) << "\n";
    }
  });

  // count
  auto* cnt = app.add_subcommand("count", "Count homomorphisms of one kind");
  std::string kind = "strict";
  std::string p_ref;
  std::string q_ref;
  bool brute = false;
  cnt->add_option("--kind", kind, "hom, strict, strict_onto, emb or aut");
  cnt->add_option("--p", p_ref, "Domain poset")->required();
  cnt->add_option("--q", q_ref, "Codomain poset")->required();
  cnt->add_flag("--brute", brute, "Filter all maps instead of backtracking");
  cnt->callback([&] {
    const auto k = phl::parse_hom_kind(kind);
    const auto p = phl::io::load_poset(p_ref);
    const auto q = phl::io::load_poset(q_ref);
    const std::uint64_t n = brute ? phl::brute_force_count(k, p, q) : phl::count(k, p, q);
    if (g.json_out) {
      std::cout << json{{"kind", std::string(phl::to_string(k))}, {"count", n}}.dump() << "\n";
    } else {
      std::cout << n << "\n";
    }
  });

  // enumerate
  auto* en = app.add_subcommand("enumerate", "List homomorphisms of one kind");
  std::string en_emit = "jsonl";
  en->add_option("--kind", kind, "hom, strict, strict_onto, emb or aut");
  en->add_option("--p", p_ref, "Domain poset")->required();
  en->add_option("--q", q_ref, "Codomain poset")->required();
  en->add_option("--emit", en_emit, "jsonl or text")->check(CLI::IsMember({"jsonl", "text"}));
  en->callback([&] {
    const auto k = phl::parse_hom_kind(kind);
    const auto p = phl::io::load_poset(p_ref);
    const auto q = phl::io::load_poset(q_ref);
    phl::for_each_map(k, p, q, [&](std::span<const std::size_t> m) {
      if (en_emit == "jsonl") {
        json line = json::object();
        for (std::size_t x = 0; x < m.size(); ++x) line[p.label(x)] = q.label(m[x]);
        std::cout << line.dump() << "\n";
      } else {
        for (std::size_t x = 0; x < m.size(); ++x) std::cout << (x ? " " : "") << q.label(m[x]);
        std::cout << "\n";
      }
      return true;
    });
  });

  // matrix
  auto* mat = app.add_subcommand("matrix", "Factorization matrices for target posets");
  std::vector<std::string> targets;
  std::vector<std::string> rows;
  std::string mat_format = "pretty";
  mat->add_option("--targets", targets, "Target posets")->required();
  mat->add_option("--rows", rows, "Row universe in display order (default: sorted classes)");
  mat->add_option("--format", mat_format, "csv or pretty")->check(CLI::IsMember({"csv", "pretty"}));
  mat->callback([&] {
    std::vector<phl::Poset> ts;
    std::vector<std::string> names;
    for (const auto& t : targets) {
      ts.push_back(phl::io::load_poset(t));
      names.push_back(phl::class_name(ts.back()));
    }
    phl::FactorMatrices m;
    if (rows.empty()) {
      m = phl::factor_matrices(ts, names);
    } else {
      std::vector<phl::Poset> universe;
      for (const auto& r : rows) universe.push_back(phl::io::load_poset(r));
      m = phl::factor_matrices(universe, ts, names);
    }
    if (g.json_out) {
      auto block = [](const phl::CountMatrix& c) {
        return json{{"rows", c.row_names}, {"cols", c.col_names}, {"cells", c.cells}};
      };
      std::cout << json{{"sro", block(m.sro)}, {"emb", block(m.emb)}, {"strict", block(m.strict)}}.dump(2) << "\n";
    } else {
      std::cout << (mat_format == "csv" ? phl::io::format_csv(m) : phl::io::format_pretty(m));
    }
  });

  // verify-cert
  auto* vc = app.add_subcommand("verify-cert", "Verify a transport certificate");
  std::string cert_path;
  vc->add_option("--cert", cert_path, "Certificate JSON file")->required();
  vc->callback([&] {
    const std::filesystem::path path(cert_path);
    const auto cert = phl::io::certificate_from_json(phl::io::read_json_file(path), path.parent_path());
    const auto report = phl::verify_certificate(cert, bound_or(g, phl::config().distributor_bound));
    if (g.json_out) {
      std::cout << certificate_report_json(report).dump(2) << "\n";
    } else {
      print_certificate_report(report);
    }
    if (report.verdict != phl::CertificateReport::Verdict::certified) status = kDomain;
  });

  // check-gle
  auto* gle = app.add_subcommand("check-gle", "Bounded scan of #S(P,R) <= #S(P,S) over connected P");
  std::string r_ref;
  std::string s_ref;
  gle->add_option("--r", r_ref, "Poset R")->required();
  gle->add_option("--s", s_ref, "Poset S")->required();
  gle->callback([&] {
    const auto report = phl::bounded_gle_check(phl::io::load_poset(r_ref), phl::io::load_poset(s_ref),
                                               bound_or(g, phl::config().scan_bound));
    if (g.json_out) {
      std::cout << witness_json(report).dump(2) << "\n";
    } else {
      print_witness(report);
    }
  });

  // witness
  auto* wit = app.add_subcommand("witness", "Connected poset separating the strict counts of R and S");
  wit->add_option("--r", r_ref, "Poset R")->required();
  wit->add_option("--s", s_ref, "Poset S")->required();
  wit->callback([&] {
    const auto w = phl::witness_search(phl::io::load_poset(r_ref), phl::io::load_poset(s_ref), g.bound.value_or(0));
    if (g.json_out) {
      std::cout << json{{"P", phl::io::poset_to_json(w.p)},
                        {"name", phl::class_name(w.p)},
                        {"count_r", w.r_count},
                        {"count_s", w.s_count}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << phl::class_name(w.p) << ": " << w.r_count << " vs " << w.s_count << "\n";
    }
  });

  // construct-sum
  auto* cs = app.add_subcommand("construct-sum", "Graft P \\ A onto Q along beta and verify the result");
  std::string spec_path;
  std::string t_out;
  std::size_t verify_bound = 5;
  bool random_spec = false;
  bool epsilon = false;
  cs->add_option("--spec", spec_path, "Construction spec JSON file");
  cs->add_flag("--random", random_spec, "Use a random spec drawn with --seed");
  cs->add_option("--emit", t_out, "Write T as a poset document to this file ('-' for stdout)");
  cs->add_option("--verify-bound", verify_bound, "Bound of the redundant strict count scan");
  cs->add_flag("--epsilon", epsilon, "Also build and check the EV map (A must be an antichain)");
  cs->callback([&] {
    phl::ConstructionSpec spec;
    if (random_spec) {
      phl::Rng rng(g.seed);
      spec = phl::random_spec(rng);
    } else {
      if (spec_path.empty()) phl::fail(phl::ErrorKind::MalformedInput, "construct-sum needs --spec or --random");
      const std::filesystem::path path(spec_path);
      spec = phl::io::spec_from_json(phl::io::read_json_file(path), path.parent_path());
    }
    const auto report = phl::theorem3_pipeline(spec, phl::Config::cap_bound(verify_bound));
    json out{{"spec", phl::io::spec_to_json(spec)},
             {"T", phl::io::poset_to_json(report.result.t)},
             {"T_class", phl::class_name(report.result.t)},
             {"S_class", phl::class_name(report.result.s)},
             {"relation_sizes",
              {{"O", report.result.leq_o.size()},
               {"Q", report.result.leq_q.size()},
               {"d", report.result.leq_d.size()},
               {"u", report.result.leq_u.size()}}}};
    json obs = json::array();
    for (const auto& ob : report.obligations) {
      obs.push_back(json{{"E", ob.name}, {"emb_R", ob.emb_r}, {"emb_S", ob.emb_s}, {"holds", ob.holds}});
    }
    out["obligations"] = obs;
    out["scan"] = witness_json(report.scan);
    if (epsilon) {
      const auto eps = phl::build_epsilon_antichain(spec);
      out["epsilon"] = json{{"source_size", eps.eps.source->size()},
                            {"target_size", eps.eps.target->size()},
                            {"injective", eps.injective},
                            {"homomorphism", eps.homomorphism},
                            {"strict", eps.strict},
                            {"anchors_preserved", eps.anchors_preserved}};
      if (!eps.passed()) status = kDomain;
    }
    if (!t_out.empty()) emit(phl::io::poset_to_json(report.result.t), t_out);
    if (g.json_out) {
      std::cout << out.dump(2) << "\n";
    } else if (t_out != "-") {
      std::cout << "T = " << phl::class_name(report.result.t) << ", S = A'+T = " << phl::class_name(report.result.s)
                << "\n";
      for (const auto& ob : report.obligations) {
        std::cout << "  #Emb(" << ob.name << ", P+Q) = " << ob.emb_r << " <= #Emb(" << ob.name
                  << ", A'+T) = " << ob.emb_s << "\n";
      }
      std::cout << "  scan: " << phl::to_string(report.scan.verdict) << " (bound " << report.scan.bound << ")\n";
      if (out.contains("epsilon")) std::cout << "  epsilon: " << out["epsilon"].dump() << "\n";
    }
  });

  // ev
  auto* ev = app.add_subcommand("ev", "Export the EV-system of a poset");
  std::string ev_format = "jsonl";
  std::string ev_at;
  ev->add_option("--p", p_ref, "Base poset")->required();
  ev->add_option("--format", ev_format, "jsonl or dot")->check(CLI::IsMember({"jsonl", "dot"}));
  ev->add_option("--at", ev_at, "Only the fibre over this label");
  ev->callback([&] {
    const auto e = phl::build_ev(phl::io::load_poset(p_ref));
    if (!ev_at.empty()) {
      const auto x = e.base().find(ev_at);
      if (!x) phl::fail(phl::ErrorKind::UnknownElement, "no element labelled '" + ev_at + "'");
      const auto [first, last] = e.fiber_range(*x);
      for (std::size_t i = first; i < last; ++i) std::cout << phl::io::ev_element_to_json(e, i).dump() << "\n";
      return;
    }
    std::cout << (ev_format == "dot" ? phl::io::ev_to_dot(e) : phl::io::ev_to_jsonl(e));
  });

  // dot
  auto* dot = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot->add_option("--p", p_ref, "Poset")->required();
  dot->callback([&] { std::cout << phl::to_dot(phl::io::load_poset(p_ref)); });

  // selftest
  auto* st = app.add_subcommand("selftest", "Replay the built-in reference fixtures");
  st->callback([&] {
    if (!phl::fixtures::selftest(std::cout, bound_or(g, phl::config().distributor_bound))) status = kDomain;
  });

  // suggest
  auto* sg = app.add_subcommand("suggest", "Experimental: strict onto maps Q -> Q' that pass the distributing test");
  std::string qp_ref;
  sg->add_option("--q", q_ref, "Source poset")->required();
  sg->add_option("--qprime", qp_ref, "Target poset")->required();
  sg->callback([&] {
    for (const auto& tau : phl::suggest_distributing(phl::io::load_poset(q_ref), phl::io::load_poset(qp_ref))) {
      std::cout << phl::io::hom_to_json(tau).dump() << "\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const phl::Error& e) {
    if (g.json_out) {
      std::cerr << json{{"error", std::string(phl::to_string(e.kind()))}, {"message", e.message()}}.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return phl::is_input_error(e.kind()) ? kMalformed : kDomain;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
