/*
 * Copyright 2026 The quivcomp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quivcomp/components.hpp"
#include "quivcomp/filt.hpp"
#include "quivcomp/io.hpp"
#include "quivcomp/quiver.hpp"
#include "quivcomp/rep.hpp"
#include "quivcomp/skeleta.hpp"

namespace quivcomp {
namespace {

using Json = nlohmann::ordered_json;

struct Config {
  std::uint32_t prime = 101;
  std::vector<std::uint32_t> primes;  // multi-prime mode when non-empty
  std::uint64_t seed = 0;
  int retries = 4;
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t node_budget = SearchLimits{}.node_budget;
  unsigned extension = 2;
  bool json = false;
  bool serial = false;

  SearchLimits limits() const { return SearchLimits{budget, node_budget}; }
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
  std::vector<std::uint32_t> prime_list() const {
    return primes.empty() ? std::vector<std::uint32_t>{prime} : primes;
  }
  ClassifyConfig classify(std::uint32_t p) const {
    ClassifyConfig c;
    c.prime = p;
    c.extension_degree = extension;
    c.seed = seed;
    c.retries = retries;
    c.limits = limits();
    c.exec = exec();
    return c;
  }
};

// thrown for bad input; maps to exit code 1
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Algebra load_quiver(const std::string& path) {
  try {
    return parse_quiver(read_file(path));
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

RepPoint load_module(const Algebra& alg, std::uint32_t p, const std::string& path) {
  try {
    return parse_module(alg, FiniteField(p), read_file(path));
  } catch (const std::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

SemisimpleSequence sequence_arg(const Algebra& alg, const std::string& text) {
  SemisimpleSequence s;
  try {
    s = parse_sequence(text);
  } catch (const std::exception& e) {
    throw UsageError("--seq: " + std::string(e.what()));
  }
  if (static_cast<int>(s.length()) != alg.loewy_length() ||
      static_cast<int>(s.vertex_count()) != alg.vertex_count())
    throw UsageError("--seq needs " + std::to_string(alg.loewy_length()) + " layers of " +
                     std::to_string(alg.vertex_count()) + " entries");
  return s;
}

DimVector dim_arg(const Algebra& alg, const std::string& text) {
  DimVector d;
  try {
    d = parse_dim_vector(text);
  } catch (const std::exception& e) {
    throw UsageError("--dim: " + std::string(e.what()));
  }
  if (static_cast<int>(d.size()) != alg.vertex_count())
    throw UsageError("--dim needs " + std::to_string(alg.vertex_count()) + " entries");
  for (int x : d)
    if (x < 0) throw UsageError("--dim entries must be non-negative");
  return d;
}

// --------------------------------------------------------------------------- json

Json to_json(const Algebra& alg) {
  Json arrows = Json::array();
  for (const auto& a : alg.arrows())
    arrows.push_back({{"id", a.id}, {"source", a.source + 1}, {"target", a.target + 1}});
  return {{"vertices", alg.vertex_count()}, {"arrows", arrows}, {"loewy", alg.loewy_length()}};
}

Json rows_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const RepPoint& m) {
  Json mats = Json::object();
  for (int a = 0; a < m.algebra().arrow_count(); ++a)
    mats[m.algebra().arrow(a).id] = rows_json(m.matrix(a));
  return {{"field", m.field().name()}, {"dim", to_string(m.dims())}, {"matrices", mats}};
}

// flag[l][vertex] = echelon basis rows
Json to_json(const Filtration& f) {
  Json flag = Json::array();
  for (const auto& g : f.flag) {
    Json layer = Json::array();
    for (const auto& part : g.parts()) layer.push_back(rows_json(part.basis()));
    flag.push_back(layer);
  }
  return flag;
}

Json to_json(const ThetaPlus& t, const Algebra& alg) {
  Json paths = Json::array(), dual_paths = Json::array();
  for (const auto& p : enumerate_paths(alg, 0, alg.max_path_length()))
    paths.push_back(to_string(p, alg));
  const Algebra op = alg.opposite();
  for (const auto& p : enumerate_paths(op, 0, op.max_path_length()))
    dual_paths.push_back(to_string(p, op));
  return {{"radical", to_string(t.radical)}, {"socle", to_string(t.socle)},
          {"paths", paths},                  {"neg_ranks", t.neg_ranks},
          {"dual_paths", dual_paths},        {"neg_dual_ranks", t.neg_dual_ranks}};
}

Json to_json(const FiltrationResult& r) {
  Json j = {{"decision", to_string(r.decision)}, {"nodes", r.nodes}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json to_json(const ComponentReport& rep, const Config& cfg) {
  Json comps = Json::array(), rej = Json::array(), und = Json::array();
  for (const auto& c : rep.components)
    comps.push_back({{"layering", to_string(c.layering)},
                     {"theta_plus", to_json(c.theta_plus, rep.algebra)},
                     {"witness", to_json(c.witness)},
                     {"module_seed", c.module_seed},
                     {"hypergraph_dot", to_dot(c.hypergraph, rep.algebra)}});
  for (const auto& r : rep.rejected)
    rej.push_back({{"layering", to_string(r.layering)},
                   {"governed_by", to_string(r.governed_by)},
                   {"module_seed", r.module_seed}});
  for (const auto& u : rep.undetermined) {
    Json j = {{"layering", to_string(u.layering)}, {"reason", u.reason}};
    if (u.query) j["query"] = to_string(*u.query);
    und.push_back(j);
  }
  return {{"algebra", to_json(rep.algebra)},
          {"d", to_string(rep.d)},
          {"prime", rep.prime},
          {"extension_degree", rep.extension_degree},
          {"seed", rep.seed},
          {"retries", rep.retries},
          {"budget", cfg.budget},
          {"components", comps},
          {"rejected", rej},
          {"undetermined", und}};
}

std::string flag_text(const Filtration& f) {
  std::ostringstream out;
  for (std::size_t l = 0; l < f.flag.size(); ++l) {
    out << "  [" << l << "] dims " << to_string(f.flag[l].dims());
    for (std::size_t i = 0; i < f.flag[l].vertex_count(); ++i) {
      const Matrix& b = f.flag[l].part(i).basis();
      if (b.rows() == 0) continue;
      out << "  v" << i + 1 << ":";
      for (std::size_t r = 0; r < b.rows(); ++r) {
        out << " (";
        for (std::size_t c = 0; c < b.cols(); ++c) out << (c ? "," : "") << b(r, c);
        out << ")";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::string header(const std::string& cmd, const Config& cfg, std::uint32_t p) {
  return "# " + cmd + "  prime=" + std::to_string(p) + " extension=" +
         std::to_string(cfg.extension) + " seed=" + std::to_string(cfg.seed) +
         " retries=" + std::to_string(cfg.retries) + "\n";
}

Json echo(const Config& cfg) {
  Json primes = Json::array();
  for (auto p : cfg.prime_list()) primes.push_back(p);
  return {{"primes", primes}, {"extension_degree", cfg.extension}, {"seed", cfg.seed}};
}

// --------------------------------------------------------------------------- commands

int cmd_components(const Config& cfg, const std::string& qpath, const std::string& dtext,
                   bool all_skeleta, std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  const DimVector d = dim_arg(alg, dtext);
  std::vector<ComponentReport> reps;
  for (auto p : cfg.prime_list()) {
    ClassifyConfig c = cfg.classify(p);
    c.all_skeleta = all_skeleta;
    reps.push_back(classify(alg, d, c));
  }
  bool undetermined = false, agree = true;
  for (const auto& r : reps) {
    undetermined |= !r.undetermined.empty();
    agree &= r.component_layerings() == reps[0].component_layerings();
  }
  if (cfg.json) {
    if (reps.size() == 1) {
      out << to_json(reps[0], cfg).dump(2) << "\n";
    } else {
      Json runs = Json::array();
      for (const auto& r : reps) runs.push_back(to_json(r, cfg));
      out << Json{{"multi_prime", true}, {"agree", agree}, {"runs", runs}}.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reps) {
      out << header("components", cfg, r.prime) << "d " << to_string(r.d) << "\n";
      for (const auto& c : r.components) out << "component " << to_string(c.layering) << "\n";
      for (const auto& x : r.rejected)
        out << "rejected " << to_string(x.layering) << " governed by " << to_string(x.governed_by)
            << "\n";
      for (const auto& u : r.undetermined)
        out << "undetermined " << to_string(u.layering) << ": " << u.reason << "\n";
      out << "count " << r.components.size() << "\n";
    }
    if (reps.size() > 1) out << (agree ? "primes agree\n" : "primes DISAGREE\n");
  }
  return undetermined || !agree ? kExitUndecided : kExitDecided;
}

int cmd_realizable(const Config& cfg, const std::string& qpath, const std::string& stext,
                   std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  const auto s = sequence_arg(alg, stext);
  const bool r = is_realizable(alg, s);
  if (cfg.json)
    out << Json{{"sequence", to_string(s)}, {"realizable", r}}.dump(2) << "\n";
  else
    out << (r ? "true" : "false") << "\n";
  return kExitDecided;
}

int cmd_sequences(const Config& cfg, const std::string& qpath, const std::string& dtext,
                  bool realizable, std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  const auto seqs = enumerate_sequences(alg, dim_arg(alg, dtext), realizable);
  if (cfg.json) {
    Json list = Json::array();
    for (const auto& s : seqs) list.push_back(to_string(s));
    out << Json{{"d", dtext}, {"realizable_only", realizable}, {"sequences", list}}.dump(2) << "\n";
  } else {
    for (const auto& s : seqs) out << to_string(s) << "\n";
  }
  return kExitDecided;
}

int cmd_skeleta(const Config& cfg, const std::string& qpath, const std::string& stext, int limit,
                std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  const auto sks = enumerate_skeleta(alg, sequence_arg(alg, stext), limit);
  if (cfg.json) {
    Json list = Json::array();
    for (const auto& sk : sks) list.push_back(write_skeleton(sk, alg));
    out << Json{{"sequence", stext}, {"skeleta", list}}.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < sks.size(); ++k) out << (k ? "\n" : "") << write_skeleton(sks[k], alg);
  }
  return kExitDecided;
}

int cmd_generic(const Config& cfg, const std::string& qpath, const std::string& stext,
                const std::string& skel_path, const std::string& dot_path, std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  const auto s = sequence_arg(alg, stext);
  Skeleton sk;
  if (!skel_path.empty()) {
    try {
      sk = parse_skeleton(alg, read_file(skel_path));
    } catch (const std::exception& e) {
      throw UsageError(skel_path + ": " + e.what());
    }
    if (auto why = validate_skeleton(alg, sk, s)) throw UsageError(skel_path + ": " + *why);
  } else {
    auto all = enumerate_skeleta(alg, s, 1);
    if (all.empty()) throw UsageError("sequence " + stext + " is not realizable");
    sk = all[0];
  }
  GenericModule gm = generic_module(alg, FiniteField(cfg.prime), sk, mix_seed(cfg.seed));
  const std::string dot = to_dot(gm.hypergraph, alg);
  if (!dot_path.empty() && dot_path != "-") {
    std::ofstream f(dot_path);
    if (!f) throw UsageError("cannot write '" + dot_path + "'");
    f << dot;
  }
  if (cfg.json) {
    Json j = echo(cfg);
    j["sequence"] = to_string(s);
    j["skeleton"] = write_skeleton(sk, alg);
    j["module_seed"] = gm.seed;
    j["module"] = to_json(gm.module);
    j["module_text"] = write_module(gm.module);
    j["hypergraph_dot"] = dot;
    out << j.dump(2) << "\n";
  } else {
    out << header("generic", cfg, cfg.prime) << "# module_seed=" << gm.seed << "\n"
        << write_module(gm.module);
    if (dot_path == "-") out << dot;
  }
  return kExitDecided;
}

// the module under test: a file, or the generic module of a sequence
RepPoint module_or_generic(const Config& cfg, const Algebra& alg, std::uint32_t p,
                           const std::string& mpath, const std::string& stext) {
  if (!mpath.empty()) return load_module(alg, p, mpath);
  auto all = enumerate_skeleta(alg, sequence_arg(alg, stext), 1);
  if (all.empty()) throw UsageError("sequence " + stext + " is not realizable");
  return generic_module(alg, FiniteField(p), all[0], mix_seed(cfg.seed)).module;
}

RepPoint widen(const Config& cfg, const RepPoint& m) {
  return cfg.extension > 1 ? extend_scalars(m, FiniteField(m.field().p(), cfg.extension)) : m;
}

int cmd_gamma(const Config& cfg, const std::string& qpath, const std::string& mpath,
              const std::string& stext, bool all, std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  if (mpath.empty() == stext.empty()) throw UsageError("gamma needs exactly one of --module, --seq");
  Json runs = Json::array();
  bool exact = true;
  std::set<std::string> any;
  for (auto p : cfg.prime_list()) {
    const RepPoint m = module_or_generic(cfg, alg, p, mpath, stext);
    GammaReport g = governing_sequences(widen(cfg, m), !all, cfg.limits(), cfg.exec());
    exact &= g.exact();
    for (const auto& x : g.governed) any.insert(to_string(x.sequence));
    if (cfg.json) {
      Json gov = Json::array(), und = Json::array();
      for (const auto& x : g.governed)
        gov.push_back({{"sequence", to_string(x.sequence)}, {"witness", to_json(*x.result.witness)}});
      for (const auto& x : g.undecided)
        und.push_back({{"sequence", to_string(x.sequence)}, {"note", x.result.note}});
      runs.push_back({{"prime", p},
                      {"layering", to_string(radical_layering(m))},
                      {"realizable_only", !all},
                      {"lower", g.lower},
                      {"upper", g.upper},
                      {"governed", gov},
                      {"undecided", und}});
    } else {
      out << header("gamma", cfg, p) << "layering " << to_string(radical_layering(m)) << "\n";
      for (const auto& x : g.governed) out << "governs " << to_string(x.sequence) << "\n";
      for (const auto& x : g.undecided)
        out << "undecided " << to_string(x.sequence) << ": " << x.result.note << "\n";
      out << (all ? "sequences " : "gamma ") << g.lower;
      if (!g.exact()) out << ".." << g.upper;
      out << "\n";
    }
  }
  if (cfg.json) {
    Json j = echo(cfg);
    j["runs"] = runs;
    if (runs.size() > 1) j["governed_any"] = any;
    out << j.dump(2) << "\n";
  }
  return exact ? kExitDecided : kExitUndecided;
}

int cmd_filt(const Config& cfg, const std::string& qpath, const std::string& mpath,
             const std::string& stext, bool co, std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  const auto s = sequence_arg(alg, stext);
  // disjunction over primes: yes anywhere wins, else undecided anywhere
  Decision overall = Decision::no;
  Json runs = Json::array();
  for (auto p : cfg.prime_list()) {
    const RepPoint m = widen(cfg, load_module(alg, p, mpath));
    if (m.dims() != s.total())
      throw UsageError("sequence total " + to_string(s.total()) + " differs from module dim " +
                       to_string(m.dims()));
    FiltrationResult r = co ? has_cofiltration(m, s, cfg.limits()) : has_filtration(m, s, cfg.limits());
    if (r.decision == Decision::yes) overall = Decision::yes;
    else if (r.decision == Decision::undecided && overall == Decision::no) overall = Decision::undecided;
    if (cfg.json) {
      Json j = to_json(r);
      j["prime"] = p;
      runs.push_back(j);
    } else {
      out << header(co ? "cofilt" : "filt", cfg, p) << to_string(r.decision) << "\n";
      if (r.witness) out << flag_text(*r.witness);
      if (!r.note.empty()) out << "note " << r.note << "\n";
    }
  }
  if (cfg.json) {
    Json j = echo(cfg);
    j["sequence"] = to_string(s);
    j["kind"] = co ? "cofiltration" : "filtration";
    j["decision"] = to_string(overall);
    j["runs"] = runs;
    out << j.dump(2) << "\n";
  } else if (cfg.prime_list().size() > 1) {
    out << "overall " << to_string(overall) << "\n";
  }
  return overall == Decision::undecided ? kExitUndecided : kExitDecided;
}

int cmd_allocate(const Config& cfg, const std::string& qpath, const std::string& mpath,
                 const std::string& dtext, std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  const DimVector d = dim_arg(alg, dtext);
  const RepPoint m = load_module(alg, cfg.prime, mpath);
  if (m.dims() != d)
    throw UsageError("module has dim " + to_string(m.dims()) + ", --dim says " + dtext);
  ComponentReport rep = classify(alg, d, cfg.classify(cfg.prime));
  rep.extension_degree = cfg.extension;
  Allocation a = allocate(m, rep, cfg.limits(), cfg.exec());
  const bool undecided = !rep.undetermined.empty() || !a.undecided.empty();
  if (cfg.json) {
    Json in = Json::array(), und = Json::array(), pending = Json::array();
    for (const auto& x : a.contained)
      in.push_back({{"layering", to_string(x.sequence)}, {"witness", to_json(*x.result.witness)}});
    for (const auto& x : a.undecided)
      und.push_back({{"layering", to_string(x.sequence)}, {"note", x.result.note}});
    for (const auto& u : rep.undetermined) pending.push_back(to_string(u.layering));
    Json j = echo(cfg);
    j["d"] = to_string(d);
    j["components"] = in;
    j["undecided"] = und;
    j["unclassified"] = pending;
    out << j.dump(2) << "\n";
  } else {
    out << header("allocate", cfg, cfg.prime);
    for (const auto& x : a.contained) out << "in " << to_string(x.sequence) << "\n";
    for (const auto& x : a.undecided)
      out << "undecided " << to_string(x.sequence) << ": " << x.result.note << "\n";
    for (const auto& u : rep.undetermined)
      out << "unclassified " << to_string(u.layering) << ": " << u.reason << "\n";
  }
  return undecided ? kExitUndecided : kExitDecided;
}

int cmd_theta(const Config& cfg, const std::string& qpath, const std::string& mpath, bool plus,
              std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  const RepPoint m = load_module(alg, cfg.prime, mpath);
  const ThetaPlus t = theta_plus(m);
  if (cfg.json) {
    Json j = to_json(t, alg);
    if (!plus) j = Json{{"radical", j["radical"]}, {"socle", j["socle"]}};
    out << j.dump(2) << "\n";
  } else {
    out << "radical " << to_string(t.radical) << "\nsocle " << to_string(t.socle) << "\n";
    if (plus) {
      const auto paths = enumerate_paths(alg, 0, alg.max_path_length());
      const Algebra op = alg.opposite();
      const auto dpaths = enumerate_paths(op, 0, op.max_path_length());
      for (std::size_t k = 0; k < paths.size(); ++k)
        out << "rank " << to_string(paths[k], alg) << " " << -t.neg_ranks[k] << "\n";
      for (std::size_t k = 0; k < dpaths.size(); ++k)
        out << "dual_rank " << to_string(dpaths[k], op) << " " << -t.neg_dual_ranks[k] << "\n";
    }
  }
  return kExitDecided;
}

int cmd_closure(const Config& cfg, const std::string& qpath, const std::string& stext,
                const std::string& sub, std::ostream& out) {
  const Algebra alg = load_quiver(qpath);
  const auto s = sequence_arg(alg, stext), sp = sequence_arg(alg, sub);
  if (!is_realizable(alg, s) || !is_realizable(alg, sp))
    throw UsageError("closure needs two realizable sequences");
  if (s.total() != sp.total()) throw UsageError("sequences have different totals");
  ClosureResult r = closure_contains(alg, s, sp, cfg.classify(cfg.prime));
  if (cfg.json) {
    Json j = echo(cfg);
    j["sequence"] = to_string(s);
    j["inside"] = to_string(sp);
    j["decision"] = to_string(r.decision);
    j["by_dominance"] = r.by_dominance;
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (!r.note.empty()) j["note"] = r.note;
    out << j.dump(2) << "\n";
  } else {
    out << header("closure", cfg, cfg.prime) << to_string(r.decision) << "\n";
    if (!r.note.empty()) out << "note " << r.note << "\n";
  }
  return r.decision == Decision::undecided ? kExitUndecided : kExitDecided;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("QUIVCOMP_PRIME")) {
    try {
      cfg.prime = static_cast<std::uint32_t>(std::stoul(env));
    } catch (...) {
      err << "QUIVCOMP_PRIME='" << env << "' is not a number\n";
      return kExitUsage;
    }
  }

  CLI::App app{"Irreducible components of module varieties over truncated path algebras"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--prime,-p", cfg.prime, "Prime p (default $QUIVCOMP_PRIME or 101)");
  app.add_option("--primes", cfg.primes, "Multi-prime mode: run at each prime")->delimiter(',');
  app.add_option("--seed,-s", cfg.seed, "Random seed (echoed in output)");
  app.add_option("--retries", cfg.retries, "Extra generic modules tried before rejecting")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--budget", cfg.budget, "Subspaces enumerated per layer and vertex")
      ->check(CLI::PositiveNumber);
  app.add_option("--node-budget", cfg.node_budget, "Search nodes per filtration query")
      ->check(CLI::PositiveNumber);
  app.add_option("--extension,-k", cfg.extension,
                 "Search filtrations over F_{p^k} (1 = over F_p itself)")
      ->check(CLI::Range(1, 8));
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_flag("--serial", cfg.serial, "Run the serial reference path");

  std::string quiver, dim, seq, sub, module, skeleton, dot;
  bool flag_realizable = false, flag_all_skeleta = false, flag_plus = false, flag_all = false,
       flag_co = false;
  int limit = 0;

  auto* components = app.add_subcommand("components", "Classify the components of Rep_d");
  components->add_option("quiver", quiver)->required();
  components->add_option("--dim,-d", dim)->required();
  components->add_flag("--all-skeleta", flag_all_skeleta, "Majority vote over every skeleton");

  auto* realizable = app.add_subcommand("realizable", "Is the sequence a radical layering?");
  realizable->add_option("quiver", quiver)->required();
  realizable->add_option("--seq", seq)->required();

  auto* sequences = app.add_subcommand("sequences", "Semisimple sequences of total d");
  sequences->add_option("quiver", quiver)->required();
  sequences->add_option("--dim,-d", dim)->required();
  sequences->add_flag("--realizable", flag_realizable);

  auto* skeleta = app.add_subcommand("skeleta", "Skeleta with the given layering");
  skeleta->add_option("quiver", quiver)->required();
  skeleta->add_option("--seq", seq)->required();
  skeleta->add_option("--limit", limit, "Stop after this many (0 = all)")->check(CLI::NonNegativeNumber);

  auto* generic = app.add_subcommand("generic", "Generic module of a sequence");
  generic->add_option("quiver", quiver)->required();
  generic->add_option("--seq", seq)->required();
  generic->add_option("--skeleton", skeleton, "Skeleton file (default: the first skeleton)");
  generic->add_option("--dot", dot, "Write the hypergraph as DOT ('-' = stdout)");

  auto* gamma_cmd = app.add_subcommand("gamma", "Realizable sequences governing a filtration");
  gamma_cmd->add_option("quiver", quiver)->required();
  gamma_cmd->add_option("--module,-m", module);
  gamma_cmd->add_option("--seq", seq, "Use the generic module of this sequence");
  gamma_cmd->add_flag("--all", flag_all, "Include non-realizable sequences");

  auto* filt = app.add_subcommand("filt", "Does the sequence govern a filtration of the module?");
  filt->add_option("quiver", quiver)->required();
  filt->add_option("--module,-m", module)->required();
  filt->add_option("--seq", seq)->required();
  filt->add_flag("--co", flag_co, "Cofiltration; the sequence starts at the socle");

  auto* alloc = app.add_subcommand("allocate", "Components containing the module");
  alloc->add_option("quiver", quiver)->required();
  alloc->add_option("--module,-m", module)->required();
  alloc->add_option("--dim,-d", dim)->required();

  auto* theta_cmd = app.add_subcommand("theta", "Radical and socle layerings");
  theta_cmd->add_option("quiver", quiver)->required();
  theta_cmd->add_option("--module,-m", module)->required();
  theta_cmd->add_flag("--plus", flag_plus, "Also path ranks of M and its dual");

  auto* closure = app.add_subcommand("closure", "Is Rep S inside the closure of Rep S'?");
  closure->add_option("quiver", quiver)->required();
  closure->add_option("--seq", seq)->required();
  closure->add_option("--in", sub, "S'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitDecided : kExitUsage;
  }

  try {
    for (auto p : cfg.prime_list()) {
      if (!is_prime(p) || p >= (1u << 31)) throw UsageError(std::to_string(p) + " is not a prime");
      FiniteField(p, cfg.extension);  // validates the order cap
    }
    const bool multi = !cfg.primes.empty();
    if (multi && !(components->parsed() || gamma_cmd->parsed() || filt->parsed()))
      throw UsageError("--primes applies to components, gamma and filt only");

    if (components->parsed()) return cmd_components(cfg, quiver, dim, flag_all_skeleta, out);
    if (realizable->parsed()) return cmd_realizable(cfg, quiver, seq, out);
    if (sequences->parsed()) return cmd_sequences(cfg, quiver, dim, flag_realizable, out);
    if (skeleta->parsed()) return cmd_skeleta(cfg, quiver, seq, limit, out);
    if (generic->parsed()) return cmd_generic(cfg, quiver, seq, skeleton, dot, out);
    if (gamma_cmd->parsed()) return cmd_gamma(cfg, quiver, module, seq, flag_all, out);
    if (filt->parsed()) return cmd_filt(cfg, quiver, module, seq, flag_co, out);
    if (alloc->parsed()) return cmd_allocate(cfg, quiver, module, dim, out);
    if (theta_cmd->parsed()) return cmd_theta(cfg, quiver, module, flag_plus, out);
    if (closure->parsed()) return cmd_closure(cfg, quiver, seq, sub, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const GenericityError& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  } catch (const EnumerationBudgetError& e) {
    err << "undecided: " << e.what() << "\n";
    return kExitUndecided;
  }
  return kExitUsage;
}

}  // namespace quivcomp
