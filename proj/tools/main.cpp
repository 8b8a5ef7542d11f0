// ramsey-forge: tournament Ramsey machinery at desk scale.
//
// Exit codes: 0 success, 1 negative mathematical outcome (failed
// verification, no copy found, inconclusive search), 2 usage or I/O error.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "forge/embed.hpp"
#include "forge/io.hpp"
#include "forge/mesh.hpp"
#include "forge/prefix.hpp"
#include "forge/ramsey.hpp"
#include "forge/random_models.hpp"
#include "forge/tourney.hpp"
#include "forge/walks.hpp"

namespace {

int g_log_level = 0;  // 0 errors, 1 info, 2 debug (RAMSEY_FORGE_LOG)

void init_log_level() {
  const char* env = std::getenv("RAMSEY_FORGE_LOG");
  if (!env) return;
  const std::string v(env);
  if (v == "1" || v == "info") g_log_level = 1;
  if (v == "2" || v == "debug") g_log_level = 2;
}

void log_info(const std::string& msg) {
  if (g_log_level >= 1) std::fprintf(stderr, "[info] %s\n", msg.c_str());
}

struct Options {
  std::uint64_t seed = 0;
  bool seed_set = false;
  int threads = 1;
  long long timeout_s = 0;
  std::string format = "text";
};

std::uint64_t need_seed(const Options& opt) {
  if (!opt.seed_set)
    throw forge::Error("this subcommand is randomized; pass --seed");
  return opt.seed;
}

void arm_watchdog(long long timeout_s) {
  if (timeout_s <= 0) return;
  std::thread([timeout_s] {
    std::this_thread::sleep_for(std::chrono::seconds(timeout_s));
    std::fprintf(stderr, "timeout after %llds\n",
                 static_cast<long long>(timeout_s));
    std::exit(1);
  }).detach();
}

// ---- certificate builders --------------------------------------------------

std::string digest_of(const std::string& serialized) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(forge::io::fnv1a(serialized)));
  return buf;
}

std::string join_vertices(const std::vector<int>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ',';
    out << vs[i] + 1;
  }
  return out.str();
}

std::vector<int> split_vertices(const std::string& s) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stoi(s.substr(pos, comma - pos)) - 1);
    pos = comma + 1;
  }
  return out;
}

forge::io::Certificate embedding_cert(const forge::AcyclicDigraph& h,
                                      const forge::Tournament& t,
                                      const forge::Embedding& phi) {
  forge::io::Certificate cert;
  cert.kind = "embedding";
  cert.add("pattern-n", h.order());
  cert.add("host-n", t.order());
  cert.add("map", join_vertices(phi.map));
  cert.add("pattern-digest", digest_of(forge::io::serialize(h)));
  cert.add("host-digest", digest_of(forge::io::serialize(t)));
  return cert;
}

forge::io::Certificate dense_pair_cert(const forge::Tournament& t,
                                       const forge::DensePair& dp) {
  forge::io::Certificate cert;
  cert.kind = "dense-pair";
  cert.add("w1", join_vertices(dp.w1));
  cert.add("w2", join_vertices(dp.w2));
  cert.add("forward-count", dp.forward_count);
  cert.add("delta", std::to_string(dp.delta_achieved));
  cert.add("host-digest", digest_of(forge::io::serialize(t)));
  return cert;
}

void emit(const forge::io::Certificate& cert) {
  std::cout << forge::io::serialize(cert);
}

// ---- subcommand handlers ---------------------------------------------------

int run_mesh_build(const std::string& fspec, int n, const std::string& out) {
  const auto f = forge::MonotoneFunction::parse(fspec);
  const forge::AcyclicDigraph mesh = forge::build_interval_mesh(f, n);
  forge::io::save(out, forge::io::serialize(mesh));
  log_info("mesh written: " + std::to_string(mesh.num_edges()) + " edges, max degree " +
           std::to_string(mesh.max_degree()));
  return 0;
}

int run_mesh_verify(const std::string& fspec, const std::string& in,
                    int threads) {
  const auto f = forge::MonotoneFunction::parse(fspec);
  const forge::AcyclicDigraph mesh = forge::io::load_digraph(in);
  const forge::MeshCertificate mc = forge::verify_interval_mesh(mesh, f, threads);

  forge::io::Certificate cert;
  cert.kind = "mesh";
  cert.add("f", mc.f_desc);
  cert.add("n", mc.n);
  cert.add("max-degree", mc.max_degree);
  cert.add("trunc-s", std::to_string(mc.truncated_s));
  cert.add("degree-bound-ok", mc.degree_bound_ok ? "yes" : "no");
  cert.add("pairs-checked", mc.pairs_checked);
  cert.add("pass", mc.pass ? "yes" : "no");
  if (mc.witness) {
    std::ostringstream w;
    w << mc.witness->a1 << ' ' << mc.witness->b1 << ' ' << mc.witness->a2
      << ' ' << mc.witness->b2;
    cert.add("witness", w.str());
  }
  cert.add("input-digest", digest_of(forge::io::serialize(mesh)));
  emit(cert);
  return mc.pass ? 0 : 1;
}

int run_validate(const std::string& cert_path, const std::string& pattern,
                 const std::string& host, const std::string& labeling,
                 const std::string& fspec, int s) {
  std::istringstream in(forge::io::slurp(cert_path));
  const forge::io::Certificate cert = forge::io::parse_certificate(in);

  auto check_digest = [&](const char* key, const std::string& serialized) {
    const std::string* want = cert.find(key);
    if (want && *want != digest_of(serialized))
      throw forge::Error(std::string("digest mismatch for ") + key);
  };

  if (cert.kind == "embedding") {
    const auto h = forge::io::load_digraph(pattern);
    const auto t = forge::io::load_tournament(host);
    check_digest("pattern-digest", forge::io::serialize(h));
    check_digest("host-digest", forge::io::serialize(t));
    forge::Embedding phi{split_vertices(*cert.find("map"))};
    return forge::validate_embedding(h, t, phi) ? 0 : 1;
  }
  if (cert.kind == "dense-pair") {
    const auto t = forge::io::load_tournament(host);
    check_digest("host-digest", forge::io::serialize(t));
    const auto w1 = split_vertices(*cert.find("w1"));
    const auto w2 = split_vertices(*cert.find("w2"));
    const long long fwd = forge::count_forward(t, w1, w2);
    return fwd == std::stoll(*cert.find("forward-count")) &&
                   fwd >= std::stod(*cert.find("delta")) *
                              static_cast<double>(w1.size()) * w2.size()
               ? 0
               : 1;
  }
  if (cert.kind == "mesh") {
    const auto h = forge::io::load_digraph(pattern);
    check_digest("input-digest", forge::io::serialize(h));
    const auto f = forge::MonotoneFunction::parse(fspec);
    const auto mc = forge::verify_interval_mesh(h, f);
    return (mc.pass ? "yes" : "no") == *cert.find("pass") ? 0 : 1;
  }
  if (cert.kind == "walk") {
    const auto t = forge::io::load_tournament(host);
    const auto f = forge::MonotoneFunction::parse(fspec);
    std::istringstream win(*cert.find("runs"));
    forge::Walk walk;
    std::string tok;
    while (std::getline(win, tok, ',')) {
      const auto colon = tok.find(':');
      walk.runs.emplace_back(std::stoi(tok.substr(0, colon)) - 1,
                             std::stoi(tok.substr(colon + 1)));
    }
    return forge::is_valid_walk(t, f, s, walk) ==
                   (*cert.find("valid") == "yes")
               ? 0
               : 1;
  }
  if (cert.kind == "skeleton") {
    const auto h = forge::io::load_digraph(pattern);
    const auto t = forge::io::load_tournament(host);
    const auto rho = forge::io::load_labeling(labeling);
    forge::Skeleton sk;
    sk.delta = std::stod(*cert.find("delta"));
    for (const auto& [key, value] : cert.fields)
      if (key.rfind("set-", 0) == 0) {
        const std::string word = key.substr(4) == "-" ? "" : key.substr(4);
        sk.sets[word] = split_vertices(value);
      }
    return forge::validate_skeleton(h, t, rho, sk) ? 0 : 1;
  }
  if (cert.kind == "ramsey-value") {
    const auto h = forge::io::load_digraph(pattern);
    check_digest("pattern-digest", forge::io::serialize(h));
    const std::string* wit = cert.find("witness-host");
    if (wit) {
      std::string text = *wit;
      for (char& ch : text)
        if (ch == '/') ch = '\n';
      std::istringstream tin(text);
      const forge::Tournament t = forge::io::parse_tournament(tin);
      if (forge::contains_copy(t, h)) return 1;  // witness must avoid h
      const std::string* val = cert.find("value");
      if (val && *val != "inconclusive" &&
          t.order() != std::stoi(*val) - 1)
        return 1;
    }
    return 0;
  }
  if (cert.kind == "partition" || cert.kind == "stats") {
    if (!pattern.empty()) {
      const auto h = forge::io::load_digraph(pattern);
      check_digest("pattern-digest", forge::io::serialize(h));
      if (cert.kind == "partition") {
        forge::DirectedPartition p;
        for (const auto& [key, value] : cert.fields)
          if (key.rfind("part-", 0) == 0)
            p.parts.push_back(split_vertices(value));
        return forge::is_directed_partition(h, p) &&
                       forge::parts_all_one_degenerate(h, p)
                   ? 0
                   : 1;
      }
    }
    return 0;
  }
  throw forge::Error("unknown certificate kind '" + cert.kind + "'");
}

std::vector<std::vector<int>> load_sets_or_full(const std::string& path,
                                                int n, int host_n) {
  std::vector<std::vector<int>> sets(n);
  if (path.empty()) {
    std::vector<int> all(host_n);
    for (int w = 0; w < host_n; ++w) all[w] = w;
    for (int v = 0; v < n; ++v) sets[v] = all;
    return sets;
  }
  std::istringstream in(forge::io::slurp(path));
  std::string header;
  std::getline(in, header);
  std::istringstream hs(header);
  std::string word;
  int count = 0;
  hs >> word >> count;
  if (word != "sets" || count != n)
    throw forge::Error("sets file must start with 'sets " + std::to_string(n) +
                       "'");
  for (int v = 0; v < n; ++v) {
    std::string line;
    if (!std::getline(in, line)) throw forge::Error("sets file truncated");
    std::istringstream ls(line);
    int w;
    while (ls >> w) sets[v].push_back(w - 1);
  }
  return sets;
}

}  // namespace

int main(int argc, char** argv) {
  init_log_level();
  CLI::App app{"tournament Ramsey machinery at desk scale"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--seed", opt.seed, "random seed (required when randomized)")
      ->each([&](const std::string&) { opt.seed_set = true; });
  app.add_option("--threads", opt.threads, "worker threads");
  app.add_option("--timeout-s", opt.timeout_s, "hard wall-clock limit");
  app.add_option("--format", opt.format, "output format (text)");

  // ---- mesh ----
  auto* mesh = app.add_subcommand("mesh", "interval meshes");
  auto* mesh_build = mesh->add_subcommand("build", "greedy mesh construction");
  std::string mesh_f = "const:1", mesh_out, mesh_in;
  int mesh_n = 1;
  mesh_build->add_option("--f", mesh_f)->required();
  mesh_build->add_option("--n", mesh_n)->required();
  mesh_build->add_option("-o,--output", mesh_out)->required();
  auto* mesh_verify = mesh->add_subcommand("verify", "exhaustive mesh check");
  mesh_verify->add_option("--f", mesh_f)->required();
  mesh_verify->add_option("-i,--input", mesh_in)->required();

  // ---- tourney ----
  auto* tour = app.add_subcommand("tourney", "tournament constructions");
  auto* tg = tour->add_subcommand("gen", "seeded random tournament");
  int tour_n = 1, tour_q = 3, tour_m = 1;
  std::string tour_out, tour_in, tour_pattern;
  tg->add_option("--n", tour_n)->required();
  tg->add_option("-o,--output", tour_out)->required();
  auto* tp = tour->add_subcommand("paley", "quadratic-residue tournament");
  tp->add_option("--q", tour_q)->required();
  tp->add_option("-o,--output", tour_out)->required();
  auto* tpow = tour->add_subcommand("power", "lexicographic power");
  tpow->add_option("-i,--input", tour_in)->required();
  tpow->add_option("--m", tour_m)->required();
  tpow->add_option("-o,--output", tour_out)->required();
  auto* tmax = tour->add_subcommand("maxtt", "maximum transitive subtournament");
  tmax->add_option("-i,--input", tour_in)->required();
  auto* tmed = tour->add_subcommand("median", "forward-edge maximizing order");
  tmed->add_option("-i,--input", tour_in)->required();
  auto* tcon = tour->add_subcommand("contains", "pattern containment");
  tcon->add_option("-i,--input", tour_in)->required();
  tcon->add_option("--pattern", tour_pattern)->required();

  // ---- embed ----
  auto* emb = app.add_subcommand("embed", "greedy embedding framework");
  std::string emb_pattern, emb_host, emb_sets;
  double emb_c = 0.5;
  auto* eg = emb->add_subcommand("greedy", "one greedy pass");
  auto* ed = emb->add_subcommand("dense-pair", "embedding-or-dense-pair");
  auto* ef = emb->add_subcommand("forest", "forest 1-dense dichotomy");
  auto* ei = emb->add_subcommand("inner", "density-guaranteed embedding");
  for (CLI::App* sub : {eg, ed, ef, ei}) {
    sub->add_option("--pattern", emb_pattern)->required();
    sub->add_option("--host", emb_host)->required();
  }
  eg->add_option("--c", emb_c);
  ed->add_option("--c", emb_c);
  ef->add_option("--sets", emb_sets);
  ei->add_option("--sets", emb_sets);

  // ---- prefix ----
  auto* pre = app.add_subcommand("prefix", "prefix labelings and skeletons");
  std::string pre_pattern, pre_host, pre_label, pre_label2, pre_out, pre_mode =
      "coloring";
  double pre_c = 0.25;
  bool pre_force = false;
  auto* ps = pre->add_subcommand("stats", "labeling statistics");
  ps->add_option("--pattern", pre_pattern)->required();
  ps->add_option("--labeling", pre_label)->required();
  auto* ph = pre->add_subcommand("height-color", "height prefix coloring");
  ph->add_option("--pattern", pre_pattern)->required();
  ph->add_option("-o,--output", pre_out)->required();
  auto* pg = pre->add_subcommand("graded-color", "graded prefix coloring");
  pg->add_option("--pattern", pre_pattern)->required();
  pg->add_option("-o,--output", pre_out)->required();
  auto* pk = pre->add_subcommand("skeleton", "dense skeleton construction");
  pk->add_option("--pattern", pre_pattern)->required();
  pk->add_option("--host", pre_host)->required();
  pk->add_option("--labeling", pre_label)->required();
  pk->add_option("--c", pre_c);
  pk->add_flag("--override-precondition", pre_force);
  auto* pp = pre->add_subcommand("pipeline", "end-to-end embedding pipeline");
  pp->add_option("--pattern", pre_pattern)->required();
  pp->add_option("--host", pre_host)->required();
  pp->add_option("--labeling", pre_label);
  pp->add_option("--labeling2", pre_label2);
  pp->add_option("--mode", pre_mode)->check(CLI::IsMember({"coloring", "two"}));
  pp->add_flag("--override-precondition", pre_force);
  auto* pf = pre->add_subcommand("partition", "greedy forest partition");
  pf->add_option("--pattern", pre_pattern)->required();

  // ---- walk ----
  auto* wk = app.add_subcommand("walk", "constrained tournament walks");
  std::string wk_in, wk_host, wk_f = "const:1", wk_emb, wk_out;
  int wk_s = 1, wk_m = 1, wk_slo = 0, wk_shi = -1;
  double wk_t = 0;
  long long wk_budget = 1000000;
  auto* wc = wk->add_subcommand("check", "validate a walk file");
  wc->add_option("-i,--input", wk_in)->required();
  wc->add_option("--host", wk_host)->required();
  wc->add_option("--f", wk_f)->required();
  wc->add_option("--s", wk_s)->required();
  auto* we = wk->add_subcommand("extract", "project an embedding to a walk");
  we->add_option("--embedding", wk_emb)->required();
  we->add_option("--host", wk_host)->required();
  we->add_option("--m", wk_m)->required();
  we->add_option("-o,--output", wk_out)->required();
  auto* ws = wk->add_subcommand("search", "longest-walk search / probe");
  ws->add_option("--host", wk_host)->required();
  ws->add_option("--f", wk_f)->required();
  ws->add_option("--s", wk_s);
  ws->add_option("--s-lo", wk_slo);
  ws->add_option("--s-hi", wk_shi);
  ws->add_option("--t", wk_t);
  ws->add_option("--budget", wk_budget);

  // ---- random ----
  auto* rnd = app.add_subcommand("random", "random digraph models");
  int rnd_n = 1, rnd_d = 2, rnd_trials = 1;
  double rnd_p = 0.5;
  std::string rnd_out, rnd_pattern, rnd_subset;
  auto* rg = rnd->add_subcommand("grd", "oriented random regular digraph");
  rg->add_option("--n", rnd_n)->required();
  rg->add_option("--d", rnd_d)->required();
  rg->add_option("--trials", rnd_trials);
  rg->add_option("-o,--output", rnd_out);
  auto* rp = rnd->add_subcommand("gnp", "oriented binomial digraph");
  rp->add_option("--n", rnd_n)->required();
  rp->add_option("--p", rnd_p)->required();
  rp->add_option("-o,--output", rnd_out);
  auto* rc = rnd->add_subcommand("components", "induced component analysis");
  rc->add_option("--pattern", rnd_pattern)->required();
  rc->add_option("--subset", rnd_subset);
  auto* rf = rnd->add_subcommand("forest-partition", "interval forest split");
  rf->add_option("--pattern", rnd_pattern)->required();
  rf->add_option("--d", rnd_d)->required();

  // ---- ramsey ----
  auto* ram = app.add_subcommand("ramsey", "exact Ramsey computation");
  std::string ram_pattern, ram_patterns, ram_mode = "exhaustive";
  int ram_k = 1, ram_maxn = 6;
  auto* r1 = ram->add_subcommand("r1", "one-color oriented Ramsey number");
  r1->add_option("--pattern", ram_pattern)->required();
  r1->add_option("--max-n", ram_maxn)->required();
  r1->add_option("--mode", ram_mode)
      ->check(CLI::IsMember({"exhaustive", "search"}));
  auto* rk = ram->add_subcommand("rk", "k-color oriented Ramsey number");
  rk->add_option("--pattern", ram_pattern)->required();
  rk->add_option("--k", ram_k)->required();
  rk->add_option("--max-n", ram_maxn)->required();
  auto* ro = ram->add_subcommand("ordered", "ordered Ramsey number");
  ro->add_option("--pattern", ram_pattern)->required();
  ro->add_option("--k", ram_k);
  ro->add_option("--max-n", ram_maxn)->required();

  // ---- validate ----
  auto* val = app.add_subcommand("validate", "re-validate a certificate");
  std::string val_cert, val_pattern, val_host, val_label, val_f = "const:1";
  int val_s = 1;
  val->add_option("-i,--input", val_cert)->required();
  val->add_option("--pattern", val_pattern);
  val->add_option("--host", val_host);
  val->add_option("--labeling", val_label);
  val->add_option("--f", val_f);
  val->add_option("--s", val_s);

  CLI11_PARSE(app, argc, argv);
  arm_watchdog(opt.timeout_s);

  try {
    // mesh
    if (mesh_build->parsed()) return run_mesh_build(mesh_f, mesh_n, mesh_out);
    if (mesh_verify->parsed())
      return run_mesh_verify(mesh_f, mesh_in, opt.threads);

    // tourney
    if (tg->parsed()) {
      forge::io::save(tour_out, forge::io::serialize(forge::random_tournament(
                                    tour_n, need_seed(opt))));
      return 0;
    }
    if (tp->parsed()) {
      forge::io::save(tour_out,
                      forge::io::serialize(forge::paley_tournament(tour_q)));
      return 0;
    }
    if (tpow->parsed()) {
      const auto r = forge::io::load_tournament(tour_in);
      forge::io::save(tour_out,
                      forge::io::serialize(forge::lex_power(r, tour_m)));
      return 0;
    }
    if (tmax->parsed()) {
      const auto t = forge::io::load_tournament(tour_in);
      const auto w = forge::max_transitive_subtournament(t);
      forge::io::Certificate cert;
      cert.kind = "stats";
      cert.add("stat", "max-transitive");
      cert.add("size", w.size);
      cert.add("vertices", join_vertices(w.vertices));
      cert.add("pattern-digest", digest_of(forge::io::serialize(t)));
      emit(cert);
      return 0;
    }
    if (tmed->parsed()) {
      const auto t = forge::io::load_tournament(tour_in);
      const auto order = forge::median_ordering(t);
      forge::io::Certificate cert;
      cert.kind = "stats";
      cert.add("stat", "median-ordering");
      cert.add("order", join_vertices(order));
      cert.add("forward-edges", forge::forward_edges(t, order));
      cert.add("pattern-digest", digest_of(forge::io::serialize(t)));
      emit(cert);
      return 0;
    }
    if (tcon->parsed()) {
      const auto t = forge::io::load_tournament(tour_in);
      const auto h = forge::io::load_digraph(tour_pattern);
      const auto phi = forge::contains_copy(
          t, h,
          opt.seed_set ? std::optional<std::uint64_t>(opt.seed) : std::nullopt);
      if (!phi) {
        std::cout << "absent\n";
        return 1;
      }
      emit(embedding_cert(h, t, *phi));
      return 0;
    }

    // embed
    if (eg->parsed() || ed->parsed() || ef->parsed() || ei->parsed()) {
      const auto h = forge::io::load_digraph(emb_pattern);
      const auto t = forge::io::load_tournament(emb_host);
      if (eg->parsed()) {
        auto [d, order] = forge::degeneracy_order(h);
        (void)d;
        const auto out = forge::greedy_embed(h, t, order, emb_c);
        if (std::holds_alternative<forge::Embedding>(out)) {
          emit(embedding_cert(h, t, std::get<forge::Embedding>(out)));
          return 0;
        }
        const auto& fw = std::get<forge::FailureWitness>(out);
        std::cout << "failure step " << fw.failed_step << " vertex "
                  << fw.failed_vertex + 1 << '\n';
        return 1;
      }
      if (ed->parsed()) {
        const auto out = forge::find_dense_pair(h, t, emb_c);
        if (std::holds_alternative<forge::Embedding>(out))
          emit(embedding_cert(h, t, std::get<forge::Embedding>(out)));
        else
          emit(dense_pair_cert(t, std::get<forge::DensePair>(out)));
        return 0;
      }
      const auto sets = load_sets_or_full(emb_sets, h.order(), t.order());
      if (ef->parsed()) {
        const auto out = forge::forest_dense_pair(h, t, sets);
        if (std::holds_alternative<forge::Embedding>(out))
          emit(embedding_cert(h, t, std::get<forge::Embedding>(out)));
        else
          emit(dense_pair_cert(t, std::get<forge::DensePair>(out)));
        return 0;
      }
      emit(embedding_cert(h, t, forge::inner_stage(h, t, sets)));
      return 0;
    }

    // prefix
    if (ps->parsed()) {
      const auto h = forge::io::load_digraph(pre_pattern);
      const auto rho = forge::io::load_labeling(pre_label);
      const auto stats = forge::labeling_stats(h, rho);
      forge::io::Certificate cert;
      cert.kind = "stats";
      cert.add("stat", "labeling");
      cert.add("depth", stats.depth);
      cert.add("max-degree", stats.max_degree);
      cert.add("max-component", stats.max_component);
      cert.add("complexity", std::to_string(stats.complexity));
      cert.add("is-coloring", stats.is_coloring ? "yes" : "no");
      cert.add("is-forest", stats.is_forest_labeling ? "yes" : "no");
      cert.add("pattern-digest", digest_of(forge::io::serialize(h)));
      emit(cert);
      return 0;
    }
    if (ph->parsed() || pg->parsed()) {
      const auto h = forge::io::load_digraph(pre_pattern);
      const auto rho = ph->parsed() ? forge::height_prefix_coloring(h)
                                    : forge::graded_prefix_coloring(h);
      forge::io::save(pre_out, forge::io::serialize(rho, h.order()));
      return 0;
    }
    if (pk->parsed()) {
      const auto h = forge::io::load_digraph(pre_pattern);
      const auto t = forge::io::load_tournament(pre_host);
      const auto rho = forge::io::load_labeling(pre_label);
      const auto out = forge::build_skeleton(h, t, rho, pre_c, pre_force);
      if (std::holds_alternative<forge::Embedding>(out)) {
        emit(embedding_cert(h, t, std::get<forge::Embedding>(out)));
        return 0;
      }
      const auto& sk = std::get<forge::Skeleton>(out);
      forge::io::Certificate cert;
      cert.kind = "skeleton";
      cert.add("delta", std::to_string(sk.delta));
      cert.add("size", sk.size());
      for (const auto& [word, verts] : sk.sets)
        cert.add("set-" + (word.empty() ? std::string("-") : word),
                 join_vertices(verts));
      cert.add("pattern-digest", digest_of(forge::io::serialize(h)));
      cert.add("host-digest", digest_of(forge::io::serialize(t)));
      emit(cert);
      return 0;
    }
    if (pp->parsed()) {
      const auto h = forge::io::load_digraph(pre_pattern);
      const auto t = forge::io::load_tournament(pre_host);
      forge::Embedding phi;
      if (pre_mode == "coloring") {
        std::optional<forge::PrefixLabeling> rho;
        if (!pre_label.empty()) rho = forge::io::load_labeling(pre_label);
        phi = forge::embed_via_coloring(h, t, rho, pre_force);
      } else {
        if (pre_label.empty() || pre_label2.empty())
          throw forge::Error("two-labeling pipeline needs --labeling and --labeling2");
        phi = forge::embed_via_two_labelings(
            h, t, forge::io::load_labeling(pre_label),
            forge::io::load_labeling(pre_label2), pre_force);
      }
      emit(embedding_cert(h, t, phi));
      return 0;
    }
    if (pf->parsed()) {
      const auto h = forge::io::load_digraph(pre_pattern);
      const auto report = forge::forest_partition(h);
      forge::io::Certificate cert;
      cert.kind = "partition";
      cert.add("parts", report.parts);
      cert.add("max-component", report.max_component);
      for (int i = 0; i < report.parts; ++i)
        cert.add("part-" + std::to_string(i + 1),
                 join_vertices(report.partition.parts[i]));
      cert.add("pattern-digest", digest_of(forge::io::serialize(h)));
      emit(cert);
      return 0;
    }

    // walk
    if (wc->parsed()) {
      const auto t = forge::io::load_tournament(wk_host);
      const auto f = forge::MonotoneFunction::parse(wk_f);
      const auto walk = forge::io::load_walk(wk_in);
      const auto bad = forge::walk_violation(t, f, wk_s, walk);
      if (bad) {
        std::cout << bad->describe() << '\n';
        return 1;
      }
      std::cout << "valid length " << walk.length() << '\n';
      return 0;
    }
    if (we->parsed()) {
      const auto t = forge::io::load_tournament(wk_host);
      std::istringstream cin_(forge::io::slurp(wk_emb));
      const auto cert = forge::io::parse_certificate(cin_);
      if (cert.kind != "embedding")
        throw forge::Error("walk extract expects an embedding certificate");
      forge::Embedding phi{split_vertices(*cert.find("map"))};
      const auto walk = forge::extract_walk(
          phi, static_cast<int>(phi.map.size()), t.order(), wk_m);
      forge::io::save(wk_out, forge::io::serialize(walk));
      return 0;
    }
    if (ws->parsed()) {
      const auto t = forge::io::load_tournament(wk_host);
      const auto f = forge::MonotoneFunction::parse(wk_f);
      if (wk_shi >= wk_slo && wk_shi > 0) {
        const auto report =
            forge::shortness_probe(t, f, wk_slo, wk_shi, wk_t, wk_budget);
        if (!report.t_in_lemma_range)
          std::cout << "# t below the asymptotic hypothesis range\n";
        for (const auto& line : report.lines)
          std::cout << "s " << line.s << " L " << line.best_length
                    << (line.exact ? " exact" : " lower-bound")
                    << (line.within_2st ? " short-consistent" : " not-short")
                    << (line.within_f ? " within-f" : " exceeds-f") << '\n';
        return 0;
      }
      const auto est = forge::longest_walk(t, f, wk_s, wk_budget);
      forge::io::Certificate cert;
      cert.kind = "walk";
      cert.add("s", est.s);
      cert.add("length", est.best_length);
      cert.add("exact", est.exact ? "yes" : "no");
      std::ostringstream runs;
      for (std::size_t i = 0; i < est.best.runs.size(); ++i) {
        if (i) runs << ',';
        runs << est.best.runs[i].first + 1 << ':' << est.best.runs[i].second;
      }
      cert.add("runs", runs.str());
      cert.add("valid", "yes");
      cert.add("host-digest", digest_of(forge::io::serialize(t)));
      emit(cert);
      return 0;
    }

    // random
    if (rg->parsed()) {
      const std::uint64_t seed = need_seed(opt);
      if (rnd_trials > 1) {
        int simple = 0;
        for (int i = 0; i < rnd_trials; ++i)
          simple += forge::sample_pairing(rnd_n, rnd_d,
                                          forge::Rng::fork(seed, i).next())
                        .simple;
        std::cout << "simple-rate "
                  << static_cast<double>(simple) / rnd_trials << '\n';
        return 0;
      }
      const auto h = forge::sample_grd_oriented(rnd_n, rnd_d, seed);
      if (!rnd_out.empty()) forge::io::save(rnd_out, forge::io::serialize(h));
      return 0;
    }
    if (rp->parsed()) {
      const auto h = forge::sample_gnp_oriented(rnd_n, rnd_p, need_seed(opt));
      if (!rnd_out.empty()) forge::io::save(rnd_out, forge::io::serialize(h));
      std::cout << "edges " << h.num_edges() << '\n';
      return 0;
    }
    if (rc->parsed()) {
      const auto h = forge::io::load_digraph(rnd_pattern);
      std::vector<int> subset;
      if (rnd_subset.empty()) {
        subset.resize(h.order());
        for (int v = 0; v < h.order(); ++v) subset[v] = v;
      } else {
        const auto dash = rnd_subset.find('-');
        const int lo = std::stoi(rnd_subset.substr(0, dash));
        const int hi = std::stoi(rnd_subset.substr(dash + 1));
        for (int v = lo - 1; v < hi; ++v) subset.push_back(v);
      }
      for (const auto& comp : forge::component_analysis(h, subset))
        std::cout << "component size " << comp.vertices.size() << " cycles "
                  << comp.cycle_count << '\n';
      return 0;
    }
    if (rf->parsed()) {
      const auto h = forge::io::load_digraph(rnd_pattern);
      const auto out = forge::random_forest_partition(h, rnd_d);
      if (!out.success) {
        std::cout << "failure: " << out.failure_reason << '\n';
        return 1;
      }
      forge::io::Certificate cert;
      cert.kind = "partition";
      cert.add("parts", out.parts);
      cert.add("max-component", out.max_component);
      for (int i = 0; i < out.parts; ++i)
        cert.add("part-" + std::to_string(i + 1),
                 join_vertices(out.partition.parts[i]));
      cert.add("pattern-digest", digest_of(forge::io::serialize(h)));
      emit(cert);
      return 0;
    }

    // ramsey
    if (r1->parsed() || rk->parsed() || ro->parsed()) {
      if (ro->parsed()) {
        const auto g = forge::io::load_ordered_graph(ram_pattern);
        const auto res = forge::ordered_ramsey(
            std::vector<forge::OrderedGraph>(ram_k, g), ram_maxn);
        forge::io::Certificate cert;
        cert.kind = "ramsey-value";
        cert.add("flavor", "ordered");
        cert.add("k", ram_k);
        cert.add("value",
                 res.value < 0 ? "inconclusive" : std::to_string(res.value));
        cert.add("max-n", res.max_n_checked);
        cert.add("exhaustive", res.exhaustive ? "yes" : "no");
        emit(cert);
        return res.value < 0 ? 1 : 0;
      }
      const auto h = forge::io::load_digraph(ram_pattern);
      forge::io::Certificate cert;
      cert.kind = "ramsey-value";
      if (rk->parsed()) {
        const auto res = forge::oriented_ramsey_k(h, ram_k, ram_maxn);
        cert.add("flavor", "oriented-k");
        cert.add("k", ram_k);
        cert.add("value",
                 res.value < 0 ? "inconclusive" : std::to_string(res.value));
        cert.add("max-n", res.max_n_checked);
        cert.add("exhaustive", res.exhaustive ? "yes" : "no");
        cert.add("pattern-digest", digest_of(forge::io::serialize(h)));
        emit(cert);
        return res.value < 0 ? 1 : 0;
      }
      if (ram_mode == "search") {
        const auto avoider =
            forge::find_avoider_search(h, ram_maxn, need_seed(opt));
        cert.add("flavor", "oriented-1");
        cert.add("mode", "search");
        cert.add("value", avoider ? "> " + std::to_string(ram_maxn)
                                  : "inconclusive");
        cert.add("exhaustive", "no");
        cert.add("pattern-digest", digest_of(forge::io::serialize(h)));
        if (avoider) {
          std::string ser = forge::io::serialize(*avoider);
          for (char& ch : ser)
            if (ch == '\n') ch = '/';
          cert.add("witness-host", ser);
        }
        emit(cert);
        return avoider ? 0 : 1;
      }
      const auto res = forge::oriented_ramsey_1(h, ram_maxn, opt.threads);
      cert.add("flavor", "oriented-1");
      cert.add("mode", "exhaustive");
      cert.add("value",
               res.value < 0 ? "inconclusive" : std::to_string(res.value));
      cert.add("max-n", res.max_n_checked);
      cert.add("exhaustive", "yes");
      cert.add("pattern-digest", digest_of(forge::io::serialize(h)));
      if (res.witness) {
        std::string ser = forge::io::serialize(*res.witness);
        for (char& ch : ser)
          if (ch == '\n') ch = '/';
        cert.add("witness-host", ser);
      }
      emit(cert);
      return res.value < 0 ? 1 : 0;
    }

    if (val->parsed())
      return run_validate(val_cert, val_pattern, val_host, val_label, val_f,
                          val_s);
  } catch (const forge::PreconditionError& e) {
    std::cerr << "precondition: " << e.what();
    if (e.required_n > 0) std::cerr << " (needs N >= " << e.required_n << ")";
    std::cerr << '\n';
    return 1;
  } catch (const forge::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const forge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
