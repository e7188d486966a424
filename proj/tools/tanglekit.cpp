// tanglekit: command-line front end. Every command prints one JSON document
// with a "meta" block; the exit code is 0 for found/valid/true, 1 for
// none/invalid/false and 2 for usage, input and guard errors.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <random>

#include "tanglekit/io.hpp"
#include "tanglekit/json.hpp"

using namespace tk;

namespace {

struct Outcome {
  json body;
  int code = 0;
};

struct Settings {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string output;
  Guards guards;
};

MultiGraph load_graph(const std::string& path) {
  if (path.ends_with(".json")) return parse_json_as<MultiGraph>(read_text_file(path));
  return read_graph_file(path);
}

template <class T>
T load(const std::string& path) {
  return parse_json_as<T>(read_text_file(path));
}

// A file holding the value itself, an object with it under `key`, or a
// certificate whose arrangement holds it.
template <class T>
T load_wrapped(const std::string& path, const char* key) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  if (j.is_object() && j.contains("arrangement")) j = j["arrangement"];
  if (j.is_object() && j.contains(key)) j = j[key];
  return parse_json_as<T>(j.dump());
}

Outcome answer(json body, bool yes) { return {std::move(body), yes ? 0 : 1}; }

// Guard flags are registered on the top-level app and start from the
// environment, so a flag given on the command line wins.
void add_guard_flags(CLI::App& app, Guards& g) {
  auto cap = [&](const char* name, auto& field) {
    app.add_option(name, field)->capture_default_str()->check(CLI::PositiveNumber);
  };
  cap("--max-separation-vertices", g.max_separation_vertices);
  cap("--max-tangle-vertices", g.max_tangle_vertices);
  cap("--max-separations", g.max_separations);
  cap("--max-subdivision-vertices", g.max_subdivision_vertices);
  cap("--max-minor-vertices", g.max_minor_vertices);
  cap("--max-spider-vertices", g.max_spider_vertices);
  cap("--max-embeddings", g.max_embeddings);
  cap("--max-metric-walk-length", g.max_metric_walk_length);
  app.add_flag("--override-guards", g.override_vertex_caps, "Lift the vertex-count caps");
}

using Runner = std::function<Outcome()>;

void tangle_commands(CLI::App& app, Settings& s, Runner& run) {
  auto* tangle = app.add_subcommand("tangle", "Tangle axioms and enumeration")->require_subcommand(1);

  auto* check = tangle->add_subcommand("check", "Check (T1)-(T3) for a tangle file");
  static std::string graph, tangle_file;
  static int order = 0;
  check->add_option("--graph", graph)->required();
  check->add_option("--tangle", tangle_file)->required();
  check->callback([&] {
    run = [&] {
      TangleReport r = is_tangle(load_graph(graph), load<Tangle>(tangle_file), s.guards);
      return answer({{"tangle", r}}, r.ok);
    };
  });

  auto* enumerate = tangle->add_subcommand("enum", "Every tangle of the given order");
  enumerate->add_option("--graph", graph)->required();
  enumerate->add_option("--order", order)->required()->check(CLI::NonNegativeNumber);
  enumerate->callback([&] {
    run = [&] {
      std::vector<Tangle> ts = enumerate_tangles(load_graph(graph), order, s.guards);
      return answer({{"order", order}, {"count", ts.size()}, {"tangles", ts}}, !ts.empty());
    };
  });
}

void free_command(CLI::App& app, Settings& s, Runner& run) {
  auto* cmd = app.add_subcommand("free", "k-freeness of a vertex, or freeness of a set");
  static std::string graph, tangle_file;
  static std::vector<VertexId> set;
  static std::optional<VertexId> vertex;
  static int k = 0;
  cmd->add_option("--graph", graph)->required();
  cmd->add_option("--tangle", tangle_file)->required();
  auto* v = cmd->add_option("--vertex", vertex);
  auto* kk = cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  auto* xs = cmd->add_option("--set", set)->delimiter(',');
  v->needs(kk);
  v->excludes(xs);
  cmd->callback([&] {
    run = [&] {
      MultiGraph g = load_graph(graph);
      Tangle t = load<Tangle>(tangle_file);
      if (vertex) {
        bool f = is_k_free_vertex(g, t, *vertex, k);
        return answer({{"vertex", *vertex}, {"k", k}, {"free", f}}, f);
      }
      if (set.empty()) throw CLI::ValidationError("free", "give --vertex with --k, or --set");
      bool f = is_free(g, t, set);
      return answer({{"set", set}, {"free", f}}, f);
    };
  });
  (void)s;
}

void model_commands(CLI::App& app, Settings& s, Runner& run) {
  static std::string host, pattern, model;
  for (bool minor : {true, false}) {
    const char* name = minor ? "minor" : "subdivision";
    auto* group = app.add_subcommand(name, minor ? "Minor models" : "Subdivision models")->require_subcommand(1);
    auto* find = group->add_subcommand("find", "Search for a model of the pattern in the host");
    find->add_option("--host", host)->required();
    find->add_option("--pattern", pattern)->required();
    find->callback([&, minor] {
      run = [&, minor] {
        MultiGraph g = load_graph(host), h = load_graph(pattern);
        json body;
        bool found;
        if (minor) {
          auto m = find_minor(g, h, s.guards);
          found = m.has_value();
          body = {{"found", found}, {"model", m ? json(*m) : json(nullptr)}};
        } else {
          auto m = find_subdivision(g, h, s.guards);
          found = m.has_value();
          body = {{"found", found}, {"model", m ? json(*m) : json(nullptr)}};
        }
        return answer(body, found);
      };
    });
    auto* verify = group->add_subcommand("verify", "Check a model file");
    verify->add_option("--host", host)->required();
    verify->add_option("--pattern", pattern)->required();
    verify->add_option("--model", model)->required();
    verify->callback([&, minor] {
      run = [&, minor] {
        MultiGraph g = load_graph(host), h = load_graph(pattern);
        CheckReport r = minor ? verify_minor(g, h, load<MinorModel>(model))
                              : verify_subdivision(g, h, load<SubdivisionModel>(model));
        return answer({{"report", r}}, r.ok);
      };
    });
  }
}

void heads_command(CLI::App* group, Settings& s, Runner& run) {
  auto* heads = group->add_subcommand("heads", "h disjoint d-spiders with free heads in a set");
  heads->set_help_flag("--help", "Print this help message and exit");
  static std::string graph, tangle_file;
  static std::vector<VertexId> set;
  static int d = 0, h = 0;
  heads->add_option("--graph", graph)->required();
  heads->add_option("--tangle", tangle_file)->required();
  heads->add_option("--set", set)->required()->delimiter(',');
  heads->add_option("--d", d)->required()->check(CLI::PositiveNumber);
  heads->add_option("--h", h)->required()->check(CLI::NonNegativeNumber);
  heads->callback([&] {
    run = [&] {
      Tangle t = load<Tangle>(tangle_file);
      if (t.order < d * h)
        std::cerr << "tanglekit: warning: tangle order " << t.order << " is below d*h = " << d * h << "\n";
      auto p = free_head_packing(load_graph(graph), t, set, d, h);
      return answer({{"d", d}, {"h", h}, {"found", p.has_value()}, {"heads", p ? json(*p) : json(nullptr)}},
                    p.has_value());
    };
  });
  (void)s;
}

void spider_commands(CLI::App& app, Settings& s, Runner& run) {
  auto* group = app.add_subcommand("spider", "Spider packings and covers")->require_subcommand(1);
  static std::string graph;
  static std::vector<VertexId> from, to;
  static int d = 0, h = 0;
  auto common = [&](CLI::App* c, bool with_h) {
    // --h would clash with the short help flag
    c->set_help_flag("--help", "Print this help message and exit");
    c->add_option("--graph", graph)->required();
    c->add_option("--from", from)->required()->delimiter(',');
    c->add_option("--to", to)->required()->delimiter(',');
    c->add_option("--d", d)->required()->check(CLI::PositiveNumber);
    if (with_h) c->add_option("--h", h)->required()->check(CLI::PositiveNumber);
  };
  auto* dichotomy = group->add_subcommand("dichotomy", "h disjoint d-spiders, or a small cover");
  common(dichotomy, true);
  dichotomy->callback([&] {
    run = [&] {
      DichotomyResult r = erdos_posa_dichotomy(load_graph(graph), from, to, d, h, s.guards);
      return answer({{"d", d}, {"h", h}, {"result", r}}, true);
    };
  });
  auto* cover = group->add_subcommand("cover", "Minimum set meeting every d-spider");
  common(cover, false);
  cover->callback([&] {
    run = [&] {
      std::vector<VertexId> c = min_spider_cover(load_graph(graph), from, to, d, s.guards);
      return answer({{"d", d}, {"cover", c}, {"size", c.size()}}, true);
    };
  });
  auto* pack = group->add_subcommand("pack", "h pairwise disjoint d-spiders");
  common(pack, true);
  pack->callback([&] {
    run = [&] {
      auto p = find_spider_packing(load_graph(graph), from, to, d, h, s.guards);
      return answer({{"d", d}, {"h", h}, {"found", p.has_value()}, {"packing", p ? json(*p) : json(nullptr)}},
                    p.has_value());
    };
  });
  heads_command(group, s, run);
}

void vortex_commands(CLI::App& app, Settings& s, Runner& run) {
  auto* group = app.add_subcommand("vortex", "Vortex depth and linear decompositions")->require_subcommand(1);
  static std::string graph, society;
  static std::optional<int> rho;
  auto* depth = group->add_subcommand("depth", "Boundary linkage depth of a society");
  depth->add_option("--graph", graph)->required();
  depth->add_option("--society", society)->required();
  depth->add_option("--rho", rho, "Also report whether the society is a rho-vortex");
  depth->callback([&] {
    run = [&] {
      int dpt = vortex_depth(load_graph(graph), load<Society>(society));
      json body = {{"depth", dpt}};
      if (!rho) return answer(body, true);
      body["rho"] = *rho;
      body["vortex"] = dpt <= *rho;
      return answer(body, dpt <= *rho);
    };
  });
  auto* decompose = group->add_subcommand("decompose", "Linear decomposition of a rho-vortex");
  decompose->add_option("--graph", graph)->required();
  decompose->add_option("--society", society)->required();
  decompose->add_option("--rho", rho)->required();
  decompose->callback([&] {
    run = [&] {
      MultiGraph g = load_graph(graph);
      Society soc = load<Society>(society);
      if (!is_rho_vortex(g, soc, *rho))
        return answer({{"rho", *rho}, {"depth", vortex_depth(g, soc)}, {"decomposition", nullptr}}, false);
      LinearDecomposition dec = vortex_linear_decomposition(g, soc, *rho);
      CheckReport r = check_linear_decomposition(g, soc, dec);
      return answer({{"rho", *rho}, {"decomposition", dec}, {"report", r}}, r.ok);
    };
  });
  (void)s;
}

void segregation_commands(CLI::App& app, Settings& s, Runner& run) {
  auto* group = app.add_subcommand("segregation", "Segregations and centrality")->require_subcommand(1);
  static std::string graph, seg, tangle_file;
  auto* check = group->add_subcommand("check", "Societies cover G and meet only in boundaries");
  check->add_option("--graph", graph)->required();
  check->add_option("--segregation", seg)->required();
  check->callback([&] {
    run = [&] {
      CheckReport r = is_segregation(load_graph(graph), load_wrapped<Segregation>(seg, "segregation"));
      return answer({{"report", r}}, r.ok);
    };
  });
  auto* central = group->add_subcommand("central", "No society holds the big side of a half-order member");
  central->add_option("--graph", graph)->required();
  central->add_option("--segregation", seg)->required();
  central->add_option("--tangle", tangle_file)->required();
  central->callback([&] {
    run = [&] {
      CentralityReport r =
          is_T_central(load_graph(graph), load_wrapped<Segregation>(seg, "segregation"), load<Tangle>(tangle_file));
      return answer({{"report", r}}, r.ok);
    };
  });
  (void)s;
}

void embed_commands(CLI::App& app, Settings& s, Runner& run) {
  auto* group = app.add_subcommand("embed", "Rotation systems, genus and mf")->require_subcommand(1);
  static std::string graph, embedding;
  static int genus = 0, limit = 10;
  static bool at_most = false;
  static std::vector<int> faces;

  auto* f = group->add_subcommand("faces", "Trace the faces of an embedding");
  f->add_option("--embedding", embedding)->required();
  f->callback([&] {
    run = [&] {
      std::vector<Face> fs = trace_faces(load<RotationEmbedding>(embedding));
      return answer({{"count", fs.size()}, {"faces", fs}}, true);
    };
  });

  auto* g = group->add_subcommand("genus", "Euler genus and orientability");
  g->add_option("--embedding", embedding)->required();
  g->callback([&] {
    run = [&] {
      RotationEmbedding e = load<RotationEmbedding>(embedding);
      return answer({{"euler_genus", euler_genus(e)}, {"orientable", is_orientable(e)}, {"two_cell", is_2cell(e)}},
                    true);
    };
  });

  auto* en = group->add_subcommand("enum", "Embeddings up to an Euler genus");
  en->add_option("--graph", graph)->required();
  en->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
  en->add_option("--limit", limit, "How many embeddings to print")->capture_default_str();
  en->callback([&] {
    run = [&] {
      long count = 0;
      std::vector<RotationEmbedding> shown;
      for_each_embedding(load_graph(graph), genus, s.guards, [&](const RotationEmbedding& e) {
        if (static_cast<int>(shown.size()) < limit) shown.push_back(e);
        ++count;
        return true;
      });
      return answer({{"max_euler_genus", genus}, {"count", count}, {"embeddings", shown}}, count > 0);
    };
  });

  auto* m = group->add_subcommand("mf", "Fewest regions touching every vertex of degree at least 4");
  m->add_option("--graph", graph)->required();
  m->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
  m->add_flag("--at-most", at_most, "Minimise over every Euler genus up to --genus");
  m->callback([&] {
    run = [&] {
      int v = mf(load_graph(graph), genus, s.guards, at_most);
      return answer({{"mf", v == kInfinity ? json(nullptr) : json(v)}}, v != kInfinity);
    };
  });

  auto* n = group->add_subcommand("nice", "Check a nice embedding with its chosen faces");
  n->add_option("--graph", graph)->required();
  n->add_option("--embedding", embedding)->required();
  n->add_option("--faces", faces)->required()->delimiter(',');
  n->callback([&] {
    run = [&] {
      CheckReport r = is_nice_embedding(load_graph(graph), load<RotationEmbedding>(embedding), faces, s.guards);
      return answer({{"report", r}}, r.ok);
    };
  });
}

void metric_commands(CLI::App& app, Settings& s, Runner& run) {
  auto* group = app.add_subcommand("metric", "Respectful tangles and the atom metric")->require_subcommand(1);
  static std::string embedding, tangle_file;
  auto* table = group->add_subcommand("table", "The metric m_T on atoms");
  table->add_option("--embedding", embedding)->required();
  table->add_option("--tangle", tangle_file)->required();
  table->callback([&] {
    run = [&] {
      AtomMetric m = atom_metric(load<RotationEmbedding>(embedding), load<Tangle>(tangle_file), s.guards);
      json body = {{"metric", m}};
      if (s.format == "csv") body = {{"csv", metric_csv(m)}};
      return answer(body, true);
    };
  });
  auto* respectful = group->add_subcommand("respectful", "Every short radial cycle has a disk side in the tangle");
  respectful->add_option("--embedding", embedding)->required();
  respectful->add_option("--tangle", tangle_file)->required();
  respectful->callback([&] {
    run = [&] {
      RespectReport r = is_respectful(load<RotationEmbedding>(embedding), load<Tangle>(tangle_file), s.guards);
      json body = {{"ok", r.ok}};
      if (!r.ok) {
        body["message"] = r.message;
        body["cycle"] = r.cycle;
      }
      return answer({{"report", body}}, r.ok);
    };
  });
}

void certify_commands(CLI::App& app, Settings& s, Runner& run) {
  auto* group = app.add_subcommand("certify", "Outcome and arrangement certificates")->require_subcommand(1);
  static std::string graph, tangle_file, pattern, cert, params_file;
  static OutcomeParams params;
  static bool trust = false;

  auto* outcome = group->add_subcommand("outcome", "Check every clause of an outcome certificate");
  outcome->add_option("--graph", graph)->required();
  outcome->add_option("--tangle", tangle_file)->required();
  outcome->add_option("--pattern", pattern)->required();
  outcome->add_option("--certificate", cert)->required();
  outcome->add_option("--params", params_file, "JSON with d, xi, kappa, rho, genus; flags override it");
  auto* d = outcome->add_option("--d", params.d);
  auto* xi = outcome->add_option("--xi", params.xi);
  auto* kappa = outcome->add_option("--kappa", params.kappa);
  auto* rho = outcome->add_option("--rho", params.rho);
  auto* genus = outcome->add_option("--genus", params.genus);
  outcome->add_flag("--trust-tangle", trust, "Skip checking the tangle axioms");
  outcome->callback([=, &s, &run] {
    run = [=, &s] {
      OutcomeParams p = params_file.empty() ? OutcomeParams{} : load<OutcomeParams>(params_file);
      if (d->count()) p.d = params.d;
      if (xi->count()) p.xi = params.xi;
      if (kappa->count()) p.kappa = params.kappa;
      if (rho->count()) p.rho = params.rho;
      if (genus->count()) p.genus = params.genus;
      Verdict v = check_outcome(load_graph(graph), load<Tangle>(tangle_file), load_graph(pattern),
                                load<OutcomeCertificate>(cert), p, s.guards, trust);
      return answer({{"params", p}, {"verdict", v}}, v.accepted);
    };
  });

  auto* arrangement = group->add_subcommand("arrangement", "Check a proper arrangement and draw its skeleton");
  arrangement->add_option("--graph", graph)->required();
  arrangement->add_option("--certificate", cert)->required();
  arrangement->callback([&] {
    run = [&] {
      MultiGraph g = load_graph(graph);
      ArrangementCertificate c = load<ArrangementCertificate>(cert);
      CheckReport plain = is_arrangement(g, c);
      CheckReport proper = plain ? is_proper_arrangement(g, c) : plain;
      json body = {{"arrangement", plain}, {"proper", proper}};
      if (proper) {
        RotationEmbedding trunk = build_trunk(g, c);
        body["skeleton"] = build_skeleton(g, c);
        body["trunk"] = trunk;
        body["trunk_weakly_subcubic"] = is_weakly_subcubic(trunk.host);
      }
      return answer(body, proper.ok);
    };
  });
}

void gen_commands(CLI::App& app, Settings& s, Runner& run) {
  auto* group = app.add_subcommand("gen", "Seeded fixture generation")->require_subcommand(1);
  static int n = 8;
  static double p = 0.3;
  auto* random = group->add_subcommand("random", "G(n, p) from --seed");
  random->add_option("--n", n)->capture_default_str()->check(CLI::NonNegativeNumber);
  random->add_option("--p", p)->capture_default_str()->check(CLI::Range(0.0, 1.0));
  random->callback([&] {
    run = [&] {
      std::mt19937_64 rng(s.seed);
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (coin(rng) < p) pairs.emplace_back(i, j);
      return answer({{"n", n}, {"p", p}, {"graph", MultiGraph::from_edge_pairs(n, pairs)}}, true);
    };
  });
}

void write_output(const Settings& s, const std::string& text) {
  if (s.output.empty() || s.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::filesystem::path target(s.output);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InputError("cannot write " + tmp.string());
    out << text;
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace

int main(int argc, char** argv) {
  Settings s;
  s.guards = Guards::from_environment();
  Runner run;

  CLI::App app{"Tangles, minors, vortices and surface certificates"};
  app.set_version_flag("--version", TANGLEKIT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", s.seed, "Seed recorded in meta and used by gen")->capture_default_str();
  app.add_option("--format", s.format, "json, or csv for metric tables")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("-o,--output", s.output, "Write here instead of stdout");
  add_guard_flags(app, s.guards);

  tangle_commands(app, s, run);
  free_command(app, s, run);
  model_commands(app, s, run);
  spider_commands(app, s, run);
  vortex_commands(app, s, run);
  segregation_commands(app, s, run);
  embed_commands(app, s, run);
  metric_commands(app, s, run);
  certify_commands(app, s, run);
  gen_commands(app, s, run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json meta = {{"version", TANGLEKIT_VERSION}, {"seed", s.seed}, {"guards", s.guards}};
  try {
    std::vector<std::string> path;
    for (const CLI::App* sub = &app; !sub->get_subcommands().empty(); sub = sub->get_subcommands().front())
      path.push_back(sub->get_subcommands().front()->get_name());
    meta["command"] = path;
    bool csv_ok = path == std::vector<std::string>{"metric", "table"};
    if (s.format == "csv" && !csv_ok) throw CLI::ValidationError("--format", "csv is only available for metric table");

    Outcome out = run();
    if (s.format == "csv") {
      write_output(s, out.body["csv"].get<std::string>());
    } else {
      json doc = {{"meta", meta}};
      doc.update(out.body);
      write_output(s, doc.dump(2) + "\n");
    }
    return out.code;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "tanglekit: " << e.what() << "\n";
    return 2;
  } catch (const GuardError& e) {
    json doc = {{"meta", meta}, {"error", {{"kind", "guard"}, {"message", e.what()}}}};
    std::cout << doc.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    const char* kind = dynamic_cast<const PreconditionError*>(&e) ? "precondition" : "input";
    json doc = {{"meta", meta}, {"error", {{"kind", kind}, {"message", e.what()}}}};
    std::cout << doc.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "tanglekit: " << e.what() << "\n";
    return 2;
  }
}
